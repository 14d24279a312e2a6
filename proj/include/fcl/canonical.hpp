#pragma once

#include "fcl/fock.hpp"

#include <map>
#include <vector>

namespace fcl {

struct Ladder {
    int index;    // l = row + (n-1)(col-1)
    int residue;  // (1 - l) mod n
    int count;
    bool operator==(const Ladder&) const = default;
};

std::vector<Ladder> ladders(const Partition& mu, int n);

// The bar-invariant monomial built from the ladders.  increasing_used is set
// when the fallback application order was needed.
FockVector monomial_A(const Partition& mu, int n, bool* increasing_used = nullptr);

// Rows x columns table keyed by partitions.
template <class T>
struct PartitionTable {
    int n = 0, m = 0;
    std::vector<Partition> rows, cols;
    std::vector<std::vector<T>> entries;

    const T& at(const Partition& r, const Partition& c) const
    {
        return entries.at(index_of(rows, r)).at(index_of(cols, c));
    }
    static std::size_t index_of(const std::vector<Partition>& v, const Partition& p)
    {
        for (std::size_t k = 0; k < v.size(); ++k)
            if (v[k] == p) return k;
        return v.size();
    }
};

using DecompositionMatrix = PartitionTable<LaurentPoly>;
using IntegerMatrix = PartitionTable<Int>;

struct CanonicalBasis {
    int n = 0, m = 0;
    std::map<Partition, FockVector, DescLex> G;  // keyed by n-regular mu
    bool increasing_order_used = false;
};

const CanonicalBasis& canonical_basis(int n, int m);  // cached
DecompositionMatrix global_lower_basis(int n, int m);
IntegerMatrix decomposition_matrix(int n, int m);

// coordinates of u (of degree m, inside V(Lambda_0)) in the basis G(mu)
std::map<Partition, LaurentPoly, DescLex> expand_in_canonical(const FockVector& u, const CanonicalBasis& B);

// c_{lambda mu}(q): coefficient of G(lambda) in (sum_i f_i) G(mu)
DecompositionMatrix restriction_coeffs(int n, int m);

bool js_canonical(const Partition& p, int n);

} // namespace fcl
