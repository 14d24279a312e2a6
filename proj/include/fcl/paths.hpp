#pragma once

#include "fcl/errors.hpp"
#include "fcl/laurent.hpp"
#include "fcl/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fcl {

// Lambda_0-path given by gamma(0..k*-1); gamma(k) = k mod n afterwards.
struct PathWord {
    int n = 2;
    std::vector<int> gamma;

    PathWord() = default;
    PathWord(int n, std::vector<int> gamma);  // trims trailing ground entries
    int kstar() const { return static_cast<int>(gamma.size()); }
    int at(int k) const { return k < kstar() ? gamma[k] : static_cast<int>(pmod(k, n)); }
    std::string str() const;
    bool operator==(const PathWord&) const = default;
};

Partition to_partition(const PathWord& p);
PathWord to_path(const Partition& p, int n);

// p_0, ..., p_{k*} as level-1 weights (fundamental part only)
std::vector<Weight> path_weights(const PathWord& p);
long energy(const PathWord& p);
struct EnergyWeight {
    long energy;
    Weight weight;  // p_0 - E delta
};
EnergyWeight energy_weight(const PathWord& p);
bool is_restricted(const PathWord& p, int j);

struct FowLabel {
    enum Kind { none, single, all } kind = none;
    int j = -1;
};
FowLabel fow_classify(const Partition& p, int n);
// the bare edge-sum test, for any partition (no regularity requirement)
FowLabel fow_edge_condition(const Partition& p, int n);
bool js_combinatorial(const Partition& p, int n);

// b^{Lambda_s+Lambda_t}_{Lambda_j Lambda_0}(q; L) summed over paths with k* <= L
LaurentPoly branching_poly_paths(int n, int j, int s, int t, int L);
// series exact to degree D (uses L = n*D)
TruncatedSeries branching_series_paths(int n, int j, int s, int t, int D);
int path_cutoff_for_degree(int n, int D);

// highest-lifts of the restricted paths counted above, with their energies
struct RestrictedPath {
    PathWord path;
    Partition lift;
    long energy;
};
std::vector<RestrictedPath> restricted_paths(int n, int j, int s, int t, int L);

// JS partitions of n-core `core` and n-weight d
std::vector<Partition> js_set(int n, const Partition& core, int d);
TruncatedSeries chi_js_direct(int n, const Partition& core, int D);

// sum over height sequences l_1..l_{m+2} of q^{Phi_m}
LaurentPoly abf_sum_direct(int L, int a, int b, int c, int m);

} // namespace fcl
