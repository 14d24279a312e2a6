#pragma once

#include "fcl/laurent.hpp"
#include "fcl/partition.hpp"

#include <map>
#include <string>

namespace fcl {

using FockVector = std::map<Partition, LaurentPoly, DescLex>;

FockVector basis_vector(const Partition& p, const LaurentPoly& c = 1);
void accumulate(FockVector& u, const Partition& p, const LaurentPoly& c);
FockVector add(const FockVector& a, const FockVector& b);
FockVector scale(const FockVector& a, const LaurentPoly& c);
FockVector subtract(const FockVector& a, const FockVector& b);
std::map<Partition, Int, DescLex> at_one(const FockVector& u);
std::string to_string(const FockVector& u);

// Knobs for deliberately breaking the action (negative controls in tests).
struct FockRules {
    int right_sign = 1;  // multiplies N_i^r in f_i
};

// N_i^r for adding x to p, N_i^l for the pair (p, p+x), N_i(p).
int n_right(const Partition& p, const Node& x, int n, int i);
int n_left(const Partition& p, const Node& x, int n, int i);
int n_i(const Partition& p, int n, int i);

FockVector f_apply(int n, int i, const FockVector& u, const FockRules& rules = {});
FockVector e_apply(int n, int i, const FockVector& u, const FockRules& rules = {});
LaurentPoly h_eigenvalue(const Partition& p, int n, int i);  // q^{N_i}
LaurentPoly d_eigenvalue(const Partition& p, int n);         // q^{-m_0}
FockVector divided_f(int n, int i, int k, const FockVector& u);

// gl_infinity generators at q = 1, by content, and their residue sums
std::vector<Partition> classical_f(const Partition& p, int content);
std::vector<Partition> classical_e(const Partition& p, int content);
std::vector<Partition> folded_f(const Partition& p, int n, int i);
std::vector<Partition> folded_e(const Partition& p, int n, int i);

struct RelationReport {
    bool ok = true;
    long checks = 0;
    std::string failure;
};

// [e_i,f_j], both q-Serre relations and the weight relations on span Pi(<= m)
RelationReport relation_check(int n, int m, const FockRules& rules = {});

} // namespace fcl
