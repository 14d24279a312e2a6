#pragma once

#include "fcl/laurent.hpp"
#include "fcl/partition.hpp"

#include <string>
#include <vector>

namespace fcl {

// finite sl_n Cartan data, indices 1..n-1
struct CartanData {
    int n = 2;
    std::vector<std::vector<long>> C;
    std::vector<std::vector<Exponent>> Cinv;  // min(i,j)(n-max(i,j))/n

    explicit CartanData(int n);
    // unit vector e_i in Z^{n-1}; e_n (and e_0) is zero
    std::vector<Exponent> unit(int i) const;
};

struct FermionicResult {
    LaurentPoly raw;         // rational exponents as given by the formula
    LaurentPoly normalized;  // shifted so the lowest term sits where the path sum's does
    Exponent shift = 0;      // raw lowest exponent minus path lowest exponent
    bool agrees = false;     // normalized == branching_poly_paths
    bool swapped = false;    // s and t exchanged before evaluation
};

FermionicResult fermionic_poly(int n, int j, int s, int t, int L, bool swap_st = false);
TruncatedSeries fermionic_limit(int n, int j, int s, int t, int D);

TruncatedSeries rocha_caridi(int mparam, int r, int s, int N);

// X_m via F_m(a) - F_m(-a)
LaurentPoly abf_closed(int L, int a, int b, int c, int m);
LaurentPoly abf_closed_printed(int L, int a, int b, int c, int m);
TruncatedSeries x_limit(int L, int a, int b, int c, int N);

// n=2 branching series and L=4 limits matched to Ising characters chi_{r,s}
struct IsingMatch {
    std::string label;  // "b(j;s,t)" or "X(a,b,c)"
    int r = 0, s = 0;   // 0 when nothing matches
    Exponent shift = 0; // chi lowest exponent minus series lowest exponent
};
std::vector<IsingMatch> ising_identification(int order);

enum class BranchingSource { paths, crystal, fermionic };
TruncatedSeries branching_series(BranchingSource src, int n, int j, int s, int t, int D);

// JS generating series through branching functions; core must be (k^l), k+l <= n
TruncatedSeries chi_js(int n, const Partition& core, int D, BranchingSource src = BranchingSource::crystal);

TruncatedSeries principal_char(int n, int N);

} // namespace fcl
