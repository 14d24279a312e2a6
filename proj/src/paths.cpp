#include "fcl/paths.hpp"
#include "fcl/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace fcl {

PathWord::PathWord(int n_, std::vector<int> g) : n(n_), gamma(std::move(g))
{
    require(n >= 2, "paths need n >= 2");
    for (int x : gamma) require(x >= 0 && x < n, "path entries must be residues mod n");
    while (!gamma.empty() && gamma.back() == pmod(kstar() - 1, n)) gamma.pop_back();
}

std::string PathWord::str() const
{
    std::ostringstream os;
    for (std::size_t k = 0; k < gamma.size(); ++k) os << (k ? "," : "") << gamma[k];
    return os.str();
}

Partition to_partition(const PathWord& p)
{
    int ks = p.kstar();
    std::vector<int> t(ks + 1, 0);
    for (int k = ks - 1; k >= 0; --k) t[k] = t[k + 1] + static_cast<int>(pmod(k - p.gamma[k] - t[k + 1], p.n));
    t.pop_back();
    while (!t.empty() && t.back() == 0) t.pop_back();
    return Partition(t).conjugate();
}

PathWord to_path(const Partition& p, int n)
{
    require(n >= 2, "paths need n >= 2");
    require(is_regular(p, n), "to_path needs an n-regular partition");
    Partition c = p.conjugate();
    std::vector<int> g;
    for (int k = 0; k < c.length(); ++k) g.push_back(static_cast<int>(pmod(k - c.row(k + 1), n)));
    return PathWord(n, g);
}

std::vector<Weight> path_weights(const PathWord& p)
{
    int ks = p.kstar();
    std::vector<Weight> w(ks + 1);
    w[ks] = Weight::fundamental(p.n, static_cast<int>(pmod(ks, p.n)));
    for (int k = ks - 1; k >= 0; --k) w[k] = w[k + 1] - Weight::epsilon(p.n, p.gamma[k]);
    return w;
}

namespace {

int H(int a, int b)
{
    return a < b ? 0 : 1;
}

} // namespace

long energy(const PathWord& p)
{
    long e = 0;
    for (int k = 1; k <= p.kstar(); ++k)
        e += static_cast<long>(k) * (H(p.at(k - 1), p.at(k)) - H(static_cast<int>(pmod(k - 1, p.n)), static_cast<int>(pmod(k, p.n))));
    return e;
}

EnergyWeight energy_weight(const PathWord& p)
{
    EnergyWeight r{energy(p), path_weights(p).front()};
    r.weight.delta = -r.energy;
    return r;
}

bool is_restricted(const PathWord& p, int j)
{
    require(j >= 0 && j < p.n, "j must be a residue");
    Weight lj = Weight::fundamental(p.n, j);
    for (const Weight& w : path_weights(p))
        if (!(w + lj).dominant()) return false;
    return true;
}

namespace {

struct Blocks {
    std::vector<int> parts, mult;  // distinct parts and multiplicities
};

Blocks blocks(const Partition& p)
{
    Blocks b;
    for (int x : p.parts()) {
        if (!b.parts.empty() && b.parts.back() == x)
            ++b.mult.back();
        else {
            b.parts.push_back(x);
            b.mult.push_back(1);
        }
    }
    return b;
}

bool edge_sums_vanish(const Blocks& b, int n)
{
    for (std::size_t i = 0; i + 1 < b.parts.size(); ++i)
        if (pmod(b.mult[i] + b.parts[i] - b.parts[i + 1] + b.mult[i + 1], n) != 0) return false;
    return true;
}

} // namespace

FowLabel fow_classify(const Partition& p, int n)
{
    require(n >= 2, "FOW needs n >= 2");
    require(is_regular(p, n), "fow_classify needs an n-regular partition");
    return fow_edge_condition(p, n);
}

FowLabel fow_edge_condition(const Partition& p, int n)
{
    require(n >= 2, "FOW needs n >= 2");
    FowLabel r;
    if (p.empty()) {
        r.kind = FowLabel::all;
        return r;
    }
    Blocks b = blocks(p);
    if (!edge_sums_vanish(b, n)) return r;
    r.kind = FowLabel::single;
    r.j = static_cast<int>(pmod(b.parts[0] - b.mult[0], n));
    return r;
}

bool js_combinatorial(const Partition& p, int n)
{
    return fow_classify(p, n).kind != FowLabel::none;
}

namespace {

void check_indices(int n, int j, int s, int t)
{
    require(n >= 2, "branching needs n >= 2");
    require(j >= 0 && j < n && s >= 0 && s < n && t >= 0 && t < n, "j, s, t must be residues mod n");
}

} // namespace

LaurentPoly branching_poly_paths(int n, int j, int s, int t, int L)
{
    check_indices(n, j, s, t);
    require(L >= 0, "cutoff L must be nonnegative");
    if (L > 4000) throw ResourceLimit("path cutoff too large");
    Weight target = Weight::fundamental(n, s) + Weight::fundamental(n, t);
    Weight lj = Weight::fundamental(n, j);
    if (L == 0) return Weight::fundamental(n, 0) + lj == target ? LaurentPoly(1) : LaurentPoly();
    // backward DP: state (p_{k+1}, gamma(k+1)) -> energy polynomial
    using State = std::pair<std::vector<long>, int>;
    std::map<State, LaurentPoly> cur;
    cur[{Weight::fundamental(n, static_cast<int>(pmod(L, n))).fund, static_cast<int>(pmod(L, n))}] = 1;
    for (int k = L - 1; k >= 0; --k) {
        std::map<State, LaurentPoly> next;
        int ground = H(static_cast<int>(pmod(k, n)), static_cast<int>(pmod(k + 1, n)));
        for (const auto& [st, poly] : cur) {
            Weight pk1{st.first, 0};
            for (int g = 0; g < n; ++g) {
                Weight pk = pk1 - Weight::epsilon(n, g);
                if (!(pk + lj).dominant()) continue;
                LaurentPoly term = poly * LaurentPoly::q(static_cast<long>(k + 1) * (H(g, st.second) - ground));
                next[{pk.fund, g}] += term;
            }
        }
        cur = std::move(next);
    }
    LaurentPoly r;
    for (const auto& [st, poly] : cur)
        if (Weight{st.first, 0} + lj == target) r += poly;
    return r;
}

int path_cutoff_for_degree(int n, int D)
{
    // E(p) >= ceil(k*/n), so paths longer than n*D have energy > D
    return n * std::max(D, 0);
}

TruncatedSeries branching_series_paths(int n, int j, int s, int t, int D)
{
    return TruncatedSeries(branching_poly_paths(n, j, s, t, path_cutoff_for_degree(n, D)), D);
}

std::vector<RestrictedPath> restricted_paths(int n, int j, int s, int t, int L)
{
    check_indices(n, j, s, t);
    require(L >= 0, "cutoff L must be nonnegative");
    if (L > 60) throw ResourceLimit("restricted path enumeration cutoff too large");
    Weight target = Weight::fundamental(n, s) + Weight::fundamental(n, t);
    Weight lj = Weight::fundamental(n, j);
    std::vector<RestrictedPath> out;
    std::vector<int> g(L, 0);
    auto rec = [&](auto&& self, int k, const Weight& pk1) -> void {
        if (k < 0) {
            if (pk1 + lj != target) return;
            PathWord p(n, g);
            out.push_back({p, to_partition(p), energy(p)});
            return;
        }
        for (int x = 0; x < n; ++x) {
            Weight pk = pk1 - Weight::epsilon(n, x);
            if (!(pk + lj).dominant()) continue;
            g[k] = x;
            self(self, k - 1, pk);
        }
    };
    rec(rec, L - 1, Weight::fundamental(n, static_cast<int>(pmod(L, n))));
    std::sort(out.begin(), out.end(), [](const RestrictedPath& a, const RestrictedPath& b) {
        if (a.energy != b.energy) return a.energy < b.energy;
        return DescLex{}(a.lift, b.lift);
    });
    return out;
}

std::vector<Partition> js_set(int n, const Partition& core, int d)
{
    require(n >= 2 && d >= 0, "js_set needs n >= 2, d >= 0");
    require(is_core(core, n), "core must be an n-core");
    std::vector<Partition> out;
    for (const Partition& p : enumerate_regular(core.size() + n * d, n))
        if (js_combinatorial(p, n) && n_core(p, n).core == core) out.push_back(p);
    return out;
}

TruncatedSeries chi_js_direct(int n, const Partition& core, int D)
{
    LaurentPoly p;
    for (int d = 0; d <= D; ++d) p += LaurentPoly::monomial(static_cast<long>(js_set(n, core, d).size()), d);
    return TruncatedSeries(p, D);
}

LaurentPoly abf_sum_direct(int L, int a, int b, int c, int m)
{
    require(L >= 4, "ABF model needs L >= 4");
    require(a >= 1 && a < L && b >= 1 && b < L && c >= 1 && c < L, "heights must lie in 1..L-1");
    require(b - c == 1 || c - b == 1, "|b - c| must be 1");
    require(m >= 0, "m must be nonnegative");
    if (m > 400) throw ResourceLimit("configuration length too large");
    if (m == 0) return a == b ? LaurentPoly(1) : LaurentPoly();
    // sequences l_1..l_{m+2} with l_1 = a, l_{m+1} = b, l_{m+2} = c; the j-th term
    // of Phi needs l_j, l_{j+1}, l_{j+2}, so carry the last two heights
    std::map<std::pair<int, int>, LaurentPoly> cur;
    for (int l2 : {a - 1, a + 1})
        if (l2 >= 1 && l2 < L) cur[{a, l2}] = 1;
    for (int jj = 1; jj <= m; ++jj) {
        std::map<std::pair<int, int>, LaurentPoly> next;
        for (const auto& [st, poly] : cur)
            for (int l3 : {st.second - 1, st.second + 1}) {
                if (l3 < 1 || l3 >= L) continue;
                if (jj == m && (st.second != b || l3 != c)) continue;
                next[{st.second, l3}] += poly * LaurentPoly::q(Exponent(static_cast<long>(jj) * std::abs(st.first - l3), 4));
            }
        cur = std::move(next);
    }
    LaurentPoly r;
    for (const auto& [st, poly] : cur) r += poly;
    return r;
}

} // namespace fcl
