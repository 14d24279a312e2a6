#include "fcl/canonical.hpp"
#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"

#include <algorithm>
#include <mutex>

namespace fcl {

std::vector<Ladder> ladders(const Partition& mu, int n)
{
    require(n >= 2, "ladders need n >= 2");
    require(is_regular(mu, n), "ladders need an n-regular partition");
    std::map<int, int> count;
    for (int r = 1; r <= mu.length(); ++r)
        for (int c = 1; c <= mu.row(r); ++c) ++count[r + (n - 1) * (c - 1)];
    std::vector<Ladder> out;
    for (auto [l, k] : count) out.push_back({l, static_cast<int>(pmod(1 - l, n)), k});
    return out;
}

namespace {

FockVector apply_ladders(const std::vector<Ladder>& ls, int n, bool ladder_one_first)
{
    FockVector v = basis_vector(Partition{});
    if (ladder_one_first) {
        for (const auto& l : ls) v = divided_f(n, l.residue, l.count, v);
    } else {
        for (auto it = ls.rbegin(); it != ls.rend(); ++it) v = divided_f(n, it->residue, it->count, v);
    }
    return v;
}

bool leading_ok(const FockVector& v, const Partition& mu)
{
    auto it = v.find(mu);
    if (it == v.end() || it->second != LaurentPoly(1)) return false;
    for (const auto& [p, c] : v)
        if (p != mu && !dominates(mu, p)) return false;
    return true;
}

} // namespace

FockVector monomial_A(const Partition& mu, int n, bool* increasing_used)
{
    auto ls = ladders(mu, n);
    FockVector v = apply_ladders(ls, n, true);
    if (increasing_used) *increasing_used = false;
    if (leading_ok(v, mu)) return v;
    v = apply_ladders(ls, n, false);
    if (!leading_ok(v, mu)) throw ConventionViolation("monomial A(" + mu.str() + ") has no leading term v_mu in either ladder order");
    if (increasing_used) *increasing_used = true;
    return v;
}

namespace {

// bar-invariant gamma with gamma = c mod qZ[q]
LaurentPoly bar_lift(const LaurentPoly& c)
{
    LaurentPoly low = c.low_part(0);
    LaurentPoly g = low;
    for (const auto& [e, x] : low.terms())
        if (e < 0) g += LaurentPoly::monomial(x, Exponent(-e, low.den()));
    return g;
}

CanonicalBasis compute_basis(int n, int m)
{
    CanonicalBasis B;
    B.n = n;
    B.m = m;
    auto mus = enumerate_regular(m, n);
    std::sort(mus.begin(), mus.end());  // ascending lex refines ascending dominance
    for (const Partition& mu : mus) {
        bool inc = false;
        FockVector v = monomial_A(mu, n, &inc);
        B.increasing_order_used = B.increasing_order_used || inc;
        for (int guard = 0;; ++guard) {
            if (guard > 100000) throw InternalError("canonical basis elimination does not terminate");
            const Partition* target = nullptr;
            for (const auto& [p, c] : v)  // descending lex
                if (p != mu && c.min_exponent() <= 0) {
                    target = &p;
                    break;
                }
            if (!target) break;
            Partition nu = *target;
            auto g = B.G.find(nu);
            if (g == B.G.end())
                throw ConventionViolation("elimination for G(" + mu.str() + ") needs unprocessed " + nu.str());
            LaurentPoly gamma = bar_lift(v.at(nu));
            if (gamma.bar() != gamma) throw InternalError("correction coefficient is not bar-invariant");
            v = subtract(v, scale(g->second, gamma));
        }
        if (v.at(mu) != LaurentPoly(1)) throw InternalError("G(" + mu.str() + ") lost its leading term");
        B.G.emplace(mu, std::move(v));
    }
    return B;
}

std::mutex cache_mutex;
std::map<std::pair<int, int>, CanonicalBasis> cache;

} // namespace

const CanonicalBasis& canonical_basis(int n, int m)
{
    require(n >= 2 && m >= 0, "canonical basis needs n >= 2, m >= 0");
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto key = std::make_pair(n, m);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, compute_basis(n, m)).first;
    return it->second;
}

DecompositionMatrix global_lower_basis(int n, int m)
{
    const CanonicalBasis& B = canonical_basis(n, m);
    DecompositionMatrix d;
    d.n = n;
    d.m = m;
    d.rows = enumerate_partitions(m);
    d.cols = enumerate_regular(m, n);
    for (const Partition& lam : d.rows) {
        std::vector<LaurentPoly> row;
        for (const Partition& mu : d.cols) {
            const FockVector& g = B.G.at(mu);
            auto it = g.find(lam);
            row.push_back(it == g.end() ? LaurentPoly() : it->second);
        }
        d.entries.push_back(std::move(row));
    }
    return d;
}

IntegerMatrix decomposition_matrix(int n, int m)
{
    DecompositionMatrix d = global_lower_basis(n, m);
    IntegerMatrix r;
    r.n = n;
    r.m = m;
    r.rows = d.rows;
    r.cols = d.cols;
    for (const auto& row : d.entries) {
        std::vector<Int> out;
        for (const auto& x : row) out.push_back(x.at_one());
        r.entries.push_back(std::move(out));
    }
    return r;
}

std::map<Partition, LaurentPoly, DescLex> expand_in_canonical(const FockVector& u, const CanonicalBasis& B)
{
    // G(mu) has leading term v_mu with everything else lex-smaller, so peel
    // off the lex-largest n-regular term each time
    std::map<Partition, LaurentPoly, DescLex> out;
    FockVector r = u;
    while (!r.empty()) {
        const auto& [p, c] = *r.begin();
        auto g = B.G.find(p);
        if (g == B.G.end()) throw ConventionViolation("vector is not in the span of the canonical basis (term v[" + p.str() + "])");
        LaurentPoly coeff = c;
        out.emplace(p, coeff);
        r = subtract(r, scale(g->second, coeff));
    }
    return out;
}

DecompositionMatrix restriction_coeffs(int n, int m)
{
    require(n >= 2 && m >= 1, "restriction needs n >= 2, m >= 1");
    const CanonicalBasis& lower = canonical_basis(n, m - 1);
    const CanonicalBasis& upper = canonical_basis(n, m);
    DecompositionMatrix c;
    c.n = n;
    c.m = m;
    c.rows = enumerate_regular(m, n);
    c.cols = enumerate_regular(m - 1, n);
    c.entries.assign(c.rows.size(), std::vector<LaurentPoly>(c.cols.size()));
    for (std::size_t j = 0; j < c.cols.size(); ++j) {
        FockVector u;
        for (int i = 0; i < n; ++i) u = add(u, f_apply(n, i, lower.G.at(c.cols[j])));
        for (const auto& [lam, x] : expand_in_canonical(u, upper)) c.entries[DecompositionMatrix::index_of(c.rows, lam)][j] = x;
    }
    return c;
}

bool js_canonical(const Partition& p, int n)
{
    require(is_regular(p, n), "js_canonical needs an n-regular partition");
    if (p.empty()) return true;
    static std::mutex mtx;
    static std::map<std::pair<int, int>, DecompositionMatrix> memo;
    std::unique_lock<std::mutex> lock(mtx);
    auto key = std::make_pair(n, p.size());
    auto it = memo.find(key);
    if (it == memo.end()) it = memo.emplace(key, restriction_coeffs(n, p.size())).first;
    const DecompositionMatrix& c = it->second;
    const auto& row = c.entries.at(DecompositionMatrix::index_of(c.rows, p));
    int nonzero = 0;
    Int value = 0;
    for (const auto& x : row)
        if (!x.is_zero()) {
            ++nonzero;
            value = x.at_one();
        }
    return nonzero == 1 && value == 1;
}

} // namespace fcl
