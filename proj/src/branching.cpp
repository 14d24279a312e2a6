#include "fcl/branching.hpp"
#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"
#include "fcl/paths.hpp"

#include <algorithm>

namespace fcl {

CartanData::CartanData(int n_) : n(n_)
{
    require(n >= 2, "Cartan data needs n >= 2");
    int d = n - 1;
    C.assign(d, std::vector<long>(d, 0));
    Cinv.assign(d, std::vector<Exponent>(d, 0));
    for (int i = 1; i <= d; ++i)
        for (int j = 1; j <= d; ++j) {
            C[i - 1][j - 1] = i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0);
            Cinv[i - 1][j - 1] = Exponent(static_cast<long>(std::min(i, j)) * (n - std::max(i, j)), n);
        }
}

std::vector<Exponent> CartanData::unit(int i) const
{
    std::vector<Exponent> v(n - 1, 0);
    if (i >= 1 && i <= n - 1) v[i - 1] = 1;
    return v;
}

namespace {

std::vector<Exponent> mul(const std::vector<std::vector<Exponent>>& M, const std::vector<Exponent>& v)
{
    std::vector<Exponent> r(M.size(), 0);
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t k = 0; k < v.size(); ++k) r[i] += M[i][k] * v[k];
    return r;
}

Exponent dot(const std::vector<Exponent>& a, const std::vector<Exponent>& b)
{
    Exponent s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

LaurentPoly fermionic_raw(int n, int s, int t, int L)
{
    CartanData cd(n);
    int d = n - 1;
    int r = static_cast<int>(pmod(L - (s + t), n));
    if (r == 0) r = n;
    auto es = cd.unit(s - t + n);
    auto base = cd.unit(n - 1);
    for (auto& x : base) x *= L;
    auto er = cd.unit(r);
    for (int i = 0; i < d; ++i) base[i] += er[i] + es[i];
    auto Ces = mul(cd.Cinv, es);
    int box = L + 2;
    LaurentPoly out;
    std::vector<int> m(d, 0);
    while (true) {
        long cong = t;
        for (int i = 0; i < d; ++i) cong += static_cast<long>(i + 1) * m[i];
        if (pmod(cong, n) == 0) {
            std::vector<Exponent> mv(d), v(d);
            for (int i = 0; i < d; ++i) {
                mv[i] = m[i];
                v[i] = base[i] - 2 * mv[i];
            }
            auto l = mul(cd.Cinv, v);
            bool integral = std::all_of(l.begin(), l.end(), [](const Exponent& x) { return x.denominator() == 1; });
            if (integral) {
                LaurentPoly term = 1;
                for (int i = 0; i < d && !term.is_zero(); ++i) term *= qbinom_lower(l[i].numerator() + m[i], m[i]);
                if (!term.is_zero()) {
                    if (std::find(m.begin(), m.end(), box) != m.end())
                        throw ResourceLimit("fermionic sum does not vanish on the enumeration box boundary");
                    Exponent e = dot(mv, mul(cd.Cinv, mv)) - dot(mv, Ces) + Exponent(static_cast<long>(s) * t, n);
                    out += term.shift(e);
                }
            }
        }
        int k = 0;
        while (k < d && m[k] == box) m[k++] = 0;
        if (k == d) break;
        ++m[k];
    }
    return out;
}

} // namespace

FermionicResult fermionic_poly(int n, int j, int s, int t, int L, bool swap_st)
{
    require(n >= 2 && j >= 0 && j < n && s >= 0 && t >= 0 && s <= t && t < n, "need 0 <= s <= t < n and 0 <= j < n");
    require(L >= 0, "cutoff L must be nonnegative");
    if (L > 400) throw ResourceLimit("fermionic cutoff too large");
    FermionicResult r;
    r.swapped = swap_st;
    LaurentPoly paths = branching_poly_paths(n, j, s, t, L);
    if (pmod(s + t - j, n) == 0) r.raw = swap_st ? fermionic_raw(n, t, s, L) : fermionic_raw(n, s, t, L);
    if (r.raw.is_zero() || paths.is_zero()) {
        r.normalized = r.raw;
        r.agrees = r.raw.is_zero() && paths.is_zero();
        return r;
    }
    r.shift = r.raw.min_exponent() - paths.min_exponent();
    r.normalized = r.raw.shift(-r.shift);
    r.agrees = r.normalized == paths;
    return r;
}

TruncatedSeries fermionic_limit(int n, int j, int s, int t, int D)
{
    int L = path_cutoff_for_degree(n, D);
    FermionicResult f = fermionic_poly(n, j, s, t, L);
    if (!f.agrees) throw ConventionViolation("fermionic polynomial disagrees with the path sum");
    return TruncatedSeries(f.normalized, D);
}

TruncatedSeries rocha_caridi(int mp, int r, int s, int N)
{
    require(mp >= 3, "minimal model parameter must be >= 3");
    require(r >= 1 && r <= mp - 1 && s >= 1 && s <= mp, "need 1 <= r <= m-1, 1 <= s <= m");
    require(N >= 0, "order must be nonnegative");
    long M = 2L * mp * (mp + 1), den = 4L * mp * (mp + 1);
    LaurentPoly theta;
    // exponents grow like m(m+1)k^2, so |k| <= N+2 covers everything up to order N
    for (long k = -(N + 2); k <= N + 2; ++k) {
        long x = M * k + (mp + 1) * r + mp * s, y = M * k + (mp + 1) * r - mp * s;
        theta += LaurentPoly::monomial(-1, Exponent(x * x - 1, den));
        theta += LaurentPoly::monomial(1, Exponent(y * y - 1, den));
    }
    return TruncatedSeries(theta, N) * inv_phi(N);
}

namespace {

bool admissible(int L, int a, int b, int c, int m)
{
    require(L >= 4, "ABF model needs L >= 4");
    require(a >= 1 && a < L && b >= 1 && b < L && c >= 1 && c < L, "heights must lie in 1..L-1");
    require(b - c == 1 || c - b == 1, "|b - c| must be 1");
    require(m >= 0, "m must be nonnegative");
    return true;
}

// bracket_sign = +1 gives the reading that matches direct enumeration
LaurentPoly abf_closed_impl(int L, int a, int b, int c, int m, int bracket_sign)
{
    admissible(L, a, b, c, m);
    auto F = [&](long a_) {
        LaurentPoly r;
        long span = m / L + 2;
        for (long n = -span; n <= span; ++n) {
            long twice = m + a_ - b - 2 * n * L;
            if (pmod(twice, 2) != 0) continue;
            LaurentPoly g = qbinom_lower(m, twice / 2);
            if (g.is_zero()) continue;
            Exponent e = Exponent(n * (L - 1) * (n * L - a_)) +
                         Exponent(static_cast<long>(b) * c + bracket_sign * (2 * n * L - a_) * (b + c - 1), 4);
            r += g.shift(e);
        }
        return r;
    };
    return (F(a) - F(-a)).shift(Exponent(static_cast<long>(a) * (a - 1), 4));
}

} // namespace

LaurentPoly abf_closed(int L, int a, int b, int c, int m)
{
    return abf_closed_impl(L, a, b, c, m, 1);
}

LaurentPoly abf_closed_printed(int L, int a, int b, int c, int m)
{
    return abf_closed_impl(L, a, b, c, m, -1);
}

TruncatedSeries x_limit(int L, int a, int b, int c, int N)
{
    admissible(L, a, b, c, 0);
    require(N >= 0, "order must be nonnegative");
    Exponent d(b + c - 1, 2);
    LaurentPoly delta;
    for (long n = -(N + 4); n <= N + 4; ++n) {
        Exponent base = Exponent(static_cast<long>(L) * (L - 1) * n * n) + Exponent(L) * d * n + Exponent(static_cast<long>(a) * (a - 1), 4);
        Exponent off = Exponent((L - 1) * static_cast<long>(a) * n) + Exponent(a) * d / 2;
        delta += LaurentPoly::monomial(1, base - off);
        delta += LaurentPoly::monomial(-1, base + off);
    }
    delta = delta.shift(Exponent(static_cast<long>(b) * c, 4));
    return TruncatedSeries(delta, N) * inv_phi(N);
}

namespace {

LaurentPoly normalized_head(const LaurentPoly& p, int order, Exponent* lowest)
{
    *lowest = p.min_exponent();
    return p.shift(-*lowest).truncated(order);
}

} // namespace

std::vector<IsingMatch> ising_identification(int order)
{
    require(order >= 0, "order must be nonnegative");
    struct Chi {
        int r, s;
        Exponent lowest;
        LaurentPoly head;
    };
    std::vector<Chi> chis;
    for (int r = 1; r <= 2; ++r)
        for (int s = 1; s <= 3; ++s) {
            Chi c{r, s, 0, {}};
            c.head = normalized_head(rocha_caridi(3, r, s, order + 2).poly(), order, &c.lowest);
            chis.push_back(c);
        }
    auto match = [&](std::string label, const LaurentPoly& series) {
        IsingMatch im;
        im.label = std::move(label);
        Exponent lo;
        LaurentPoly head = normalized_head(series, order, &lo);
        // pairs (r,s) ~ (m-r, m+1-s) give the same character; the loop order
        // picks the lexicographically smallest
        for (const Chi& c : chis)
            if (c.head == head) {
                im.r = c.r;
                im.s = c.s;
                im.shift = c.lowest - lo;
                break;
            }
        return im;
    };
    std::vector<IsingMatch> out;
    for (int s = 0; s < 2; ++s)
        for (int t = s; t < 2; ++t) {
            int j = (s + t) % 2;
            std::string label = "b(" + std::to_string(j) + ";" + std::to_string(s) + "," + std::to_string(t) + ")";
            out.push_back(match(label, branching_poly_paths(2, j, s, t, 2 * (order + 2))));
        }
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            for (int c : {b - 1, b + 1}) {
                if (c < 1 || c > 3 || (a - b) % 2 != 0) continue;
                std::string label = "X(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
                out.push_back(match(label, x_limit(4, a, b, c, order + 2).poly()));
            }
    return out;
}

TruncatedSeries branching_series(BranchingSource src, int n, int j, int s, int t, int D)
{
    require(D >= 0, "degree must be nonnegative");
    switch (src) {
    case BranchingSource::paths:
        return branching_series_paths(n, j, s, t, D);
    case BranchingSource::crystal:
        return branching_series_crystal(n, j, s, t, D);
    case BranchingSource::fermionic:
        if (s > t) std::swap(s, t);
        return fermionic_limit(n, j, s, t, D);
    }
    throw InternalError("unknown branching source");
}

TruncatedSeries chi_js(int n, const Partition& core, int D, BranchingSource src)
{
    require(n >= 2 && D >= 0, "chi needs n >= 2, D >= 0");
    const auto& parts = core.parts();
    bool rect = core.empty() || std::all_of(parts.begin(), parts.end(), [&](int x) { return x == parts[0]; });
    require(rect, "chi needs a rectangular core (k^l)");
    int k = core.empty() ? 0 : parts[0], l = core.length();
    require(k + l <= n, "chi needs a core (k^l) with k + l <= n");
    if (core.empty()) {
        LaurentPoly sum;
        for (int i = 0; i < n; ++i) sum += branching_series(src, n, i, 0, i, D).poly();
        return TruncatedSeries(sum - LaurentPoly(n - 1), D);
    }
    int shift = std::min(k, l);
    int s = static_cast<int>(pmod(k, n)), t = static_cast<int>(pmod(-l, n));
    if (s > t) std::swap(s, t);
    TruncatedSeries b = branching_series(src, n, static_cast<int>(pmod(k - l, n)), s, t, D + shift);
    return TruncatedSeries(b.poly().shift(-shift), D);
}

TruncatedSeries principal_char(int n, int N)
{
    require(n >= 2 && N >= 0, "principal character needs n >= 2, N >= 0");
    std::vector<Int> c(N + 1, 0);
    c[0] = 1;
    for (int part = 1; part <= N; ++part) {
        if (part % n == 0) continue;
        for (int i = part; i <= N; ++i) c[i] += c[i - part];
    }
    LaurentPoly p;
    for (int i = 0; i <= N; ++i) p += LaurentPoly::monomial(c[i], i);
    return TruncatedSeries(p, N);
}

} // namespace fcl
