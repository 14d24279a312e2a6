#include "fcl/laurent.hpp"
#include "fcl/errors.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

namespace fcl {

LaurentPoly::LaurentPoly(long c)
{
    if (c != 0) terms_[0] = c;
}

LaurentPoly::LaurentPoly(const Int& c)
{
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Int& c, Exponent e)
{
    LaurentPoly p;
    if (c == 0) return p;
    p.den_ = e.denominator();
    p.terms_[e.numerator()] = c;
    return p;
}

void LaurentPoly::normalize()
{
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0)
            it = terms_.erase(it);
        else
            ++it;
    }
    if (terms_.empty()) {
        den_ = 1;
        return;
    }
    long g = den_;
    for (const auto& [e, c] : terms_) g = std::gcd(g, e);
    if (g > 1) {
        std::map<long, Int> t;
        for (auto& [e, c] : terms_) t.emplace(e / g, std::move(c));
        terms_ = std::move(t);
        den_ /= g;
    }
}

std::map<long, Int> LaurentPoly::rescaled(long den) const
{
    if (den == den_) return terms_;
    long f = den / den_;
    std::map<long, Int> t;
    for (const auto& [e, c] : terms_) t.emplace(e * f, c);
    return t;
}

Int LaurentPoly::coeff(Exponent e) const
{
    // e = num/den must land on our lattice
    long num = e.numerator(), d = e.denominator();
    if (den_ % d != 0) return 0;
    auto it = terms_.find(num * (den_ / d));
    return it == terms_.end() ? Int(0) : it->second;
}

Exponent LaurentPoly::min_exponent() const
{
    if (terms_.empty()) throw InternalError("min_exponent of zero polynomial");
    return Exponent(terms_.begin()->first, den_);
}

Exponent LaurentPoly::max_exponent() const
{
    if (terms_.empty()) throw InternalError("max_exponent of zero polynomial");
    return Exponent(terms_.rbegin()->first, den_);
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::nonnegative_exponents() const
{
    return terms_.empty() || terms_.begin()->first >= 0;
}

LaurentPoly LaurentPoly::bar() const
{
    LaurentPoly r;
    r.den_ = den_;
    for (const auto& [e, c] : terms_) r.terms_.emplace(-e, c);
    return r;
}

LaurentPoly LaurentPoly::shift(Exponent e) const
{
    if (terms_.empty()) return *this;
    long d = std::lcm(den_, e.denominator());
    LaurentPoly r;
    r.den_ = d;
    long s = e.numerator() * (d / e.denominator());
    for (auto& [x, c] : rescaled(d)) r.terms_.emplace(x + s, c);
    r.normalize();
    return r;
}

LaurentPoly LaurentPoly::truncated(Exponent max_e) const
{
    LaurentPoly r;
    r.den_ = den_;
    for (const auto& [e, c] : terms_)
        if (Exponent(e, den_) <= max_e) r.terms_.emplace(e, c);
    r.normalize();
    return r;
}

Int LaurentPoly::at_one() const
{
    Int s = 0;
    for (const auto& [e, c] : terms_) s += c;
    return s;
}

Int LaurentPoly::eval(const Int& x) const
{
    if (den_ != 1) throw InvalidArgument("eval: fractional exponents");
    if (terms_.empty()) return 0;
    long lo = std::min(0L, terms_.begin()->first);
    // value * x^{-lo} as an integer, then divide back out
    Int acc = 0;
    for (const auto& [e, c] : terms_) {
        Int p;
        mpz_pow_ui(p.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(e - lo));
        acc += c * p;
    }
    if (lo == 0) return acc;
    Int d;
    mpz_pow_ui(d.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-lo));
    if (d == 0 || acc % d != 0) throw InvalidArgument("eval: value is not an integer");
    return acc / d;
}

std::string LaurentPoly::str(char var) const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Exponent ex(e, den_);
        Int a = abs(c);
        bool neg = c < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (ex.numerator() == 0) {
            os << a;
            continue;
        }
        if (a != 1) os << a << '*';
        os << var;
        if (ex != Exponent(1)) {
            os << '^' << ex.numerator();
            if (ex.denominator() != 1) os << '/' << ex.denominator();
        }
    }
    return os.str();
}

namespace {

long parse_long(std::string_view s, std::size_t& i)
{
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    std::string tok(s.substr(start, i - start));
    if (tok.empty() || tok == "-" || tok == "+") throw InvalidArgument("bad number in polynomial");
    return std::stol(tok);
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text, char var)
{
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw InvalidArgument("empty polynomial");
    LaurentPoly out;
    std::size_t i = 0;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
        }
        Int c = 1;
        bool have_coeff = false;
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            c = Int(s.substr(i, j - i));
            i = j;
            have_coeff = true;
            if (i < s.size() && s[i] == '*') ++i;
        }
        Exponent e = 0;
        if (i < s.size() && s[i] == var) {
            ++i;
            e = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                long num = parse_long(s, i);
                long den = 1;
                if (i < s.size() && s[i] == '/') {
                    ++i;
                    den = parse_long(s, i);
                    if (den <= 0) throw InvalidArgument("bad exponent denominator");
                }
                e = Exponent(num, den);
            }
        } else if (!have_coeff) {
            throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "'");
        }
        out += monomial(sign * c, e);
        if (i < s.size() && s[i] != '+' && s[i] != '-')
            throw InvalidArgument("cannot parse polynomial '" + std::string(text) + "'");
    }
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    if (o.terms_.empty()) return *this;
    long d = std::lcm(den_, o.den_);
    if (d != den_) {
        terms_ = rescaled(d);
        den_ = d;
    }
    long f = d / o.den_;
    for (const auto& [e, c] : o.terms_) terms_[e * f] += c;
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o)
{
    return *this += -o;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o)
{
    if (terms_.empty() || o.terms_.empty()) {
        terms_.clear();
        den_ = 1;
        return *this;
    }
    long d = std::lcm(den_, o.den_);
    auto a = rescaled(d);
    auto b = o.rescaled(d);
    std::map<long, Int> r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) r[ea + eb] += ca * cb;
    terms_ = std::move(r);
    den_ = d;
    normalize();
    return *this;
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly pow(const LaurentPoly& p, unsigned k)
{
    LaurentPoly r = 1;
    for (unsigned i = 0; i < k; ++i) r *= p;
    return r;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero()) throw InternalError("division by zero polynomial");
    if (a.is_zero()) return a;
    Exponent floor = a.min_exponent() - b.min_exponent();
    Exponent lead = b.max_exponent();
    Int lc = b.coeff(lead);
    LaurentPoly rem = a, quo;
    while (!rem.is_zero()) {
        Exponent top = rem.max_exponent();
        Exponent qe = top - lead;
        Int rc = rem.coeff(top);
        if (qe < floor || rc % lc != 0)
            throw InternalError("inexact polynomial division: " + a.str() + " / " + b.str());
        LaurentPoly t = LaurentPoly::monomial(rc / lc, qe);
        quo += t;
        rem -= t * b;
    }
    return quo;
}

LaurentPoly poly_mod(const LaurentPoly& p, const LaurentPoly& monic)
{
    if (p.den() != 1 || monic.den() != 1 || !p.nonnegative_exponents() || !monic.nonnegative_exponents())
        throw InvalidArgument("poly_mod needs ordinary polynomials");
    Exponent deg = monic.max_exponent();
    if (monic.coeff(deg) != 1) throw InvalidArgument("poly_mod needs a monic modulus");
    LaurentPoly rem = p;
    while (!rem.is_zero() && rem.max_exponent() >= deg) {
        Exponent top = rem.max_exponent();
        rem -= LaurentPoly::monomial(rem.coeff(top), top - deg) * monic;
    }
    return rem;
}

LaurentPoly q_int(long k)
{
    if (k < 0) return -q_int(-k);
    LaurentPoly r;
    for (long j = 0; j < k; ++j) r += LaurentPoly::q(k - 1 - 2 * j);
    return r;
}

LaurentPoly q_fact(long k)
{
    if (k < 0) throw InvalidArgument("q_fact of a negative number");
    LaurentPoly r = 1;
    for (long j = 2; j <= k; ++j) r *= q_int(j);
    return r;
}

LaurentPoly gauss_balanced(long m, long k)
{
    if (k < 0 || m < 0 || k > m) return {};
    return exact_div(q_fact(m), q_fact(k) * q_fact(m - k));
}

LaurentPoly q_pochhammer(long k)
{
    LaurentPoly r = 1;
    for (long j = 1; j <= k; ++j) r *= LaurentPoly(1) - LaurentPoly::q(j);
    return r;
}

LaurentPoly qbinom_lower(long m, long k)
{
    if (m < 0 || k < 0 || k > m) return {};
    // product form keeps the intermediate degrees small
    LaurentPoly num = 1, den = 1;
    for (long j = 1; j <= k; ++j) {
        num *= LaurentPoly(1) - LaurentPoly::q(m - k + j);
        den *= LaurentPoly(1) - LaurentPoly::q(j);
    }
    return exact_div(num, den);
}

LaurentPoly q_content(long c)
{
    LaurentPoly r;
    if (c >= 0) {
        for (long j = 0; j < c; ++j) r += LaurentPoly::q(j);
    } else {
        for (long j = c; j < 0; ++j) r -= LaurentPoly::q(j);
    }
    return r;
}

LaurentPoly cyclotomic(long k)
{
    if (k < 1) throw InvalidArgument("cyclotomic order must be positive");
    LaurentPoly r = LaurentPoly::q(k) - LaurentPoly(1);
    for (long d = 1; d < k; ++d)
        if (k % d == 0) r = exact_div(r, cyclotomic(d));
    return r;
}

TruncatedSeries::TruncatedSeries(const LaurentPoly& p, long order) : poly_(p.truncated(order)), order_(order) {}

std::vector<Int> TruncatedSeries::coefficients() const
{
    if (poly_.den() != 1 || !poly_.nonnegative_exponents())
        throw InvalidArgument("series is not an ordinary power series");
    std::vector<Int> out(order_ + 1);
    for (const auto& [e, c] : poly_.terms()) out[e] = c;
    return out;
}

TruncatedSeries TruncatedSeries::shift(Exponent e) const
{
    // shifting up may push terms past the order; those are dropped
    TruncatedSeries r;
    r.order_ = order_;
    r.poly_ = poly_.shift(e).truncated(order_);
    return r;
}

TruncatedSeries TruncatedSeries::with_order(long order) const
{
    if (order > order_) throw InvalidArgument("cannot raise a series' order");
    return TruncatedSeries(poly_, order);
}

std::string TruncatedSeries::str(char var) const
{
    std::string s = poly_.str(var);
    return s + " + O(" + var + "^" + std::to_string(order_ + 1) + ")";
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return TruncatedSeries(a.poly_ + b.poly_, std::min(a.order_, b.order_));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return TruncatedSeries(a.poly_ - b.poly_, std::min(a.order_, b.order_));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    // Products are only meaningful when neither side has terms below 0
    // that could pull unknown high-order terms down.
    auto floor_of = [](Exponent x) {
        long q = x.numerator() / x.denominator();
        if (x.numerator() < 0 && q * x.denominator() != x.numerator()) --q;
        return q;
    };
    long order = std::min(a.order_, b.order_);
    if (!a.poly_.is_zero() && a.poly_.min_exponent() < 0)
        order = std::min(order, floor_of(b.order_ + a.poly_.min_exponent()));
    if (!b.poly_.is_zero() && b.poly_.min_exponent() < 0)
        order = std::min(order, floor_of(a.order_ + b.poly_.min_exponent()));
    return TruncatedSeries(a.poly_ * b.poly_, order);
}

TruncatedSeries phi_series(long order)
{
    LaurentPoly p = 1;
    for (long j = 1; j <= order; ++j) p = (p * (LaurentPoly(1) - LaurentPoly::q(j))).truncated(order);
    return TruncatedSeries(p, order);
}

TruncatedSeries inv_phi(long order)
{
    // p(k) by the parts recursion
    std::vector<Int> p(order + 1, 0);
    p[0] = 1;
    for (long part = 1; part <= order; ++part)
        for (long k = part; k <= order; ++k) p[k] += p[k - part];
    LaurentPoly r;
    for (long k = 0; k <= order; ++k) r += LaurentPoly::monomial(p[k], k);
    return TruncatedSeries(r, order);
}

} // namespace fcl
