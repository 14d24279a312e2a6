#pragma once

#include <gmpxx.h>
#include <boost/rational.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fcl {

using Int = mpz_class;
using Exponent = boost::rational<long>;

/*
 * Laurent polynomial in one variable with integer coefficients.
 * Exponents are numerators over a common denominator den(); the
 * denominator is always reduced to the smallest one that fits.
 */
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c);
    LaurentPoly(const Int& c);

    static LaurentPoly monomial(const Int& c, Exponent e);
    static LaurentPoly q(Exponent e = 1) { return monomial(1, e); }

    bool is_zero() const { return terms_.empty(); }
    long den() const { return den_; }
    const std::map<long, Int>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    Int coeff(Exponent e) const;
    Exponent min_exponent() const;
    Exponent max_exponent() const;
    bool is_constant() const;
    bool nonnegative_exponents() const;

    LaurentPoly bar() const;
    LaurentPoly shift(Exponent e) const;
    LaurentPoly truncated(Exponent max_e) const;
    // Keep only the terms with exponent <= e (used for q-adic congruences).
    LaurentPoly low_part(Exponent e) const { return truncated(e); }

    Int at_one() const;
    // Value at an integer point; negative exponents must divide exactly.
    Int eval(const Int& x) const;

    std::string str(char var = 'q') const;
    static LaurentPoly parse(std::string_view text, char var = 'q');

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b)
    {
        return a.den_ == b.den_ && a.terms_ == b.terms_;
    }

private:
    void normalize();
    std::map<long, Int> rescaled(long den) const;

    std::map<long, Int> terms_;
    long den_ = 1;
};

LaurentPoly pow(const LaurentPoly& p, unsigned k);

// a / b; throws InternalError when the quotient is not an exact Laurent polynomial.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
// Remainder of p (nonnegative integer exponents) modulo a monic polynomial.
LaurentPoly poly_mod(const LaurentPoly& p, const LaurentPoly& monic);

// balanced q-integers [k] = (q^k - q^-k)/(q - q^-1); [-k] = -[k]
LaurentPoly q_int(long k);
LaurentPoly q_fact(long k);
LaurentPoly gauss_balanced(long m, long k);

// (q)_k = (1-q)...(1-q^k) and the ordinary Gaussian binomial
LaurentPoly q_pochhammer(long k);
LaurentPoly qbinom_lower(long m, long k);

// (v^c - 1)/(v - 1) for any integer c, as a Laurent polynomial
LaurentPoly q_content(long c);

// k-th cyclotomic polynomial
LaurentPoly cyclotomic(long k);

/*
 * Power series truncated at an integer order N: only terms with
 * exponent <= N are ever kept.  Exponents may be fractional and may be
 * negative (series with a leading q-shift).
 */
class TruncatedSeries {
public:
    TruncatedSeries() = default;
    TruncatedSeries(const LaurentPoly& p, long order);

    long order() const { return order_; }
    const LaurentPoly& poly() const { return poly_; }
    Int coeff(Exponent e) const { return poly_.coeff(e); }
    bool is_zero() const { return poly_.is_zero(); }
    // coefficients of q^0..q^order; requires integral nonnegative exponents
    std::vector<Int> coefficients() const;

    TruncatedSeries shift(Exponent e) const;
    TruncatedSeries with_order(long order) const;
    std::string str(char var = 'q') const;

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) = default;

private:
    LaurentPoly poly_;
    long order_ = 0;
};

TruncatedSeries phi_series(long order);
TruncatedSeries inv_phi(long order);

} // namespace fcl
