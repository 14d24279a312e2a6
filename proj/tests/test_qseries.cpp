#include "fcl/errors.hpp"
#include "fcl/laurent.hpp"
#include "fcl/partition.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace fcl;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

LaurentPoly from_oracle(const oracle::Poly& p)
{
    LaurentPoly r;
    for (auto [e, c] : p) r += LaurentPoly::monomial(c, e);
    return r;
}

long binom(long m, long k)
{
    long r = 1;
    for (long i = 1; i <= k; ++i) r = r * (m - k + i) / i;
    return r;
}

} // namespace

TEST_SUITE("qseries")
{
    TEST_CASE("bar")
    {
        CHECK(P("q + q^3").bar() == P("q^-1 + q^-3"));
        CHECK(LaurentPoly(5).bar() == LaurentPoly(5));
        CHECK(P("q^-1 + q").bar() == P("q^-1 + q"));
        CHECK(P("q^1/2 - 3*q^-5/4").bar() == P("q^-1/2 - 3*q^5/4"));
    }

    TEST_CASE("bar is an involution on random polynomials")
    {
        std::mt19937 rng(7);
        std::uniform_int_distribution<long> ce(-5, 5), ex(-12, 12), dn(1, 4);
        for (int t = 0; t < 200; ++t) {
            LaurentPoly p;
            for (int k = 0; k < 6; ++k) p += LaurentPoly::monomial(ce(rng), Exponent(ex(rng), dn(rng)));
            CHECK(p.bar().bar() == p);
            CHECK((p * p.bar()).bar() == p * p.bar());
        }
    }

    TEST_CASE("q-integers and balanced binomials")
    {
        CHECK(q_int(2) == P("q^-1 + q"));
        CHECK(q_int(0).is_zero());
        CHECK(q_int(-3) == -q_int(3));
        CHECK(gauss_balanced(2, 1) == q_int(2));
        CHECK(gauss_balanced(4, 2) == P("q^-4 + q^-2 + 2 + q^2 + q^4"));
        CHECK(gauss_balanced(3, 5).is_zero());
        CHECK(gauss_balanced(3, -1).is_zero());
        for (long m = 0; m <= 9; ++m)
            for (long k = 0; k <= m; ++k) {
                auto g = gauss_balanced(m, k);
                CHECK(g.bar() == g);
                CHECK(g.at_one() == binom(m, k));
                // balanced form is the ordinary one recentred and in q^2
                auto ord = from_oracle(oracle::gauss(m, k));
                LaurentPoly sq;
                for (auto [e, c] : ord.terms()) sq += LaurentPoly::monomial(c, Exponent(2 * e));
                CHECK(g == sq.shift(Exponent(-k * (m - k))));
            }
    }

    TEST_CASE("ordinary Gaussian binomial")
    {
        CHECK(qbinom_lower(2, 1) == P("1 + q"));
        CHECK(qbinom_lower(4, 2) == P("1 + q + 2*q^2 + q^3 + q^4"));
        CHECK(qbinom_lower(1, 3).is_zero());
        CHECK(qbinom_lower(-1, 0).is_zero());
        for (long m = 0; m <= 10; ++m)
            for (long k = 0; k <= m; ++k) {
                CHECK(qbinom_lower(m, k) == from_oracle(oracle::gauss(m, k)));
                CHECK(qbinom_lower(m, k).at_one() == binom(m, k));
            }
    }

    TEST_CASE("exact division")
    {
        CHECK(exact_div(q_pochhammer(4), q_pochhammer(2) * q_pochhammer(2)) == qbinom_lower(4, 2));
        CHECK_THROWS_AS(exact_div(P("1 + q"), P("1 + q^2")), InternalError);
        CHECK_THROWS_AS(exact_div(P("1"), LaurentPoly()), InternalError);
    }

    TEST_CASE("content polynomials and cyclotomics")
    {
        CHECK(q_content(0).is_zero());
        CHECK(q_content(1) == P("1"));
        CHECK(q_content(3) == P("1 + q + q^2"));
        CHECK(q_content(-2) == P("-q^-2 - q^-1"));
        CHECK(cyclotomic(1) == P("-1 + q"));
        CHECK(cyclotomic(3) == P("1 + q + q^2"));
        CHECK(cyclotomic(4) == P("1 + q^2"));
        CHECK(cyclotomic(6) == P("1 - q + q^2"));
        CHECK(poly_mod(P("q^3"), cyclotomic(3)) == P("1"));
    }

    TEST_CASE("inverse Euler function")
    {
        CHECK(inv_phi(0).poly().str() == "1");
        CHECK(inv_phi(5).poly() == P("1 + q + 2*q^2 + 3*q^3 + 5*q^4 + 7*q^5"));
        for (long N : {0, 3, 12, 25}) {
            auto prod = phi_series(N) * inv_phi(N);
            CHECK(prod.poly() == P("1"));
        }
        auto c = inv_phi(20).coefficients();
        for (int k = 0; k <= 20; ++k) CHECK(c[k] == static_cast<long>(enumerate_partitions(k).size()));
    }

    TEST_CASE("truncation never reports beyond the order")
    {
        TruncatedSeries a(P("1 + q + q^7"), 5);
        CHECK(a.poly() == P("1 + q"));
        auto b = a * a;
        CHECK(b.order() == 5);
        CHECK(b.poly() == P("1 + 2*q + q^2"));
        CHECK((a.shift(Exponent(9, 2))).poly() == P("q^9/2"));
    }

    TEST_CASE("text form")
    {
        CHECK(P("q^2 + 1").str() == "1 + q^2");
        CHECK(P("q + q^-1").str() == "q^-1 + q");
        CHECK(LaurentPoly::q(Exponent(1, 2)).str() == "q^1/2");
        CHECK(LaurentPoly().str() == "0");
        CHECK(P("-q").str() == "-q");
        CHECK(P("2*q^3 - 4*q^-3/4").str() == "-4*q^-3/4 + 2*q^3");
        for (const char* s : {"1 + q^2", "q^-1 + q", "q^1/2", "-3 + 2*q^5/4 - q^7"}) CHECK(P(s).str() == P(P(s).str().c_str()).str());
    }

    TEST_CASE("mixed lattices promote to the lcm")
    {
        auto s = P("q^1/2") + P("q^1/4");
        CHECK(s.den() == 4);
        auto d = P("q^1/2") * P("q^1/2");
        CHECK(d.den() == 1);
        CHECK(d == P("q"));
    }

    TEST_CASE("big coefficients stay exact")
    {
        auto p = pow(P("1 + q"), 80);
        CHECK(p.coeff(40) == Int("107507208733336176461620"));
    }
}
