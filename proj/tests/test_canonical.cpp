#include "fcl/canonical.hpp"
#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"
#include "fcl/paths.hpp"

#include <doctest.h>

using namespace fcl;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

} // namespace

TEST_SUITE("canonical")
{
    TEST_CASE("ladders")
    {
        CHECK(ladders(Partition{2, 1}, 2) == std::vector<Ladder>{{1, 0, 1}, {2, 1, 2}});
        for (int n = 2; n <= 4; ++n) CHECK(ladders(Partition{1}, n) == std::vector<Ladder>{{1, 0, 1}});
        CHECK(ladders(Partition{3}, 2) == std::vector<Ladder>{{1, 0, 1}, {2, 1, 1}, {3, 0, 1}});
        CHECK_THROWS_AS(ladders(Partition{1, 1}, 2), InvalidArgument);
        for (int m = 0; m <= 9; ++m)
            for (auto& p : enumerate_regular(m, 3)) {
                int s = 0;
                for (auto& l : ladders(p, 3)) s += l.count;
                CHECK(s == m);
            }
    }

    TEST_CASE("ladder monomials")
    {
        CHECK(monomial_A(Partition{2, 1}, 2) == basis_vector({2, 1}));
        FockVector a3 = basis_vector({3});
        accumulate(a3, Partition{1, 1, 1}, P("q"));
        CHECK(monomial_A(Partition{3}, 2) == a3);
        CHECK(monomial_A(Partition{1}, 5) == basis_vector({1}));
        for (int n = 2; n <= 3; ++n)
            for (int m = 0; m <= 7; ++m)
                for (auto& mu : enumerate_regular(m, n)) {
                    auto A = monomial_A(mu, n);
                    CHECK(A.at(mu) == P("1"));
                    for (auto& [lam, c] : A)
                        if (lam != mu) CHECK(dominates(mu, lam));
                }
    }

    TEST_CASE("n=2 m=5 golden")
    {
        auto D = global_lower_basis(2, 5);
        CHECK(D.cols == std::vector<Partition>{{5}, {4, 1}, {3, 2}});
        CHECK(D.at({5}, {5}) == P("1"));
        CHECK(D.at({3, 1, 1}, {5}) == P("q"));
        CHECK(D.at({1, 1, 1, 1, 1}, {5}) == P("q^2"));
        CHECK(D.at({4, 1}, {4, 1}) == P("1"));
        CHECK(D.at({2, 1, 1, 1}, {4, 1}) == P("q"));
        CHECK(D.at({3, 2}, {3, 2}) == P("1"));
        CHECK(D.at({3, 1, 1}, {3, 2}) == P("q"));
        CHECK(D.at({2, 2, 1}, {3, 2}) == P("q^2"));
        int nonzero = 0;
        for (auto& row : D.entries)
            for (auto& c : row)
                if (!c.is_zero()) ++nonzero;
        CHECK(nonzero == 8);

        auto H = decomposition_matrix(2, 5);
        CHECK(H.at({3, 1, 1}, {5}) == 1);
        CHECK(H.at({3, 1, 1}, {4, 1}) == 0);
        CHECK(H.at({3, 1, 1}, {3, 2}) == 1);
        CHECK(H.at({2, 2, 1}, {3, 2}) == 1);
        CHECK(H.at({1, 1, 1, 1, 1}, {5}) == 1);
    }

    TEST_CASE("small cases")
    {
        auto& B = canonical_basis(2, 3);
        FockVector g3 = basis_vector({3});
        accumulate(g3, Partition{1, 1, 1}, P("q"));
        CHECK(B.G.at(Partition{3}) == g3);
        CHECK(B.G.at(Partition{2, 1}) == basis_vector({2, 1}));
        for (int n = 2; n <= 4; ++n) {
            auto D = global_lower_basis(n, 1);
            CHECK(D.rows.size() == 1);
            CHECK(D.entries[0][0] == P("1"));
        }
    }

    TEST_CASE("matrix properties")
    {
        for (int n = 2; n <= 3; ++n)
            for (int m = 0; m <= 8; ++m) {
                auto D = global_lower_basis(n, m);
                CHECK_FALSE(canonical_basis(n, m).increasing_order_used);
                for (std::size_t r = 0; r < D.rows.size(); ++r)
                    for (std::size_t c = 0; c < D.cols.size(); ++c) {
                        auto& d = D.entries[r][c];
                        if (D.rows[r] == D.cols[c]) {
                            CHECK(d == P("1"));
                            continue;
                        }
                        if (d.is_zero()) continue;
                        CHECK(n_core(D.rows[r], n).core == n_core(D.cols[c], n).core);
                        CHECK(d.den() == 1);
                        CHECK(d.min_exponent() >= Exponent(1));
                        for (auto& [e, k] : d.terms()) CHECK(k > 0);
                    }
            }
    }

    TEST_CASE("monomials have bar-invariant coordinates in the canonical basis")
    {
        for (int n = 2; n <= 3; ++n)
            for (int m = 1; m <= 7; ++m) {
                auto& B = canonical_basis(n, m);
                for (auto& [mu, g] : B.G) {
                    auto coords = expand_in_canonical(monomial_A(mu, n), B);
                    CHECK(coords.at(mu) == P("1"));
                    for (auto& [nu, c] : coords) CHECK(c.bar() == c);
                    auto self = expand_in_canonical(g, B);
                    CHECK(self.size() == 1);
                }
            }
    }

    TEST_CASE("restriction coefficients")
    {
        auto c1 = restriction_coeffs(3, 1);
        CHECK(c1.at({1}, {}) == P("1"));
        auto c3 = restriction_coeffs(2, 3);
        CHECK(c3.at({2, 1}, {2}) == P("q^-1 + q"));
        CHECK(c3.at({3}, {2}) == P("1"));
    }

    TEST_CASE("canonical JS test")
    {
        CHECK(js_canonical(Partition{3, 2}, 3));
        CHECK_THROWS_AS(js_canonical(Partition{3, 1, 1}, 2), InvalidArgument);
        CHECK_FALSE(js_canonical(Partition{2, 1}, 2));
        CHECK(js_canonical(Partition{1}, 2));
        CHECK_THROWS_AS(js_canonical(Partition{1, 1}, 2), InvalidArgument);
    }

    TEST_CASE("three JS tests agree")
    {
        for (int n = 2; n <= 3; ++n)
            for (int m = 0; m <= 8; ++m)
                for (auto& p : enumerate_regular(m, n)) {
                    bool a = js_crystal(p, n), b = js_combinatorial(p, n), c = js_canonical(p, n);
                    CHECK_MESSAGE(a == b, p.str());
                    CHECK_MESSAGE(a == c, p.str());
                }
    }

    TEST_CASE("JS rows restrict to a single simple with coefficient one")
    {
        for (int n = 2; n <= 3; ++n)
            for (int m = 1; m <= 7; ++m) {
                auto C = restriction_coeffs(n, m);
                for (auto& lam : C.rows) {
                    auto prof = epsilon_profile(lam, n);
                    int nz = 0, which = -1;
                    for (int i = 0; i < n; ++i)
                        if (prof[i]) ++nz, which = i;
                    if (nz != 1 || prof[which] != 1) continue;
                    auto mu = *e_tilde(lam, n, which);
                    CHECK(C.at(lam, mu) == P("1"));
                    for (auto& nu : C.cols)
                        if (nu != mu) CHECK(C.at(lam, nu).is_zero());
                }
            }
    }
}
