#include "fcl/errors.hpp"
#include "fcl/specht.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fcl;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s, 'v'); }
Tableau T(const char* s) { return Tableau::parse(s); }

using IntMat = std::vector<std::vector<Int>>;

IntMat mul(const IntMat& a, const IntMat& b)
{
    std::size_t n = a.size();
    IntMat c(n, std::vector<Int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

SpechtVector combine(const std::vector<GarnirTerm>& rel)
{
    SpechtVector total;
    for (auto& g : rel)
        for (auto& [t, c] : straighten(g.tableau)) {
            total[t] += g.coeff * c;
            if (total[t].is_zero()) total.erase(t);
        }
    return total;
}

} // namespace

TEST_SUITE("specht")
{
    TEST_CASE("tableau basics")
    {
        auto t = T("135/24");
        CHECK(t.shape() == Partition{3, 2});
        CHECK(t.standard());
        CHECK(t.at(2, 1) == 2);
        CHECK(t.column_word() == std::vector<int>{1, 2, 3, 4, 5});
        CHECK(T("1,3,5/2,4").at(1, 3) == 5);
        CHECK(T("1,2,3,10,4,12/6,8,5/9,11,7/13").str() == "1,2,3,10,4,12/6,8,5/9,11,7/13");
        CHECK_FALSE(T("213/45").row_standard());
        CHECK(T("213/45").column_standard());
        CHECK_THROWS_AS(T("12/2"), InvalidArgument);
        CHECK_THROWS_AS(T("1/23"), InvalidArgument);
    }

    TEST_CASE("standard tableaux")
    {
        auto s = standard_tableaux(Partition{4, 2});
        CHECK(s.size() == 9);
        CHECK(s.front() == T("1356/24"));
        CHECK(s.front() == t_minus(Partition{4, 2}));
        CHECK(standard_tableaux(Partition{5}).size() == 1);
        CHECK(standard_tableaux(Partition{3, 2}) ==
              std::vector<Tableau>{T("135/24"), T("125/34"), T("134/25"), T("124/35"), T("123/45")});
        for (auto order : {TableauOrder::last_letter, TableauOrder::column_word}) {
            auto x = standard_tableaux(Partition{4, 2}, order);
            CHECK(std::set<Tableau>(x.begin(), x.end()) == std::set<Tableau>(s.begin(), s.end()));
            CHECK(x.front() == t_minus(Partition{4, 2}));
        }
        auto cw = standard_tableaux(Partition{3, 3}, TableauOrder::column_word);
        for (std::size_t k = 2; k < cw.size(); ++k) CHECK(cw[k - 1].column_word() < cw[k].column_word());
        for (int m = 1; m <= 8; ++m)
            for (auto& p : enumerate_partitions(m)) {
                std::size_t f = 0;
                for (auto& x : removable_nodes(p)) f += standard_tableaux(remove_node(p, x)).size();
                CHECK(standard_tableaux(p).size() == f);
                for (auto& t : standard_tableaux(p)) CHECK(t.standard());
            }
    }

    TEST_CASE("precedence and lengths")
    {
        auto tm = t_minus(Partition{4, 2});
        for (int a = 1; a <= 6; ++a)
            for (int b = 1; b <= 6; ++b)
                if (a != b) CHECK(precedes(a, b, tm) == (a < b));
        CHECK(perm_length(tm) == 0);
        CHECK(perm_length(tm.swapped(1, 2)) == 1);
        CHECK(perm_length(T("1256/34")) == 1);
        for (auto& t : standard_tableaux(Partition{4, 2})) {
            auto w = t.column_word();
            long inv = 0;
            for (std::size_t a = 0; a < w.size(); ++a)
                for (std::size_t b = a + 1; b < w.size(); ++b) inv += w[a] > w[b];
            CHECK(perm_length(t) == inv);
        }
    }

    TEST_CASE("Garnir golden")
    {
        auto z = T("1,2,3,10,4,12/6,8,5/9,11,7/13");
        auto rel = garnir(z, 2, 2);
        REQUIRE(rel.size() == 6);
        std::vector<LaurentPoly> coeffs;
        for (auto& g : rel) coeffs.push_back(g.coeff);
        CHECK(coeffs == std::vector<LaurentPoly>{P("1"), P("-v"), P("v^2"), P("v^2"), P("-v^3"), P("v^4")});
        CHECK(rel[0].tableau == z);
        CHECK(rel[1].tableau == T("1,2,3,10,4,12/6,5,8/9,11,7/13"));
        std::set<Tableau> v2{rel[2].tableau, rel[3].tableau};
        CHECK(v2 == std::set<Tableau>{T("1,2,5,10,4,12/6,3,8/9,11,7/13"), T("1,2,3,10,4,12/6,5,11/9,8,7/13")});
        CHECK(rel[4].tableau == T("1,2,5,10,4,12/6,3,11/9,8,7/13"));
        CHECK(rel[5].tableau == T("1,2,8,10,4,12/6,3,11/9,5,7/13"));
        CHECK(combine(rel).empty());
        CHECK_THROWS_AS(garnir(z, 1, 1), InvalidArgument);
    }

    TEST_CASE("small Garnir relations")
    {
        auto rel = garnir(T("21/34"), 1, 1);
        CHECK(rel.size() == 3);
        CHECK(rel[0].coeff == P("1"));
        CHECK(combine(rel).empty());
        for (auto& g : rel) CHECK(g.coeff.nonnegative_exponents());
    }

    TEST_CASE("straightening")
    {
        auto s = straighten(T("135/24"));
        CHECK(s.size() == 1);
        CHECK(s.at(T("135/24")) == P("1"));
        auto c = straighten(T("235/14"));
        CHECK(c.size() == 1);
        CHECK(c.at(T("135/24")) == P("-1"));
        SpechtVector expect{{T("123/45"), P("v")}, {T("134/25"), P("-v^3")}, {T("135/24"), P("v^4")}};
        CHECK(straighten(T("213/45")) == expect);
        CHECK(straighten(expect) == expect);
    }

    TEST_CASE("T1 on the (3,2) module")
    {
        auto M = rep_matrix(Partition{3, 2}, 1);
        PolyMatrix E(5, 5);
        E(0, 0) = P("-1");
        E(1, 1) = P("v");
        E(2, 2) = P("-1");
        E(3, 3) = P("v");
        E(4, 4) = P("v");
        E(0, 1) = P("-v^2");
        E(0, 4) = P("v^4");
        E(2, 3) = P("-v^2");
        E(2, 4) = P("-v^3");
        CHECK(M == E);
    }

    TEST_CASE("one-dimensional modules")
    {
        for (int m = 2; m <= 5; ++m)
            for (int i = 1; i < m; ++i) {
                auto row = rep_matrix(Partition{m}, i);
                auto col = rep_matrix(Partition(std::vector<int>(m, 1)), i);
                CHECK(row(0, 0) == P("v"));
                CHECK(col(0, 0) == P("-1"));
            }
    }

    TEST_CASE("Hecke relations")
    {
        for (int m = 1; m <= 5; ++m)
            for (auto& p : enumerate_partitions(m)) {
                auto r = hecke_relation_check(p);
                CHECK_MESSAGE(r.ok, p.str() << ": " << r.failure);
                for (int i = 1; i < m; ++i) {
                    auto M = rep_matrix(p, i);
                    for (std::size_t a = 0; a < M.rows(); ++a)
                        for (std::size_t b = 0; b < M.cols(); ++b) {
                            CHECK(M(a, b).den() == 1);
                            CHECK(M(a, b).nonnegative_exponents());
                        }
                }
            }
        auto A = rep_matrix(Partition{3, 2}, 2), B = rep_matrix(Partition{3, 2}, 3);
        CHECK(A * B * A == B * A * B);
        CHECK(rep_word(Partition{3, 2}, {}) == PolyMatrix::identity(5));
        CHECK(rep_word(Partition{3, 2}, {2, 3, 2}) == A * B * A);
    }

    TEST_CASE("Jucys-Murphy elements")
    {
        for (int m = 1; m <= 5; ++m)
            for (auto& p : enumerate_partitions(m)) CHECK_MESSAGE(jm_annihilation(p), p.str());
        // v = 1 operator on the trivial module is m-1
        auto L = jucys_murphy(Partition{4}, 4, false);
        CHECK(L(0, 0) == P("3"));
    }

    TEST_CASE("specializations")
    {
        for (auto& p : {Partition{3, 2}, Partition{2, 2, 1}, Partition{4, 1}}) {
            int m = p.size();
            for (int i = 1; i < m; ++i) {
                auto M = rep_matrix(p, i);
                auto one = specialize(M, 1);
                auto sq = mul(one, one);
                for (std::size_t a = 0; a < sq.size(); ++a)
                    for (std::size_t b = 0; b < sq.size(); ++b) CHECK(sq[a][b] == (a == b ? 1 : 0));
                auto neg = specialize(M, -1);
                auto nsq = mul(neg, neg);
                for (std::size_t a = 0; a < nsq.size(); ++a)
                    for (std::size_t b = 0; b < nsq.size(); ++b) CHECK(nsq[a][b] == -2 * neg[a][b] - (a == b ? 1 : 0));
            }
        }
    }

    TEST_CASE("cyclotomic specialization keeps the relations")
    {
        for (auto& p : enumerate_partitions(4)) {
            std::vector<PolyMatrix> g;
            for (int i = 1; i < 4; ++i) g.push_back(specialize_cyclotomic(rep_matrix(p, i), 3));
            auto I = PolyMatrix::identity(g[0].rows());
            auto v = LaurentPoly::q(1);
            auto red = [](const PolyMatrix& x) { return specialize_cyclotomic(x, 3); };
            for (auto& T : g) CHECK(red(T * T - (v - 1) * T - v * I).is_zero());
            CHECK(red(g[0] * g[1] * g[0] - g[1] * g[0] * g[1]).is_zero());
            CHECK(red(g[1] * g[2] * g[1] - g[2] * g[1] * g[2]).is_zero());
            CHECK(red(g[0] * g[2] - g[2] * g[0]).is_zero());
            for (auto& T : g)
                for (std::size_t a = 0; a < T.rows(); ++a)
                    for (std::size_t b = 0; b < T.cols(); ++b)
                        if (!T(a, b).is_zero()) CHECK(T(a, b).max_exponent() < Exponent(2));
        }
    }
}
