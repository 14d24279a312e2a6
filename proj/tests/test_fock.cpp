#include "fcl/errors.hpp"
#include "fcl/fock.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace fcl;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

// f_i and e_i straight from the node-count definitions, using brute-force node lists
FockVector oracle_f(int n, int i, const Partition& lam)
{
    FockVector out;
    auto add = oracle::addable(lam.parts());
    auto rem = oracle::removable(lam.parts());
    for (auto [r, c] : add) {
        if (oracle::mod(c - r, n) != i) continue;
        int N = 0;
        for (auto [r2, c2] : add)
            if (c2 > c && oracle::mod(c2 - r2, n) == i) ++N;
        for (auto [r2, c2] : rem)
            if (c2 > c && oracle::mod(c2 - r2, n) == i) --N;
        auto parts = lam.parts();
        if (r > static_cast<int>(parts.size()))
            parts.push_back(1);
        else
            ++parts[r - 1];
        accumulate(out, Partition(parts), LaurentPoly::q(N));
    }
    return out;
}

FockVector oracle_e(int n, int i, const Partition& lam)
{
    FockVector out;
    for (auto [r, c] : oracle::removable(lam.parts())) {
        if (oracle::mod(c - r, n) != i) continue;
        auto parts = lam.parts();
        if (--parts[r - 1] == 0) parts.pop_back();
        int N = 0;
        for (auto [r2, c2] : oracle::addable(parts))
            if (c2 < c && oracle::mod(c2 - r2, n) == i) ++N;
        for (auto [r2, c2] : oracle::removable(parts))
            if (c2 < c && oracle::mod(c2 - r2, n) == i) --N;
        accumulate(out, Partition(parts), LaurentPoly::q(-N));
    }
    return out;
}

FockVector v(std::initializer_list<int> p, const char* c = "1") { return basis_vector(Partition(p), P(c)); }

} // namespace

TEST_SUITE("fock")
{
    TEST_CASE("f examples")
    {
        CHECK(f_apply(2, 0, basis_vector({})) == v({1}));
        CHECK(f_apply(2, 1, v({1})) == add(v({2}), v({1, 1}, "q")));
        CHECK(f_apply(2, 1, v({2})) == v({2, 1}, "q^-1"));
    }

    TEST_CASE("e examples")
    {
        for (int i = 0; i < 3; ++i) CHECK(e_apply(3, i, basis_vector({})).empty());
        auto got = e_apply(2, 1, v({2, 1}));
        CHECK(got == oracle_e(2, 1, Partition{2, 1}));
        CHECK(got == add(v({2}), v({1, 1}, "q")));
        CHECK(f_apply(2, 1, v({1})).at(Partition{2}) == P("1"));
        CHECK(e_apply(2, 1, v({2})).at(Partition{1}) == P("q^-1"));
    }

    TEST_CASE("actions agree with the definition oracle")
    {
        for (int n = 2; n <= 4; ++n)
            for (int m = 0; m <= 7; ++m)
                for (auto& p : enumerate_partitions(m))
                    for (int i = 0; i < n; ++i) {
                        auto f = f_apply(n, i, basis_vector(p));
                        auto e = e_apply(n, i, basis_vector(p));
                        CHECK(f == oracle_f(n, i, p));
                        CHECK(e == oracle_e(n, i, p));
                        for (auto& [mu, c] : f) CHECK(mu.size() == m + 1);
                        for (auto& [mu, c] : e) CHECK(mu.size() == m - 1);
                    }
    }

    TEST_CASE("diagonal operators")
    {
        CHECK(h_eigenvalue(Partition{}, 2, 0) == P("q"));
        CHECK(d_eigenvalue(Partition{}, 2) == P("1"));
        CHECK(h_eigenvalue(Partition{1}, 2, 0) == P("q^-1"));
        CHECK(d_eigenvalue(Partition{3, 1}, 2) == P("q^-2"));
        for (int n = 2; n <= 4; ++n)
            for (int m = 0; m <= 10; ++m)
                for (auto& p : enumerate_partitions(m)) {
                    auto w = residue_data(p, n).weight;
                    for (int i = 0; i < n; ++i) {
                        CHECK(n_i(p, n, i) == w.fund[i]);
                        CHECK(h_eigenvalue(p, n, i) == LaurentPoly::q(w.fund[i]));
                    }
                }
    }

    TEST_CASE("divided powers")
    {
        auto u = f_apply(2, 0, basis_vector({}));
        CHECK(divided_f(2, 1, 1, u) == f_apply(2, 1, u));
        CHECK(divided_f(2, 1, 2, u) == v({2, 1}));
        CHECK(divided_f(3, 0, 2, basis_vector({})).empty());
        // generate by divided powers and make sure each division stays exact
        for (int code = 0; code < 81; ++code) {
            FockVector w = basis_vector({});
            int c = code;
            for (int step = 0; step < 4; ++step, c /= 3) CHECK_NOTHROW(w = divided_f(3, step % 3, c % 3 + 1, w));
        }
        auto w = divided_f(2, 0, 1, basis_vector({}));
        w = divided_f(2, 1, 2, w);
        CHECK(divided_f(2, 0, 2, w).size() == 3);
    }

    TEST_CASE("classical action")
    {
        CHECK(folded_f(Partition{1}, 2, 1) == std::vector<Partition>{{2}, {1, 1}});
        std::vector<Partition> down;
        for (int c = -3; c <= 5; ++c)
            for (auto& p : classical_e(Partition{4, 2}, c)) down.push_back(p);
        std::sort(down.begin(), down.end(), DescLex{});
        CHECK(down == std::vector<Partition>{{4, 1}, {3, 2}});
        CHECK(classical_e(Partition{4, 2}, 0) == std::vector<Partition>{{4, 1}});
        CHECK(classical_f(Partition{}, 0) == std::vector<Partition>{{1}});
        CHECK(classical_f(Partition{}, 1).empty());
    }

    TEST_CASE("q = 1 specialization is the folded action")
    {
        for (int n = 2; n <= 3; ++n)
            for (int m = 0; m <= 8; ++m)
                for (auto& p : enumerate_partitions(m))
                    for (int i = 0; i < n; ++i) {
                        std::map<Partition, Int, DescLex> ff, ee;
                        for (auto& mu : folded_f(p, n, i)) ff[mu] += 1;
                        for (auto& mu : folded_e(p, n, i)) ee[mu] += 1;
                        CHECK(at_one(f_apply(n, i, basis_vector(p))) == ff);
                        CHECK(at_one(e_apply(n, i, basis_vector(p))) == ee);
                    }
    }

    TEST_CASE("relations")
    {
        auto a = relation_check(2, 4);
        CHECK_MESSAGE(a.ok, a.failure);
        auto b = relation_check(3, 5);
        CHECK_MESSAGE(b.ok, b.failure);
        CHECK(b.checks > 0);
    }

    TEST_CASE("corrupted rule is caught")
    {
        FockRules bad;
        bad.right_sign = -1;
        auto r = relation_check(2, 3, bad);
        CHECK_FALSE(r.ok);
        CHECK_FALSE(r.failure.empty());
    }

    TEST_CASE("text form")
    {
        CHECK(to_string(add(v({2}), v({1, 1}, "q"))) == "v[2] + q * v[1,1]");
    }
}
