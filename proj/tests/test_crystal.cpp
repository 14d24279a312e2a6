#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace fcl;

namespace {

const Partition big{16, 13, 11, 10, 9, 8, 7, 5, 2};

int iterate_e(Partition p, int n, int i)
{
    int k = 0;
    while (auto q = e_tilde(p, n, i)) {
        p = *q;
        ++k;
    }
    return k;
}

int iterate_f(Partition p, int n, int i)
{
    int k = 0;
    while (auto q = f_tilde(p, n, i)) {
        p = *q;
        ++k;
    }
    return k;
}

} // namespace

TEST_SUITE("crystal")
{
    TEST_CASE("signature golden")
    {
        auto s0 = signature(big, 3, 0);
        CHECK(Signature::word(s0.raw) == "A1A3R5R7A9R10A12A14R16");
        CHECK(Signature::word(s0.reduced) == "A1A3R16");
        CHECK(Signature::word(signature(big, 3, 1).reduced) == "A6A8A17");
        CHECK(Signature::word(signature(big, 3, 2).reduced) == "R2R11R13");
        CHECK_FALSE(signature(big, 3, 1).good_removable());
        CHECK_FALSE(signature(big, 3, 2).good_addable());
        CHECK(signature(big, 3, 0).good_removable()->col == 16);
        CHECK(signature(big, 3, 0).good_addable()->col == 3);
    }

    TEST_CASE("Kashiwara operators")
    {
        for (int n = 2; n <= 4; ++n) CHECK(*f_tilde(Partition{}, n, 0) == Partition{1});
        CHECK(*e_tilde(big, 3, 2) == Partition{16, 13, 11, 10, 9, 8, 7, 5, 1});
        CHECK_FALSE(e_tilde(big, 3, 1));
        CHECK(epsilon_profile(big, 3) == std::vector<int>{1, 0, 3});
        for (int i = 0; i < 3; ++i) CHECK(epsilon(Partition{}, 3, i) == 0);
        CHECK(phi(Partition{}, 3, 0) == 1);
        CHECK(epsilon_profile(Partition{3, 2}, 3) == std::vector<int>{0, 0, 1});
    }

    TEST_CASE("reduced words have the A...AR...R shape")
    {
        for (int m = 0; m <= 10; ++m)
            for (auto& p : enumerate_partitions(m))
                for (int i = 0; i < 3; ++i) {
                    auto s = signature(p, 3, i);
                    bool seenR = false;
                    for (auto& l : s.reduced) {
                        if (l.kind == 'R') seenR = true;
                        CHECK_FALSE((seenR && l.kind == 'A'));
                    }
                }
    }

    TEST_CASE("epsilon and phi match iteration")
    {
        for (int n = 2; n <= 3; ++n)
            for (int m = 0; m <= 10; ++m)
                for (auto& p : enumerate_regular(m, n))
                    for (int i = 0; i < n; ++i) {
                        CHECK(epsilon(p, n, i) == iterate_e(p, n, i));
                        if (m <= 7) CHECK(phi(p, n, i) == iterate_f(p, n, i));
                        if (auto q = e_tilde(p, n, i)) CHECK(*f_tilde(*q, n, i) == p);
                        if (auto q = f_tilde(p, n, i)) {
                            CHECK(*e_tilde(*q, n, i) == p);
                            // the added node has residue i
                            auto before = residue_data(p, n).counts, after = residue_data(*q, n).counts;
                            CHECK(after[i] == before[i] + 1);
                        }
                    }
    }

    TEST_CASE("component of the empty partition")
    {
        auto g = crystal_graph(2, 5, true);
        std::vector<int> levels(6, 0);
        for (auto& p : g.nodes) ++levels[p.size()];
        CHECK(levels == std::vector<int>{1, 1, 1, 2, 2, 3});
        for (int n = 2; n <= 4; ++n) {
            auto c = crystal_graph(n, 12, true);
            std::vector<std::size_t> cnt(13, 0);
            for (auto& p : c.nodes) {
                ++cnt[p.size()];
                CHECK(is_regular(p, n));
            }
            for (int m = 0; m <= 12; ++m) CHECK(cnt[m] == enumerate_regular(m, n).size());
        }
    }

    TEST_CASE("graph edges")
    {
        auto g = crystal_graph(3, 8, true);
        std::map<std::pair<std::size_t, int>, int> indeg;
        for (auto& e : g.edges) {
            CHECK(g.nodes[e.to].size() == g.nodes[e.from].size() + 1);
            CHECK(*f_tilde(g.nodes[e.from], 3, e.residue) == g.nodes[e.to]);
            CHECK(++indeg[{e.to, e.residue}] == 1);
        }
        int js_low = 0;
        for (auto& p : g.nodes)
            if (p.size() <= 2 && js_crystal(p, 3)) ++js_low;
        CHECK(js_low == 4);
        auto dot = to_dot(g);
        CHECK(dot.find("peripheries=2") != std::string::npos);
    }

    TEST_CASE("components of the full graph are headed by n-fold partitions")
    {
        auto g = crystal_graph(2, 6, false);
        auto heads = highest_weight_vertices(g);
        std::set<Partition> expect;
        for (int k = 0; 2 * k <= 6; ++k)
            for (auto& p : enumerate_partitions(k)) expect.insert(star_n(p, 2));
        CHECK(std::set<Partition>(heads.begin(), heads.end()) == expect);
        CHECK(star_n(Partition{2, 1}, 3) == Partition{2, 2, 2, 1, 1, 1});
        CHECK_THROWS_AS(crystal_graph(2, 30, false, 1000), ResourceLimit);
    }

    TEST_CASE("socle of restriction")
    {
        CHECK(socle_restriction(Partition{}, 3).empty());
        CHECK(socle_restriction(Partition{1}, 3) == std::vector<Partition>{Partition{}});
        CHECK(socle_restriction(Partition{3, 2}, 3).size() == 1);
        CHECK_THROWS_AS(socle_restriction(Partition{1, 1, 1}, 3), InvalidArgument);
    }

    TEST_CASE("crystal JS test")
    {
        CHECK(js_crystal(Partition{2, 1}, 3));
        CHECK(js_crystal(Partition{4, 4}, 3));
        CHECK_FALSE(js_crystal(Partition{2, 1}, 2));
        CHECK(js_crystal(Partition{}, 3));
        CHECK_THROWS_AS(js_crystal(Partition{2, 2}, 2), InvalidArgument);
    }

    TEST_CASE("branching multiplicities from vertex counts")
    {
        CHECK(branching_series_crystal(3, 0, 0, 0, 2).poly().str() == "1 + q^2");
        CHECK(branching_series_crystal(3, 0, 1, 2, 3).poly().str() == "q + 2*q^2 + 2*q^3");
        CHECK(branching_series_crystal(3, 1, 1, 0, 2).poly().str() == "1 + q + 2*q^2");
        for (auto& p : branching_vertices(3, 0, 1, 2, 2)) {
            auto prof = epsilon_profile(p, 3);
            CHECK(prof[0] <= 1);
            CHECK(prof[1] == 0);
            CHECK(prof[2] == 0);
        }
        CHECK(branching_vertices(3, 0, 1, 2, 2).size() == 2);
    }
}
