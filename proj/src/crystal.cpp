#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace fcl {

int Signature::epsilon() const
{
    return static_cast<int>(std::count_if(reduced.begin(), reduced.end(), [](auto& l) { return l.kind == 'R'; }));
}

int Signature::phi() const
{
    return static_cast<int>(std::count_if(reduced.begin(), reduced.end(), [](auto& l) { return l.kind == 'A'; }));
}

std::optional<Node> Signature::good_removable() const
{
    for (const auto& l : reduced)
        if (l.kind == 'R') return l.node;
    return std::nullopt;
}

std::optional<Node> Signature::good_addable() const
{
    for (auto it = reduced.rbegin(); it != reduced.rend(); ++it)
        if (it->kind == 'A') return it->node;
    return std::nullopt;
}

std::string Signature::word(const std::vector<SignatureLetter>& w)
{
    std::string s;
    for (const auto& l : w) s += l.kind + std::to_string(l.node.col);
    return s;
}

Signature signature(const Partition& p, int n, int i)
{
    require(n >= 2 && i >= 0 && i < n, "residue out of range");
    Signature sig;
    auto add = addable_nodes(p, n, i);
    auto rem = removable_nodes(p, n, i);
    // merge by column; an i-addable and i-removable node never share one
    std::size_t a = 0, r = 0;
    while (a < add.size() || r < rem.size()) {
        if (r == rem.size() || (a < add.size() && add[a].col < rem[r].col))
            sig.raw.push_back({'A', add[a++]});
        else
            sig.raw.push_back({'R', rem[r++]});
    }
    // cancel RA pairs with a stack
    for (const auto& l : sig.raw) {
        if (l.kind == 'A' && !sig.reduced.empty() && sig.reduced.back().kind == 'R')
            sig.reduced.pop_back();
        else
            sig.reduced.push_back(l);
    }
    return sig;
}

std::optional<Partition> e_tilde(const Partition& p, int n, int i)
{
    auto x = signature(p, n, i).good_removable();
    if (!x) return std::nullopt;
    return remove_node(p, *x);
}

std::optional<Partition> f_tilde(const Partition& p, int n, int i)
{
    auto x = signature(p, n, i).good_addable();
    if (!x) return std::nullopt;
    return add_node(p, *x);
}

int epsilon(const Partition& p, int n, int i)
{
    return signature(p, n, i).epsilon();
}

int phi(const Partition& p, int n, int i)
{
    return signature(p, n, i).phi();
}

std::vector<int> epsilon_profile(const Partition& p, int n)
{
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = epsilon(p, n, i);
    return e;
}

namespace {

bool node_order(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
}

} // namespace

CrystalGraph crystal_graph(int n, int max_m, bool component_of_empty, std::size_t max_nodes)
{
    require(n >= 2, "crystal needs n >= 2");
    require(max_m >= 0, "max_m must be nonnegative");
    CrystalGraph g;
    g.n = n;
    g.max_m = max_m;
    g.component = component_of_empty;
    if (component_of_empty) {
        std::vector<Partition> level{Partition{}};
        for (int m = 0; m <= max_m; ++m) {
            for (auto& p : level) g.nodes.push_back(p);
            if (g.nodes.size() > max_nodes) throw ResourceLimit("crystal graph exceeds the node cap");
            if (m == max_m) break;
            std::set<Partition, DescLex> next;
            for (auto& p : level)
                for (int i = 0; i < n; ++i)
                    if (auto q = f_tilde(p, n, i)) next.insert(*q);
            level.assign(next.begin(), next.end());
        }
    } else {
        for (int m = 0; m <= max_m; ++m) {
            for (auto& p : enumerate_partitions(m)) g.nodes.push_back(p);
            if (g.nodes.size() > max_nodes) throw ResourceLimit("crystal graph exceeds the node cap");
        }
    }
    std::sort(g.nodes.begin(), g.nodes.end(), node_order);
    std::map<Partition, std::size_t> index;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) index[g.nodes[k]] = k;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        if (g.nodes[k].size() == max_m) continue;
        for (int i = 0; i < n; ++i)
            if (auto q = f_tilde(g.nodes[k], n, i)) {
                auto it = index.find(*q);
                if (it == index.end()) throw InternalError("crystal edge leaves the vertex set");
                g.edges.push_back({k, it->second, i});
            }
    }
    return g;
}

std::string to_dot(const CrystalGraph& g)
{
    std::ostringstream os;
    os << "digraph crystal {\n";
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        const Partition& p = g.nodes[k];
        os << "  n" << k << " [label=\"" << p.str() << "\"";
        if (is_regular(p, g.n) && js_crystal(p, g.n)) os << ", peripheries=2";
        os << "];\n";
    }
    for (const auto& e : g.edges) os << "  n" << e.from << " -> n" << e.to << " [label=\"" << e.residue << "\"];\n";
    os << "}\n";
    return os.str();
}

std::vector<Partition> highest_weight_vertices(const CrystalGraph& g)
{
    std::vector<Partition> out;
    for (const auto& p : g.nodes) {
        auto e = epsilon_profile(p, g.n);
        if (std::all_of(e.begin(), e.end(), [](int x) { return x == 0; })) out.push_back(p);
    }
    return out;
}

Partition star_n(const Partition& p, int n)
{
    std::vector<int> v;
    for (int x : p.parts())
        for (int k = 0; k < n; ++k) v.push_back(x);
    return Partition(v);
}

bool js_crystal(const Partition& p, int n)
{
    require(is_regular(p, n), "js_crystal needs an n-regular partition");
    if (p.empty()) return true;
    auto e = epsilon_profile(p, n);
    int ones = 0, other = 0;
    for (int x : e) {
        if (x == 1)
            ++ones;
        else if (x != 0)
            ++other;
    }
    return ones == 1 && other == 0;
}

std::vector<Partition> socle_restriction(const Partition& p, int n)
{
    require(is_regular(p, n), "socle_restriction needs an n-regular partition");
    std::vector<Partition> out;
    for (int i = 0; i < n; ++i)
        if (auto q = e_tilde(p, n, i)) out.push_back(*q);
    std::sort(out.begin(), out.end(), DescLex{});
    return out;
}

std::vector<Partition> branching_vertices(int n, int j, int s, int t, int e)
{
    require(n >= 2 && j >= 0 && j < n && s >= 0 && t >= 0 && s < n && t < n, "bad branching indices");
    Weight target = Weight::fundamental(n, s) + Weight::fundamental(n, t) - Weight::fundamental(n, j);
    target.delta = -e;
    // m_k = e + c_k where C c = -T restricted to k = 1..n-1 (finite Cartan system)
    long total = 0;
    for (int k = 1; k < n; ++k) {
        long num = 0;
        for (int l = 1; l < n; ++l) num -= static_cast<long>(std::min(k, l)) * (n - std::max(k, l)) * target.fund[l];
        if (num % n != 0) return {};
        total += num / n;
    }
    long size = static_cast<long>(n) * e + total;
    std::vector<Partition> out;
    if (size < 0) return out;
    for (const Partition& p : enumerate_regular(static_cast<int>(size), n)) {
        if (residue_data(p, n).weight != target) continue;
        auto eps = epsilon_profile(p, n);
        bool ok = eps[j] <= 1;
        for (int i = 0; i < n && ok; ++i)
            if (i != j && eps[i] != 0) ok = false;
        if (ok) out.push_back(p);
    }
    return out;
}

TruncatedSeries branching_series_crystal(int n, int j, int s, int t, int D)
{
    LaurentPoly p;
    for (int e = 0; e <= D; ++e) p += LaurentPoly::monomial(static_cast<long>(branching_vertices(n, j, s, t, e).size()), e);
    return TruncatedSeries(p, D);
}

} // namespace fcl
