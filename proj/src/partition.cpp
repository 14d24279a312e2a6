#include "fcl/partition.hpp"
#include "fcl/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace fcl {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw InvalidArgument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(std::string_view text)
{
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '(' && ch != ')') s += ch;
    if (s.empty() || s == "0" || s == "∅" || s == "-") return {};
    std::vector<int> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) throw InvalidArgument("empty part in '" + std::string(text) + "'");
        auto hat = item.find('^');
        try {
            std::size_t used = 0;
            int value = std::stoi(item.substr(0, hat), &used);
            if (used != (hat == std::string::npos ? item.size() : hat)) throw std::invalid_argument("");
            int mult = 1;
            if (hat != std::string::npos) {
                std::string m = item.substr(hat + 1);
                mult = std::stoi(m, &used);
                if (used != m.size() || mult < 0) throw std::invalid_argument("");
            }
            for (int k = 0; k < mult; ++k) parts.push_back(value);
        } catch (const std::logic_error&) {
            throw InvalidArgument("cannot parse partition '" + std::string(text) + "'");
        }
    }
    return Partition(parts);
}

int Partition::col(int c) const
{
    if (c < 1) return 0;
    int k = 0;
    while (k < length() && parts_[k] >= c) ++k;
    return k;
}

Partition Partition::conjugate() const
{
    std::vector<int> c;
    int width = empty() ? 0 : parts_[0];
    for (int j = 1; j <= width; ++j) c.push_back(col(j));
    return Partition(c);
}

std::string Partition::str() const
{
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

int Node::residue(int n, int colour) const
{
    return static_cast<int>(pmod(content() + colour, n));
}

bool is_regular(const Partition& p, int n)
{
    const auto& v = p.parts();
    std::size_t i = 0;
    while (i < v.size()) {
        std::size_t j = i;
        while (j < v.size() && v[j] == v[i]) ++j;
        if (static_cast<int>(j - i) >= n) return false;
        i = j;
    }
    return true;
}

bool is_regular_by_columns(const Partition& p, int n)
{
    Partition c = p.conjugate();
    for (int j = 1; j <= c.length(); ++j)
        if (c.row(j) - c.row(j + 1) >= n) return false;
    return true;
}

bool dominates(const Partition& a, const Partition& b)
{
    if (a.size() != b.size()) return false;
    int sa = 0, sb = 0;
    for (int i = 1; i <= std::max(a.length(), b.length()); ++i) {
        sa += a.row(i);
        sb += b.row(i);
        if (sa < sb) return false;
    }
    return true;
}

std::vector<Partition> enumerate_partitions(int m)
{
    if (m < 0) throw InvalidArgument("negative partition size");
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, maxpart); k >= 1; --k) {
            cur.push_back(k);
            rec(rest - k, k);
            cur.pop_back();
        }
    };
    rec(m, m);
    return out;
}

std::vector<Partition> enumerate_regular(int m, int n)
{
    if (n < 2) throw InvalidArgument("regularity needs n >= 2");
    std::vector<Partition> out;
    std::vector<int> cur;
    // choose parts largest first, each with multiplicity < n
    std::function<void(int, int)> rec = [&](int rest, int below) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(rest, below - 1); k >= 1; --k) {
            for (int mult = 1; mult < n && mult * k <= rest; ++mult) {
                for (int t = 0; t < mult; ++t) cur.push_back(k);
                rec(rest - mult * k, k);
                for (int t = 0; t < mult; ++t) cur.pop_back();
            }
        }
    };
    rec(m, m + 1);
    std::sort(out.begin(), out.end(), DescLex{});
    return out;
}

std::vector<Node> addable_nodes(const Partition& p)
{
    // scanning rows bottom to top gives increasing columns
    std::vector<Node> out;
    for (int r = p.length() + 1; r >= 1; --r) {
        int c = p.row(r) + 1;
        if (r == 1 || p.row(r - 1) >= c) out.push_back({r, c});
    }
    return out;
}

std::vector<Node> removable_nodes(const Partition& p)
{
    std::vector<Node> out;
    for (int r = p.length(); r >= 1; --r)
        if (p.row(r) > p.row(r + 1)) out.push_back({r, p.row(r)});
    return out;
}

std::vector<Node> addable_nodes(const Partition& p, int n, int i)
{
    std::vector<Node> out;
    for (const Node& x : addable_nodes(p))
        if (x.residue(n) == i) out.push_back(x);
    return out;
}

std::vector<Node> removable_nodes(const Partition& p, int n, int i)
{
    std::vector<Node> out;
    for (const Node& x : removable_nodes(p))
        if (x.residue(n) == i) out.push_back(x);
    return out;
}

Partition add_node(const Partition& p, const Node& x)
{
    std::vector<int> v = p.parts();
    if (x.row == static_cast<int>(v.size()) + 1)
        v.push_back(0);
    else if (x.row < 1 || x.row > static_cast<int>(v.size()))
        throw InvalidArgument("node row out of range");
    if (v[x.row - 1] + 1 != x.col) throw InvalidArgument("node is not addable");
    ++v[x.row - 1];
    return Partition(v);
}

Partition remove_node(const Partition& p, const Node& x)
{
    std::vector<int> v = p.parts();
    if (x.row < 1 || x.row > static_cast<int>(v.size()) || v[x.row - 1] != x.col)
        throw InvalidArgument("node is not removable");
    --v[x.row - 1];
    return Partition(v);  // throws if the result is not a partition
}

ContentLists content_lists(const Partition& p)
{
    ContentLists out;
    for (const Node& x : addable_nodes(p)) out.addable.push_back(x.content());
    for (const Node& x : removable_nodes(p)) out.removable.push_back(x.content());
    return out;
}

Weight Weight::fundamental(int n, int i)
{
    Weight w = zero(n);
    w.fund[pmod(i, n)] = 1;
    return w;
}

Weight Weight::alpha(int n, int i)
{
    Weight w = zero(n);
    i = static_cast<int>(pmod(i, n));
    w.fund[i] += 2;
    w.fund[pmod(i - 1, n)] -= 1;
    w.fund[pmod(i + 1, n)] -= 1;
    if (i == 0) w.delta = 1;
    return w;
}

Weight Weight::epsilon(int n, int i)
{
    return fundamental(n, i + 1) - fundamental(n, i);
}

long Weight::level() const
{
    return std::accumulate(fund.begin(), fund.end(), 0L);
}

bool Weight::dominant() const
{
    return std::all_of(fund.begin(), fund.end(), [](long a) { return a >= 0; });
}

std::string Weight::str() const
{
    std::string s;
    for (std::size_t i = 0; i < fund.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(fund[i]);
    }
    return s + ";" + std::to_string(delta);
}

Weight& Weight::operator+=(const Weight& o)
{
    if (o.n() != n()) throw InvalidArgument("weights of different rank");
    for (int i = 0; i < n(); ++i) fund[i] += o.fund[i];
    delta += o.delta;
    return *this;
}

Weight& Weight::operator-=(const Weight& o)
{
    if (o.n() != n()) throw InvalidArgument("weights of different rank");
    for (int i = 0; i < n(); ++i) fund[i] -= o.fund[i];
    delta -= o.delta;
    return *this;
}

Weight operator*(long k, Weight a)
{
    for (auto& x : a.fund) x *= k;
    a.delta *= k;
    return a;
}

int cartan(int n, int i, int j)
{
    return static_cast<int>(Weight::alpha(n, i).fund[pmod(j, n)]);
}

ResidueData residue_data(const Partition& p, int n)
{
    ResidueData d;
    d.counts.assign(n, 0);
    for (int r = 1; r <= p.length(); ++r)
        for (int c = 1; c <= p.row(r); ++c) ++d.counts[Node{r, c}.residue(n)];
    d.energy = d.counts[0];
    d.weight = Weight::fundamental(n, 0);
    for (int i = 0; i < n; ++i) d.weight -= d.counts[i] * Weight::alpha(n, i);
    return d;
}

std::vector<RimHook> rim_hooks(const Partition& p, int n)
{
    std::vector<RimHook> out;
    for (int r0 = 1; r0 <= p.length(); ++r0) {
        Node x{r0, p.row(r0)};
        std::vector<Node> nodes{x};
        bool ok = true;
        while (static_cast<int>(nodes.size()) < n) {
            if (p.row(x.row + 1) >= x.col)
                ++x.row;
            else if (x.col > 1)
                --x.col;
            else {
                ok = false;
                break;
            }
            nodes.push_back(x);
        }
        // the strip must end at the foot of its column
        if (!ok || p.row(x.row + 1) >= x.col) continue;
        std::vector<int> v = p.parts();
        for (const Node& y : nodes) --v[y.row - 1];
        RimHook h;
        h.top_row = r0;
        h.nodes = nodes;
        h.remainder = Partition(v);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<Partition> rim_hook_remainders_beta(const Partition& p, int n)
{
    int r = p.length();
    std::vector<int> beta(r);
    for (int i = 0; i < r; ++i) beta[i] = p.row(i + 1) + r - (i + 1);
    std::set<int> present(beta.begin(), beta.end());
    std::vector<Partition> out;
    for (int i = 0; i < r; ++i) {
        int b = beta[i] - n;
        if (b < 0 || present.count(b)) continue;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> parts;
        for (int k = 0; k < r; ++k) parts.push_back(nb[k] - (r - 1 - k));
        out.emplace_back(parts);
    }
    return out;
}

CoreData n_core(const Partition& p, int n)
{
    CoreData d{p, 0};
    for (auto hooks = rim_hooks(d.core, n); !hooks.empty(); hooks = rim_hooks(d.core, n)) {
        d.core = hooks.front().remainder;
        ++d.weight;
    }
    return d;
}

CoreData n_core_last(const Partition& p, int n)
{
    CoreData d{p, 0};
    for (auto hooks = rim_hooks(d.core, n); !hooks.empty(); hooks = rim_hooks(d.core, n)) {
        d.core = hooks.back().remainder;
        ++d.weight;
    }
    return d;
}

bool is_core(const Partition& p, int n)
{
    return rim_hooks(p, n).empty();
}

} // namespace fcl
