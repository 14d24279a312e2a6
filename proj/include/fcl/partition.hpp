#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fcl {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    // "4,3,1", "3^2,1", "" / "0" / "∅" for the empty partition
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    // 1-based row; 0 past the last row
    int row(int r) const { return r >= 1 && r <= length() ? parts_[r - 1] : 0; }
    int col(int c) const;  // length of column c (1-based)

    Partition conjugate() const;
    std::string str() const;  // "4,3,1"; the empty partition prints as "0"

    auto operator<=>(const Partition& o) const { return parts_ <=> o.parts_; }
    bool operator==(const Partition& o) const { return parts_ == o.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// descending lexicographic order, the order used for every emitted list
struct DescLex {
    bool operator()(const Partition& a, const Partition& b) const { return b < a; }
};

struct Node {
    int row = 0;  // 1-based
    int col = 0;
    int content() const { return col - row; }
    int residue(int n, int colour = 0) const;
    auto operator<=>(const Node&) const = default;
};

bool is_regular(const Partition& p, int n);
bool is_regular_by_columns(const Partition& p, int n);
bool dominates(const Partition& a, const Partition& b);  // a ⊵ b, same size

std::vector<Partition> enumerate_partitions(int m);
std::vector<Partition> enumerate_regular(int m, int n);

// Addable and removable nodes, increasing column order.
std::vector<Node> addable_nodes(const Partition& p);
std::vector<Node> removable_nodes(const Partition& p);
std::vector<Node> addable_nodes(const Partition& p, int n, int i);
std::vector<Node> removable_nodes(const Partition& p, int n, int i);
Partition add_node(const Partition& p, const Node& x);
Partition remove_node(const Partition& p, const Node& x);

struct ContentLists {
    std::vector<int> addable;
    std::vector<int> removable;
};
ContentLists content_lists(const Partition& p);

// Integral weights of affine sl_n: sum a_i Lambda_i + d delta.
struct Weight {
    std::vector<long> fund;
    long delta = 0;

    static Weight zero(int n) { return Weight{std::vector<long>(n, 0), 0}; }
    static Weight fundamental(int n, int i);
    static Weight alpha(int n, int i);
    static Weight epsilon(int n, int i);

    int n() const { return static_cast<int>(fund.size()); }
    long level() const;
    bool dominant() const;
    Weight finite() const { return Weight{fund, 0}; }
    std::string str() const;  // "a0 a1 ... ;d"

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator*(long k, Weight a);
    bool operator==(const Weight&) const = default;
};

int cartan(int n, int i, int j);  // <alpha_i, h_j> for affine sl_n

struct ResidueData {
    std::vector<long> counts;  // m_i
    long energy = 0;           // m_0
    Weight weight;             // Lambda_0 - sum m_i alpha_i
};
ResidueData residue_data(const Partition& p, int n);

struct RimHook {
    int top_row = 0;
    std::vector<Node> nodes;
    Partition remainder;
};
// walking the rim from the end of each row
std::vector<RimHook> rim_hooks(const Partition& p, int n);
// via first-column hook lengths (beta numbers); one entry per hook, ordered by top row
std::vector<Partition> rim_hook_remainders_beta(const Partition& p, int n);

struct CoreData {
    Partition core;
    int weight = 0;
};
CoreData n_core(const Partition& p, int n);       // strip the topmost hook each time
CoreData n_core_last(const Partition& p, int n);  // strip the bottommost hook each time
bool is_core(const Partition& p, int n);

} // namespace fcl
