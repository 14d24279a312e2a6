#pragma once

#include "fcl/laurent.hpp"
#include "fcl/partition.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fcl {

struct SignatureLetter {
    char kind;  // 'A' addable, 'R' removable
    Node node;
    bool operator==(const SignatureLetter&) const = default;
};

struct Signature {
    std::vector<SignatureLetter> raw;
    std::vector<SignatureLetter> reduced;  // A...AR...R

    int epsilon() const;
    int phi() const;
    std::optional<Node> good_removable() const;  // leftmost surviving R
    std::optional<Node> good_addable() const;    // rightmost surviving A
    static std::string word(const std::vector<SignatureLetter>& w);  // "A1A3R16"
};

Signature signature(const Partition& p, int n, int i);
std::optional<Partition> e_tilde(const Partition& p, int n, int i);
std::optional<Partition> f_tilde(const Partition& p, int n, int i);
int epsilon(const Partition& p, int n, int i);
int phi(const Partition& p, int n, int i);
std::vector<int> epsilon_profile(const Partition& p, int n);

struct CrystalEdge {
    std::size_t from, to;
    int residue;
};

struct CrystalGraph {
    int n = 2;
    int max_m = 0;
    bool component = true;
    std::vector<Partition> nodes;  // by size, then descending lex
    std::vector<CrystalEdge> edges;
};

CrystalGraph crystal_graph(int n, int max_m, bool component_of_empty, std::size_t max_nodes = 200000);
std::string to_dot(const CrystalGraph& g);
// vertices with every epsilon_i zero
std::vector<Partition> highest_weight_vertices(const CrystalGraph& g);
Partition star_n(const Partition& p, int n);  // parts repeated n times

bool js_crystal(const Partition& p, int n);
std::vector<Partition> socle_restriction(const Partition& p, int n);

// number of n-regular vertices of weight Lambda_s+Lambda_t-Lambda_j-e*delta
// with epsilon_j <= 1 and every other epsilon zero, for e = 0..D
TruncatedSeries branching_series_crystal(int n, int j, int s, int t, int D);
// partitions counted in the coefficient of q^e above
std::vector<Partition> branching_vertices(int n, int j, int s, int t, int e);

} // namespace fcl
