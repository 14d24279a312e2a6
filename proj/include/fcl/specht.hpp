#pragma once

#include "fcl/laurent.hpp"
#include "fcl/matrix.hpp"
#include "fcl/partition.hpp"

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace fcl {

class Tableau {
public:
    Tableau() = default;
    explicit Tableau(std::vector<std::vector<int>> rows);
    // "135/24"; entries >= 10 need commas: "1,3,10/2,4"
    static Tableau parse(std::string_view text);

    const std::vector<std::vector<int>>& rows() const { return rows_; }
    Partition shape() const;
    int size() const { return size_; }
    int at(int row, int col) const { return rows_[row - 1][col - 1]; }  // 1-based
    int column_length(int col) const;

    std::vector<int> column_word() const;  // down the columns, left to right
    bool row_standard() const;
    bool column_standard() const;
    bool standard() const { return row_standard() && column_standard(); }
    Tableau swapped(int a, int b) const;   // exchange entries a and b
    std::string str() const;

    auto operator<=>(const Tableau&) const = default;

private:
    std::vector<std::vector<int>> rows_;
    int size_ = 0;
};

using SpechtVector = std::map<Tableau, LaurentPoly>;

enum class TableauOrder {
    last_letter,  // compare rows holding m, m-1, ..., upper row first
    column_word,  // t_- first, the rest by column reading word
};

std::vector<Tableau> standard_tableaux(const Partition& shape, TableauOrder order = TableauOrder::last_letter);
Tableau t_minus(const Partition& shape);
bool precedes(int a, int b, const Tableau& t);
long perm_length(const Tableau& t);

struct GarnirTerm {
    Tableau tableau;
    LaurentPoly coeff;
};
// terms summing to zero; coefficient 1 on z, others (-v)^k with k >= 0
std::vector<GarnirTerm> garnir(const Tableau& z, int row, int col);

SpechtVector straighten(const Tableau& t);
SpechtVector straighten(const SpechtVector& u);
std::string to_string(const SpechtVector& u);

// columns are images of the standard basis vectors
PolyMatrix rep_matrix(const Partition& shape, int i, TableauOrder order = TableauOrder::last_letter);
PolyMatrix rep_word(const Partition& shape, const std::vector<int>& word, TableauOrder order = TableauOrder::last_letter);
// L_k(v) = sum_{i<k} v^{i-k} T_{(i,k)}; with hecke = false the v = 1 operator sum (i,k)
PolyMatrix jucys_murphy(const Partition& shape, int k, bool hecke = true);

// v -> integer value
std::vector<std::vector<Int>> specialize(const PolyMatrix& m, const Int& v0);
// v -> primitive k-th root of unity, entries reduced modulo the k-th cyclotomic polynomial
PolyMatrix specialize_cyclotomic(const PolyMatrix& m, int k);

struct HeckeReport {
    bool ok = true;
    long checks = 0;
    std::string failure;
};
HeckeReport hecke_relation_check(const Partition& shape);
// prod over removable contents c of (L_m - [c]_v) == 0
bool jm_annihilation(const Partition& shape);

} // namespace fcl
