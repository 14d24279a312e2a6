#pragma once

#include "fcl/canonical.hpp"
#include "fcl/laurent.hpp"
#include "fcl/matrix.hpp"
#include "fcl/specht.hpp"

#include <string>
#include <vector>

namespace fcl {

struct TextTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string csv_cell(const std::string& s);  // quoted when it holds a comma or quote
std::string to_csv(const TextTable& t);
std::string to_text(const TextTable& t);     // space-aligned columns

// row/column labelled matrix of preformatted cells; "0" cells print as "."
struct LabeledMatrix {
    std::vector<std::string> rows, cols;
    std::vector<std::vector<std::string>> cells;
};

LabeledMatrix labeled(const DecompositionMatrix& d, char var = 'q');
LabeledMatrix labeled(const IntegerMatrix& d);
LabeledMatrix labeled(const PolyMatrix& m, const std::vector<Tableau>& basis, char var = 'v');

std::string matrix_csv(const LabeledMatrix& m);
std::string matrix_text(const LabeledMatrix& m);

std::string exponent_str(const Exponent& e);
// (exponent, coefficient) rows; on the integer lattice every exponent 0..order is listed
TextTable series_table(const TruncatedSeries& s);

} // namespace fcl
