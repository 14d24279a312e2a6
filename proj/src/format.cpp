#include "fcl/format.hpp"

#include <algorithm>
#include <sstream>

namespace fcl {

std::string csv_cell(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

std::string to_csv(const TextTable& t)
{
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        for (std::size_t k = 0; k < r.size(); ++k) os << (k ? "," : "") << csv_cell(r[k]);
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

std::string to_text(const TextTable& t)
{
    std::vector<std::size_t> w(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& r) {
        for (std::size_t k = 0; k < r.size() && k < w.size(); ++k) w[k] = std::max(w[k], r[k].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& r) {
        std::string s;
        for (std::size_t k = 0; k < r.size(); ++k) {
            if (k) s += "  ";
            s += r[k];
            if (k + 1 < r.size() && k < w.size()) s += std::string(w[k] - r[k].size(), ' ');
        }
        os << s << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    return os.str();
}

LabeledMatrix labeled(const DecompositionMatrix& d, char var)
{
    LabeledMatrix m;
    for (const auto& p : d.rows) m.rows.push_back(p.str());
    for (const auto& p : d.cols) m.cols.push_back(p.str());
    for (const auto& r : d.entries) {
        std::vector<std::string> cells;
        for (const auto& x : r) cells.push_back(x.str(var));
        m.cells.push_back(std::move(cells));
    }
    return m;
}

LabeledMatrix labeled(const IntegerMatrix& d)
{
    LabeledMatrix m;
    for (const auto& p : d.rows) m.rows.push_back(p.str());
    for (const auto& p : d.cols) m.cols.push_back(p.str());
    for (const auto& r : d.entries) {
        std::vector<std::string> cells;
        for (const auto& x : r) cells.push_back(x.get_str());
        m.cells.push_back(std::move(cells));
    }
    return m;
}

LabeledMatrix labeled(const PolyMatrix& M, const std::vector<Tableau>& basis, char var)
{
    LabeledMatrix m;
    for (const auto& t : basis) {
        m.rows.push_back(t.str());
        m.cols.push_back(t.str());
    }
    for (std::size_t i = 0; i < M.rows(); ++i) {
        std::vector<std::string> cells;
        for (std::size_t j = 0; j < M.cols(); ++j) cells.push_back(M(i, j).str(var));
        m.cells.push_back(std::move(cells));
    }
    return m;
}

namespace {

TextTable as_table(const LabeledMatrix& m)
{
    TextTable t;
    t.header.push_back("");
    for (const auto& c : m.cols) t.header.push_back(c);
    for (std::size_t i = 0; i < m.rows.size(); ++i) {
        std::vector<std::string> r{m.rows[i]};
        for (const auto& c : m.cells[i]) r.push_back(c == "0" ? "." : c);
        t.rows.push_back(std::move(r));
    }
    return t;
}

} // namespace

std::string matrix_csv(const LabeledMatrix& m)
{
    return to_csv(as_table(m));
}

std::string matrix_text(const LabeledMatrix& m)
{
    return to_text(as_table(m));
}

std::string exponent_str(const Exponent& e)
{
    if (e.denominator() == 1) return std::to_string(e.numerator());
    return std::to_string(e.numerator()) + "/" + std::to_string(e.denominator());
}

TextTable series_table(const TruncatedSeries& s)
{
    TextTable t;
    t.header = {"exponent", "coefficient"};
    const LaurentPoly& p = s.poly();
    if (p.den() == 1 && (p.is_zero() || p.min_exponent() >= 0)) {
        for (long e = 0; e <= s.order(); ++e) t.rows.push_back({std::to_string(e), p.coeff(e).get_str()});
        return t;
    }
    for (const auto& [num, c] : p.terms()) t.rows.push_back({exponent_str(Exponent(num, p.den())), c.get_str()});
    return t;
}

} // namespace fcl
