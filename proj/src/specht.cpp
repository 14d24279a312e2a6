#include "fcl/specht.hpp"
#include "fcl/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fcl {

Tableau::Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows))
{
    std::vector<int> seen;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        require(!rows_[r].empty(), "tableau rows must be nonempty");
        require(r == 0 || rows_[r].size() <= rows_[r - 1].size(), "tableau row lengths must weakly decrease");
        for (int x : rows_[r]) seen.push_back(x);
    }
    size_ = static_cast<int>(seen.size());
    std::sort(seen.begin(), seen.end());
    for (int k = 0; k < size_; ++k) require(seen[k] == k + 1, "tableau entries must be 1..m, each once");
}

Tableau Tableau::parse(std::string_view text)
{
    std::vector<std::vector<int>> rows;
    std::string s(text);
    std::stringstream ss(s);
    std::string row;
    bool commas = s.find(',') != std::string::npos;
    while (std::getline(ss, row, '/')) {
        std::vector<int> r;
        if (commas) {
            std::stringstream rs(row);
            std::string tok;
            while (std::getline(rs, tok, ',')) {
                require(!tok.empty() && tok.find_first_not_of("0123456789 ") == std::string::npos, "bad tableau entry '" + tok + "'");
                r.push_back(std::stoi(tok));
            }
        } else {
            for (char c : row) {
                if (c == ' ') continue;
                require(c >= '0' && c <= '9', std::string("bad tableau character '") + c + "'");
                r.push_back(c - '0');
            }
        }
        rows.push_back(std::move(r));
    }
    return Tableau(std::move(rows));
}

Partition Tableau::shape() const
{
    std::vector<int> p;
    for (const auto& r : rows_) p.push_back(static_cast<int>(r.size()));
    return Partition(p);
}

int Tableau::column_length(int col) const
{
    int k = 0;
    for (const auto& r : rows_)
        if (static_cast<int>(r.size()) >= col) ++k;
    return k;
}

std::vector<int> Tableau::column_word() const
{
    std::vector<int> w;
    if (rows_.empty()) return w;
    for (std::size_t c = 0; c < rows_[0].size(); ++c)
        for (const auto& r : rows_)
            if (c < r.size()) w.push_back(r[c]);
    return w;
}

bool Tableau::row_standard() const
{
    for (const auto& r : rows_)
        for (std::size_t c = 1; c < r.size(); ++c)
            if (r[c - 1] > r[c]) return false;
    return true;
}

bool Tableau::column_standard() const
{
    for (std::size_t i = 1; i < rows_.size(); ++i)
        for (std::size_t c = 0; c < rows_[i].size(); ++c)
            if (rows_[i - 1][c] > rows_[i][c]) return false;
    return true;
}

Tableau Tableau::swapped(int a, int b) const
{
    Tableau t = *this;
    for (auto& r : t.rows_)
        for (int& x : r) {
            if (x == a)
                x = b;
            else if (x == b)
                x = a;
        }
    return t;
}

std::string Tableau::str() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (r) os << '/';
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            if (size_ >= 10 && c) os << ',';
            os << rows_[r][c];
        }
    }
    return os.str();
}

namespace {

void fill(const Partition& shape, std::vector<std::vector<int>>& rows, int k, std::vector<Tableau>& out)
{
    if (k > shape.size()) {
        out.emplace_back(rows);
        return;
    }
    for (int r = 0; r < shape.length(); ++r) {
        int len = static_cast<int>(rows[r].size());
        if (len == shape.row(r + 1)) continue;
        if (r > 0 && len >= static_cast<int>(rows[r - 1].size())) continue;
        rows[r].push_back(k);
        fill(shape, rows, k + 1, out);
        rows[r].pop_back();
    }
}

std::vector<int> row_of_entries(const Tableau& t)
{
    std::vector<int> where(t.size() + 1, 0);
    for (std::size_t r = 0; r < t.rows().size(); ++r)
        for (int x : t.rows()[r]) where[x] = static_cast<int>(r);
    return where;
}

} // namespace

std::vector<Tableau> standard_tableaux(const Partition& shape, TableauOrder order)
{
    std::vector<Tableau> out;
    if (shape.empty()) return {Tableau()};
    std::vector<std::vector<int>> rows(shape.length());
    fill(shape, rows, 1, out);
    if (order == TableauOrder::last_letter) {
        auto key = [](const Tableau& t) {
            auto where = row_of_entries(t);
            std::vector<int> k(where.rbegin(), where.rend() - 1);
            return k;
        };
        std::stable_sort(out.begin(), out.end(), [&](const Tableau& a, const Tableau& b) { return key(a) < key(b); });
    } else {
        Tableau first = t_minus(shape);
        std::stable_sort(out.begin(), out.end(), [&](const Tableau& a, const Tableau& b) {
            if ((a == first) != (b == first)) return a == first;
            return a.column_word() < b.column_word();
        });
    }
    return out;
}

Tableau t_minus(const Partition& shape)
{
    require(!shape.empty(), "t_minus needs a nonempty shape");
    std::vector<std::vector<int>> rows(shape.length());
    int k = 1;
    for (int c = 1; c <= shape.row(1); ++c)
        for (int r = 1; r <= shape.col(c); ++r) rows[r - 1].push_back(k++);
    return Tableau(rows);
}

bool precedes(int a, int b, const Tableau& t)
{
    for (int x : t.column_word()) {
        if (x == a) return true;
        if (x == b) return false;
    }
    throw InvalidArgument("entries not found in tableau");
}

long perm_length(const Tableau& t)
{
    auto w = t.column_word();
    long inv = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inv;
    return inv;
}

std::vector<GarnirTerm> garnir(const Tableau& z, int row, int col)
{
    require(z.column_standard(), "Garnir relations need a column-standard tableau");
    require(row >= 1 && row <= static_cast<int>(z.rows().size()), "row out of range");
    require(col >= 1 && col + 1 <= static_cast<int>(z.rows()[row - 1].size()), "column pair out of range");
    require(z.at(row, col) > z.at(row, col + 1), "no row violation at the given position");
    std::vector<std::pair<int, int>> left, right;  // (row, col), 1-based
    for (int r = row; r <= z.column_length(col); ++r) left.push_back({r, col});
    for (int r = 1; r <= row; ++r) right.push_back({r, col + 1});
    std::vector<int> vals;
    for (auto [r, c] : left) vals.push_back(z.at(r, c));
    for (auto [r, c] : right) vals.push_back(z.at(r, c));
    std::sort(vals.begin(), vals.end());
    long lz = perm_length(z);
    std::vector<GarnirTerm> terms;
    std::vector<bool> pick(vals.size(), false);
    std::fill(pick.end() - static_cast<long>(left.size()), pick.end(), true);
    do {
        std::vector<int> a, b;
        for (std::size_t k = 0; k < vals.size(); ++k) (pick[k] ? a : b).push_back(vals[k]);
        auto rows = z.rows();
        for (std::size_t k = 0; k < left.size(); ++k) rows[left[k].first - 1][left[k].second - 1] = a[k];
        for (std::size_t k = 0; k < right.size(); ++k) rows[right[k].first - 1][right[k].second - 1] = b[k];
        Tableau t(rows);
        long d = lz - perm_length(t);
        if (d < 0) throw InternalError("Garnir coefficient with a negative power");
        terms.push_back({t, LaurentPoly::monomial(d % 2 ? -1 : 1, d)});
    } while (std::next_permutation(pick.begin(), pick.end()));
    std::sort(terms.begin(), terms.end(), [](const GarnirTerm& x, const GarnirTerm& y) {
        auto dx = x.coeff.min_exponent(), dy = y.coeff.min_exponent();
        if (dx != dy) return dx < dy;
        return x.tableau.column_word() < y.tableau.column_word();
    });
    if (terms.front().tableau != z) throw InternalError("Garnir relation does not start with z");
    return terms;
}

namespace {

void add_into(SpechtVector& u, const Tableau& t, const LaurentPoly& c)
{
    if (c.is_zero()) return;
    auto it = u.find(t);
    if (it == u.end()) {
        u.emplace(t, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) u.erase(it);
}

class Straightener {
public:
    SpechtVector run(const Tableau& t)
    {
        if (++steps_ > 5000000) throw InternalError("straightening exceeded its iteration cap");
        // column relations
        auto rows = t.rows();
        int sign = 1;
        int width = rows.empty() ? 0 : static_cast<int>(rows[0].size());
        for (int c = 0; c < width; ++c) {
            std::vector<int> col;
            for (const auto& r : rows)
                if (c < static_cast<int>(r.size())) col.push_back(r[c]);
            for (std::size_t i = 0; i < col.size(); ++i)
                for (std::size_t j = i + 1; j < col.size(); ++j)
                    if (col[i] > col[j]) sign = -sign;
            std::sort(col.begin(), col.end());
            for (std::size_t r = 0; r < col.size(); ++r) rows[r][c] = col[r];
        }
        Tableau s(rows);
        SpechtVector out;
        for (const auto& [x, c] : reduce(s)) out.emplace(x, c * LaurentPoly(sign));
        return out;
    }

private:
    const SpechtVector& reduce(const Tableau& s)
    {
        auto it = memo_.find(s);
        if (it != memo_.end()) return it->second;
        if (!active_.insert(s).second) throw InternalError("straightening cycled at " + s.str());
        SpechtVector out;
        if (s.row_standard()) {
            out.emplace(s, 1);
        } else {
            auto [r, c] = violation(s);
            auto terms = garnir(s, r, c);
            for (std::size_t k = 1; k < terms.size(); ++k)
                for (const auto& [x, y] : run(terms[k].tableau)) add_into(out, x, -(terms[k].coeff * y));
        }
        active_.erase(s);
        return memo_.emplace(s, std::move(out)).first->second;
    }

    static std::pair<int, int> violation(const Tableau& s)
    {
        int width = static_cast<int>(s.rows()[0].size());
        for (int c = 1; c < width; ++c)
            for (int r = 1; r <= s.column_length(c + 1); ++r)
                if (s.at(r, c) > s.at(r, c + 1)) return {r, c};
        throw InternalError("no row violation found");
    }

    std::map<Tableau, SpechtVector> memo_;
    std::set<Tableau> active_;
    long steps_ = 0;
};

} // namespace

SpechtVector straighten(const Tableau& t)
{
    Straightener st;
    return st.run(t);
}

SpechtVector straighten(const SpechtVector& u)
{
    Straightener st;
    SpechtVector out;
    for (const auto& [t, c] : u)
        for (const auto& [x, y] : st.run(t)) add_into(out, x, c * y);
    return out;
}

std::string to_string(const SpechtVector& u)
{
    if (u.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [t, c] : u) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c.str('v') << ")*u[" << t.str() << ']';
    }
    return os.str();
}

namespace {

PolyMatrix generator_matrix(const std::vector<Tableau>& basis, int i, Straightener& st)
{
    std::map<Tableau, std::size_t> index;
    for (std::size_t k = 0; k < basis.size(); ++k) index[basis[k]] = k;
    PolyMatrix M(basis.size(), basis.size());
    LaurentPoly v = LaurentPoly::q(1);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        const Tableau& t = basis[j];
        SpechtVector img = st.run(t.swapped(i, i + 1));
        if (!precedes(i, i + 1, t)) {
            for (auto& [x, c] : img) c *= v;
            add_into(img, t, v - LaurentPoly(1));
        }
        for (const auto& [x, c] : img) {
            auto it = index.find(x);
            if (it == index.end()) throw InternalError("straightening produced a nonstandard tableau");
            M(it->second, j) = c;
        }
    }
    return M;
}

} // namespace

PolyMatrix rep_matrix(const Partition& shape, int i, TableauOrder order)
{
    require(i >= 1 && i < shape.size(), "generator index must satisfy 1 <= i <= m-1");
    Straightener st;
    return generator_matrix(standard_tableaux(shape, order), i, st);
}

PolyMatrix rep_word(const Partition& shape, const std::vector<int>& word, TableauOrder order)
{
    auto basis = standard_tableaux(shape, order);
    Straightener st;
    std::map<int, PolyMatrix> gens;
    PolyMatrix M = PolyMatrix::identity(basis.size());
    for (int i : word) {
        require(i >= 1 && i < shape.size(), "generator index must satisfy 1 <= i <= m-1");
        auto it = gens.find(i);
        if (it == gens.end()) it = gens.emplace(i, generator_matrix(basis, i, st)).first;
        M = M * it->second;
    }
    return M;
}

PolyMatrix jucys_murphy(const Partition& shape, int k, bool hecke)
{
    require(k >= 1 && k <= shape.size(), "JM index must satisfy 1 <= k <= m");
    auto basis = standard_tableaux(shape);
    PolyMatrix L(basis.size(), basis.size());
    for (int i = 1; i < k; ++i) {
        std::vector<int> w;
        for (int a = i; a < k; ++a) w.push_back(a);
        for (int a = k - 2; a >= i; --a) w.push_back(a);
        PolyMatrix T = rep_word(shape, w);
        if (hecke)
            L = L + LaurentPoly::q(i - k) * T;
        else
            L = L + T.map([](const LaurentPoly& p) { return LaurentPoly(p.at_one()); });
    }
    return L;
}

std::vector<std::vector<Int>> specialize(const PolyMatrix& m, const Int& v0)
{
    std::vector<std::vector<Int>> r(m.rows(), std::vector<Int>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j).eval(v0);
    return r;
}

PolyMatrix specialize_cyclotomic(const PolyMatrix& m, int k)
{
    require(k >= 1, "root of unity order must be positive");
    LaurentPoly phi = cyclotomic(k);
    return m.map([&](const LaurentPoly& p) {
        require(p.den() == 1, "cannot specialize fractional exponents");
        LaurentPoly folded;
        for (const auto& [e, c] : p.terms()) folded += LaurentPoly::monomial(c, pmod(e, k));
        return poly_mod(folded, phi);
    });
}

HeckeReport hecke_relation_check(const Partition& shape)
{
    HeckeReport rep;
    int m = shape.size();
    auto basis = standard_tableaux(shape);
    Straightener st;
    std::vector<PolyMatrix> T(m);
    for (int i = 1; i < m; ++i) T[i] = generator_matrix(basis, i, st);
    PolyMatrix I = PolyMatrix::identity(basis.size());
    LaurentPoly v = LaurentPoly::q(1);
    auto fail = [&](const std::string& what) {
        if (rep.ok) {
            rep.ok = false;
            rep.failure = what + " fails on S^(" + shape.str() + ")";
        }
    };
    for (int i = 1; i < m; ++i) {
        ++rep.checks;
        if (T[i] * T[i] != (v - LaurentPoly(1)) * T[i] + v * I) fail("quadratic relation for T_" + std::to_string(i));
        if (i + 1 < m) {
            ++rep.checks;
            if (T[i] * T[i + 1] * T[i] != T[i + 1] * T[i] * T[i + 1]) fail("braid relation for T_" + std::to_string(i));
        }
        for (int j = i + 2; j < m; ++j) {
            ++rep.checks;
            if (T[i] * T[j] != T[j] * T[i]) fail("commutation of T_" + std::to_string(i) + " and T_" + std::to_string(j));
        }
    }
    return rep;
}

bool jm_annihilation(const Partition& shape)
{
    require(!shape.empty(), "JM annihilation needs a nonempty shape");
    PolyMatrix L = jucys_murphy(shape, shape.size());
    PolyMatrix I = PolyMatrix::identity(L.rows());
    PolyMatrix P = I;
    for (const Node& x : removable_nodes(shape)) P = P * (L - q_content(x.content()) * I);
    return P.is_zero();
}

} // namespace fcl
