#include "fcl/fock.hpp"

#include <algorithm>
#include "fcl/errors.hpp"

#include <sstream>

namespace fcl {

FockVector basis_vector(const Partition& p, const LaurentPoly& c)
{
    FockVector u;
    if (!c.is_zero()) u.emplace(p, c);
    return u;
}

void accumulate(FockVector& u, const Partition& p, const LaurentPoly& c)
{
    if (c.is_zero()) return;
    auto it = u.find(p);
    if (it == u.end()) {
        u.emplace(p, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) u.erase(it);
}

FockVector add(const FockVector& a, const FockVector& b)
{
    FockVector r = a;
    for (const auto& [p, c] : b) accumulate(r, p, c);
    return r;
}

FockVector scale(const FockVector& a, const LaurentPoly& c)
{
    FockVector r;
    if (c.is_zero()) return r;
    for (const auto& [p, x] : a) r.emplace(p, x * c);
    return r;
}

FockVector subtract(const FockVector& a, const FockVector& b)
{
    return add(a, scale(b, -1));
}

std::map<Partition, Int, DescLex> at_one(const FockVector& u)
{
    std::map<Partition, Int, DescLex> r;
    for (const auto& [p, c] : u) {
        Int v = c.at_one();
        if (v != 0) r.emplace(p, v);
    }
    return r;
}

std::string to_string(const FockVector& u)
{
    if (u.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : u) {
        if (!first) os << " + ";
        first = false;
        if (c == LaurentPoly(1))
            ;
        else if (c.size() == 1)
            os << c.str() << " * ";
        else
            os << '(' << c.str() << ") * ";
        os << "v[" << p.str() << ']';
    }
    return os.str();
}

int n_right(const Partition& p, const Node& x, int n, int i)
{
    int k = 0;
    for (const Node& y : addable_nodes(p, n, i))
        if (y.col > x.col) ++k;
    for (const Node& y : removable_nodes(p, n, i))
        if (y.col > x.col) --k;
    return k;
}

int n_left(const Partition& p, const Node& x, int n, int i)
{
    int k = 0;
    for (const Node& y : addable_nodes(p, n, i))
        if (y.col < x.col) ++k;
    for (const Node& y : removable_nodes(p, n, i))
        if (y.col < x.col) --k;
    return k;
}

int n_i(const Partition& p, int n, int i)
{
    return static_cast<int>(addable_nodes(p, n, i).size()) - static_cast<int>(removable_nodes(p, n, i).size());
}

FockVector f_apply(int n, int i, const FockVector& u, const FockRules& rules)
{
    require(n >= 2 && i >= 0 && i < n, "residue out of range");
    FockVector r;
    for (const auto& [p, c] : u)
        for (const Node& x : addable_nodes(p, n, i))
            accumulate(r, add_node(p, x), c * LaurentPoly::q(rules.right_sign * n_right(p, x, n, i)));
    return r;
}

FockVector e_apply(int n, int i, const FockVector& u, const FockRules&)
{
    require(n >= 2 && i >= 0 && i < n, "residue out of range");
    FockVector r;
    for (const auto& [p, c] : u)
        for (const Node& x : removable_nodes(p, n, i)) {
            Partition smaller = remove_node(p, x);
            // N^l is read on the smaller partition, where x is addable
            accumulate(r, smaller, c * LaurentPoly::q(-n_left(smaller, x, n, i)));
        }
    return r;
}

LaurentPoly h_eigenvalue(const Partition& p, int n, int i)
{
    return LaurentPoly::q(n_i(p, n, i));
}

LaurentPoly d_eigenvalue(const Partition& p, int n)
{
    return LaurentPoly::q(-residue_data(p, n).energy);
}

FockVector divided_f(int n, int i, int k, const FockVector& u)
{
    require(k >= 0, "divided power must be nonnegative");
    FockVector r = u;
    for (int t = 0; t < k; ++t) r = f_apply(n, i, r);
    LaurentPoly f = q_fact(k);
    for (auto& [p, c] : r) c = exact_div(c, f);
    return r;
}

std::vector<Partition> classical_f(const Partition& p, int content)
{
    std::vector<Partition> out;
    for (const Node& x : addable_nodes(p))
        if (x.content() == content) out.push_back(add_node(p, x));
    return out;
}

std::vector<Partition> classical_e(const Partition& p, int content)
{
    std::vector<Partition> out;
    for (const Node& x : removable_nodes(p))
        if (x.content() == content) out.push_back(remove_node(p, x));
    return out;
}

std::vector<Partition> folded_f(const Partition& p, int n, int i)
{
    // contents of addable nodes lie in [-length, width]
    std::vector<Partition> out;
    for (int c = -p.length(); c <= p.row(1); ++c)
        if (pmod(c, n) == i)
            for (auto& q : classical_f(p, c)) out.push_back(q);
    std::sort(out.begin(), out.end(), DescLex{});
    return out;
}

std::vector<Partition> folded_e(const Partition& p, int n, int i)
{
    std::vector<Partition> out;
    for (int c = -p.length(); c <= p.row(1); ++c)
        if (pmod(c, n) == i)
            for (auto& q : classical_e(p, c)) out.push_back(q);
    std::sort(out.begin(), out.end(), DescLex{});
    return out;
}

namespace {

FockVector f_power(int n, int i, int k, FockVector u, const FockRules& rules)
{
    for (int t = 0; t < k; ++t) u = f_apply(n, i, u, rules);
    return u;
}

FockVector e_power(int n, int i, int k, FockVector u, const FockRules& rules)
{
    for (int t = 0; t < k; ++t) u = e_apply(n, i, u, rules);
    return u;
}

std::string where(const char* rel, int i, int j, const Partition& p)
{
    std::ostringstream os;
    os << rel << " fails for i=" << i << " j=" << j << " on v[" << p.str() << "]";
    return os.str();
}

} // namespace

RelationReport relation_check(int n, int m, const FockRules& rules)
{
    require(n >= 2 && m >= 0, "relation_check needs n >= 2, m >= 0");
    RelationReport rep;
    auto fail = [&](std::string msg) {
        if (rep.ok) {
            rep.ok = false;
            rep.failure = std::move(msg);
        }
    };
    for (int size = 0; size <= m && rep.ok; ++size) {
        for (const Partition& lam : enumerate_partitions(size)) {
            FockVector v = basis_vector(lam);
            ResidueData rd = residue_data(lam, n);
            for (int i = 0; i < n; ++i) {
                ++rep.checks;
                if (n_i(lam, n, i) != rd.weight.fund[i]) fail(where("h-eigenvalue/weight", i, i, lam));
            }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    FockVector lhs = subtract(e_apply(n, i, f_apply(n, j, v, rules), rules),
                                              f_apply(n, j, e_apply(n, i, v, rules), rules));
                    FockVector rhs = i == j ? basis_vector(lam, q_int(n_i(lam, n, i))) : FockVector{};
                    ++rep.checks;
                    if (lhs != rhs) fail(where("[e_i,f_j]", i, j, lam));
                }
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    if (i == j) continue;
                    int top = 1 - cartan(n, i, j);
                    FockVector sf, se;
                    for (int k = 0; k <= top; ++k) {
                        LaurentPoly c = gauss_balanced(top, k) * LaurentPoly(k % 2 ? -1 : 1);
                        sf = add(sf, scale(f_power(n, i, top - k, f_apply(n, j, f_power(n, i, k, v, rules), rules), rules), c));
                        se = add(se, scale(e_power(n, i, top - k, e_apply(n, j, e_power(n, i, k, v, rules), rules), rules), c));
                    }
                    rep.checks += 2;
                    if (!sf.empty()) fail(where("q-Serre (f)", i, j, lam));
                    if (!se.empty()) fail(where("q-Serre (e)", i, j, lam));
                }
            // q^{h_i} e_j q^{-h_i} = q^{<alpha_j,h_i>} e_j, likewise for f_j and q^D
            for (int j = 0; j < n; ++j) {
                for (const auto& [nu, c] : f_apply(n, j, v, rules))
                    for (int i = 0; i < n; ++i) {
                        ++rep.checks;
                        if (n_i(nu, n, i) - n_i(lam, n, i) != -cartan(n, j, i)) fail(where("weight (f)", i, j, lam));
                    }
                for (const auto& [nu, c] : e_apply(n, j, v, rules))
                    for (int i = 0; i < n; ++i) {
                        ++rep.checks;
                        if (n_i(nu, n, i) - n_i(lam, n, i) != cartan(n, j, i)) fail(where("weight (e)", i, j, lam));
                    }
                for (const auto& [nu, c] : e_apply(n, j, v, rules)) {
                    ++rep.checks;
                    long step = residue_data(lam, n).energy - residue_data(nu, n).energy;
                    if (step != (j == 0 ? 1 : 0)) fail(where("weight (D)", j, j, lam));
                }
            }
        }
    }
    return rep;
}

} // namespace fcl
