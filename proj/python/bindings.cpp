#include "cli.hpp"

#include "fcl/branching.hpp"
#include "fcl/canonical.hpp"
#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"
#include "fcl/fock.hpp"
#include "fcl/format.hpp"
#include "fcl/paths.hpp"
#include "fcl/specht.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

namespace py = pybind11;
using namespace fcl;

// Partitions cross the boundary as tuples of ints, polynomials as their
// canonical text, tableaux as "135/24" strings.
namespace {

using Parts = std::vector<int>;

Partition P(const Parts& p) { return Partition(p); }
py::tuple T(const Partition& p) { return py::cast(p.parts()); }

py::list tuples(const std::vector<Partition>& v)
{
    py::list out;
    for (auto& p : v) out.append(T(p));
    return out;
}

py::dict fock_dict(const FockVector& u, char var = 'q')
{
    py::dict d;
    for (auto& [p, c] : u) d[T(p)] = c.str(var);
    return d;
}

std::vector<Int> coeffs(const TruncatedSeries& s)
{
    return s.coefficients();
}

py::list int_list(const std::vector<Int>& v)
{
    py::list out;
    for (auto& x : v) out.append(py::int_(py::str(x.get_str())));
    return out;
}

BranchingSource source(const std::string& s)
{
    if (s == "paths") return BranchingSource::paths;
    if (s == "crystal") return BranchingSource::crystal;
    if (s == "fermionic") return BranchingSource::fermionic;
    throw InvalidArgument("source must be paths, crystal or fermionic");
}

TableauOrder order(const std::string& s)
{
    if (s == "last-letter") return TableauOrder::last_letter;
    if (s == "column-word") return TableauOrder::column_word;
    throw InvalidArgument("order must be last-letter or column-word");
}

template <class T>
py::dict table(const PartitionTable<T>& t, std::function<py::object(const T&)> cell)
{
    py::dict d;
    d["n"] = t.n;
    d["m"] = t.m;
    d["rows"] = tuples(t.rows);
    d["cols"] = tuples(t.cols);
    py::list rows;
    for (auto& r : t.entries) {
        py::list row;
        for (auto& x : r) row.append(cell(x));
        rows.append(row);
    }
    d["entries"] = rows;
    return d;
}

py::list matrix(const PolyMatrix& M)
{
    py::list rows;
    for (std::size_t i = 0; i < M.rows(); ++i) {
        py::list row;
        for (std::size_t j = 0; j < M.cols(); ++j) row.append(M(i, j).str('v'));
        rows.append(row);
    }
    return rows;
}

std::vector<std::string> tableau_strs(const std::vector<Tableau>& v)
{
    std::vector<std::string> out;
    for (auto& t : v) out.push_back(t.str());
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "q-Fock space, crystals, canonical bases, restricted paths and Specht modules";

    auto base_value = py::register_exception<InvalidArgument>(m, "InvalidArgument", PyExc_ValueError);
    py::register_exception<ResourceLimit>(m, "ResourceLimit", PyExc_RuntimeError);
    py::register_exception<ConventionViolation>(m, "ConventionViolation", PyExc_RuntimeError);
    py::register_exception<InternalError>(m, "InternalError", PyExc_RuntimeError);
    (void)base_value;

    // q-series
    m.def("gauss_balanced", [](long a, long b) { return gauss_balanced(a, b).str(); });
    m.def("qbinom", [](long a, long b) { return qbinom_lower(a, b).str(); });
    m.def("inv_phi", [](long N) { return int_list(coeffs(inv_phi(N))); });
    m.def("bar", [](const std::string& p) { return LaurentPoly::parse(p).bar().str(); });

    // partitions
    m.def("parse_partition", [](const std::string& s) { return T(Partition::parse(s)); });
    m.def("conjugate", [](const Parts& p) { return T(P(p).conjugate()); });
    m.def("is_regular", [](const Parts& p, int n) { return is_regular(P(p), n); });
    m.def("partitions", [](int k) { return tuples(enumerate_partitions(k)); });
    m.def("regular_partitions", [](int k, int n) { return tuples(enumerate_regular(k, n)); });
    m.def("residue_counts", [](const Parts& p, int n) { return residue_data(P(p), n).counts; });
    m.def("n_core", [](const Parts& p, int n) {
        auto c = n_core(P(p), n);
        return py::make_tuple(T(c.core), c.weight);
    });
    m.def("rim_hook_remainders", [](const Parts& p, int n) {
        std::vector<Partition> r;
        for (auto& h : rim_hooks(P(p), n)) r.push_back(h.remainder);
        return tuples(r);
    });

    // Fock space
    m.def("f", [](int n, int i, const Parts& p) { return fock_dict(f_apply(n, i, basis_vector(P(p)))); });
    m.def("e", [](int n, int i, const Parts& p) { return fock_dict(e_apply(n, i, basis_vector(P(p)))); });
    m.def("relation_check", [](int n, int k) {
        auto r = relation_check(n, k);
        return py::make_tuple(r.ok, r.checks, r.failure);
    });

    // crystal
    m.def("signature", [](const Parts& p, int n, int i) {
        auto s = signature(P(p), n, i);
        return py::make_tuple(Signature::word(s.raw), Signature::word(s.reduced));
    });
    m.def("e_tilde", [](const Parts& p, int n, int i) -> py::object {
        auto r = e_tilde(P(p), n, i);
        return r ? py::object(T(*r)) : py::none();
    });
    m.def("f_tilde", [](const Parts& p, int n, int i) -> py::object {
        auto r = f_tilde(P(p), n, i);
        return r ? py::object(T(*r)) : py::none();
    });
    m.def("epsilon_profile", [](const Parts& p, int n) { return epsilon_profile(P(p), n); });
    m.def("crystal_graph", [](int n, int max_m, bool component) {
        auto g = crystal_graph(n, max_m, component);
        py::list edges;
        for (auto& e : g.edges) edges.append(py::make_tuple(e.from, e.to, e.residue));
        return py::make_tuple(tuples(g.nodes), edges);
    }, py::arg("n"), py::arg("max_m"), py::arg("component") = true);
    m.def("socle_restriction", [](const Parts& p, int n) { return tuples(socle_restriction(P(p), n)); });
    m.def("js_crystal", [](const Parts& p, int n) { return js_crystal(P(p), n); });
    m.def("js_combinatorial", [](const Parts& p, int n) { return js_combinatorial(P(p), n); });
    m.def("js_canonical", [](const Parts& p, int n) { return js_canonical(P(p), n); });

    // canonical basis
    m.def("canonical_basis", [](int n, int k) {
        return table<LaurentPoly>(global_lower_basis(n, k), [](const LaurentPoly& x) { return py::str(x.str()); });
    });
    m.def("decomposition_matrix", [](int n, int k) {
        return table<Int>(decomposition_matrix(n, k), [](const Int& x) { return py::object(py::int_(py::str(x.get_str()))); });
    });
    m.def("restriction_coeffs", [](int n, int k) {
        return table<LaurentPoly>(restriction_coeffs(n, k), [](const LaurentPoly& x) { return py::str(x.str()); });
    });
    m.def("G", [](int n, const Parts& mu) {
        auto& B = canonical_basis(n, P(mu).size());
        auto it = B.G.find(P(mu));
        if (it == B.G.end()) throw InvalidArgument("mu must be n-regular");
        return fock_dict(it->second);
    });

    // paths
    m.def("to_path", [](const Parts& p, int n) { return to_path(P(p), n).gamma; });
    m.def("to_partition", [](int n, const std::vector<int>& gamma) { return T(to_partition(PathWord(n, gamma))); });
    m.def("path_energy", [](int n, const std::vector<int>& gamma) { return energy(PathWord(n, gamma)); });
    m.def("fow_classify", [](const Parts& p, int n) -> py::object {
        auto f = fow_classify(P(p), n);
        if (f.kind == FowLabel::all) return py::str("all");
        if (f.kind == FowLabel::none) return py::none();
        return py::int_(f.j);
    });
    m.def("js_set", [](int n, const Parts& core, int d) { return tuples(js_set(n, P(core), d)); });
    m.def("abf_sum", [](int L, int a, int b, int c, int k) { return abf_sum_direct(L, a, b, c, k).str(); });

    // q-series identities
    m.def("branching_series", [](int n, int j, int s, int t, int D, const std::string& src) {
        return int_list(coeffs(branching_series(source(src), n, j, s, t, D)));
    }, py::arg("n"), py::arg("j"), py::arg("s"), py::arg("t"), py::arg("degree"), py::arg("source") = "paths");
    m.def("fermionic", [](int n, int j, int s, int t, int L) {
        auto r = fermionic_poly(n, j, s, t, L);
        py::dict d;
        d["raw"] = r.raw.str();
        d["normalized"] = r.normalized.str();
        d["shift"] = exponent_str(r.shift);
        d["agrees"] = r.agrees;
        return d;
    });
    m.def("chi_js", [](int n, const Parts& core, int D) { return int_list(coeffs(chi_js(n, P(core), D))); });
    m.def("chi_js_direct", [](int n, const Parts& core, int D) { return int_list(coeffs(chi_js_direct(n, P(core), D))); });
    m.def("principal_char", [](int n, int N) { return int_list(coeffs(principal_char(n, N))); });
    m.def("rocha_caridi", [](int mp, int r, int s, int N) { return rocha_caridi(mp, r, s, N).poly().str(); });
    m.def("abf_closed", [](int L, int a, int b, int c, int k) { return abf_closed(L, a, b, c, k).str(); });
    m.def("x_limit", [](int L, int a, int b, int c, int N) { return x_limit(L, a, b, c, N).poly().str(); });
    m.def("ising_identification", [](int order) {
        py::list out;
        for (auto& x : ising_identification(order)) out.append(py::make_tuple(x.label, x.r, x.s, exponent_str(x.shift)));
        return out;
    }, py::arg("order") = 10);

    // Specht modules
    m.def("standard_tableaux", [](const Parts& shape, const std::string& ord) { return tableau_strs(standard_tableaux(P(shape), order(ord))); },
          py::arg("shape"), py::arg("order") = "last-letter");
    m.def("straighten", [](const std::string& t) {
        py::dict d;
        for (auto& [x, c] : straighten(Tableau::parse(t))) d[py::str(x.str())] = c.str('v');
        return d;
    });
    m.def("garnir", [](const std::string& t, int row, int col) {
        py::list out;
        for (auto& g : garnir(Tableau::parse(t), row, col)) out.append(py::make_tuple(g.tableau.str(), g.coeff.str('v')));
        return out;
    });
    m.def("rep_matrix", [](const Parts& shape, int i, const std::string& ord) { return matrix(rep_matrix(P(shape), i, order(ord))); },
          py::arg("shape"), py::arg("i"), py::arg("order") = "last-letter");
    m.def("jucys_murphy", [](const Parts& shape, int k) { return matrix(jucys_murphy(P(shape), k)); });
    m.def("hecke_relation_check", [](const Parts& shape) {
        auto r = hecke_relation_check(P(shape));
        return py::make_tuple(r.ok, r.checks, r.failure);
    });
    m.def("jm_annihilation", [](const Parts& shape) { return jm_annihilation(P(shape)); });

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code;
        {
            py::gil_scoped_release nogil;
            code = run_cli(args, out, err);
        }
        return py::make_tuple(code, out.str(), err.str());
    });
}
