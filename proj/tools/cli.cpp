#include "cli.hpp"

#include "fcl/branching.hpp"
#include "fcl/canonical.hpp"
#include "fcl/crystal.hpp"
#include "fcl/errors.hpp"
#include "fcl/fock.hpp"
#include "fcl/format.hpp"
#include "fcl/paths.hpp"
#include "fcl/specht.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <sstream>

namespace fcl {

namespace {

using nlohmann::json;

constexpr int exit_ok = 0, exit_invalid = 2, exit_convention = 3, exit_resource = 4;

struct Options {
    int n = 2;
    int m = 5;
    int L = -1;
    int degree = 6;
    std::string shape = "3,2";
    std::string core;
    std::string partition;
    int j = 0;
    std::string target;
    std::string format;
    std::size_t max_nodes = 200000;
    std::string source;
    // subcommand extras
    int gen = 1;
    std::string word;
    int jm = 0;
    std::string specialize_at;
    int root = 0;
    std::string order = "last-letter";
    bool standard = true;
    bool full = false;
    int weight = -1;
    int a = 1, b = 1, c = 2;
    int mparam = 3, r = 1, s = 1;
    bool ising = false;
    bool limit = false;
};

long degree_cap()
{
    const char* env = std::getenv("FCL_MAX_DEGREE");
    if (!env || !*env) return 200;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end || v < 0) throw InvalidArgument("FCL_MAX_DEGREE must be a nonnegative integer");
    return v;
}

void check_degree(long d)
{
    require(d >= 0, "--degree must be nonnegative");
    if (d > degree_cap()) throw ResourceLimit("requested degree " + std::to_string(d) + " exceeds FCL_MAX_DEGREE=" + std::to_string(degree_cap()));
}

std::string fmt_or(const Options& o, const std::string& dflt, std::initializer_list<const char*> allowed)
{
    std::string f = o.format.empty() ? dflt : o.format;
    for (const char* x : allowed)
        if (f == x) return f;
    throw InvalidArgument("format '" + f + "' is not available for this command");
}

std::pair<int, int> parse_target(const std::string& text)
{
    auto comma = text.find(',');
    require(comma != std::string::npos, "--target must look like s,t");
    try {
        return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
    } catch (const std::logic_error&) {
        throw InvalidArgument("--target must look like s,t");
    }
}

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> v;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            v.push_back(std::stoi(tok));
        } catch (const std::logic_error&) {
            throw InvalidArgument("bad integer list '" + text + "'");
        }
    }
    return v;
}

std::string dump(const json& j)
{
    return j.dump(2) + "\n";
}

json matrix_json(const LabeledMatrix& m, int n, int size)
{
    json j;
    if (n > 0) j["n"] = n;  // specht matrices have no modulus
    j["m"] = size;
    j["rows"] = m.rows;
    j["cols"] = m.cols;
    j["entries"] = m.cells;
    return j;
}

json series_json(const TruncatedSeries& s)
{
    json j;
    j["order"] = s.order();
    j["series"] = s.str();
    json terms = json::array();
    for (const auto& r : series_table(s).rows) terms.push_back({r[0], r[1]});
    j["terms"] = terms;
    return j;
}

std::string emit_series(const TruncatedSeries& s, const std::string& f, json meta)
{
    if (f == "csv") return to_csv(series_table(s));
    if (f == "json") {
        meta.update(series_json(s));
        return dump(meta);
    }
    return s.str() + "\n";
}

Partition parse_partition_opt(const std::string& text, const char* flag)
{
    require(!text.empty() || std::string(flag) == "--core", std::string(flag) + " is required");
    return Partition::parse(text);
}

TableauOrder parse_order(const std::string& s)
{
    if (s == "last-letter") return TableauOrder::last_letter;
    if (s == "column-word") return TableauOrder::column_word;
    throw InvalidArgument("--order must be last-letter or column-word");
}

BranchingSource parse_source(const std::string& s)
{
    if (s.empty() || s == "paths") return BranchingSource::paths;
    if (s == "crystal") return BranchingSource::crystal;
    if (s == "fermionic") return BranchingSource::fermionic;
    throw InvalidArgument("--source must be paths, crystal or fermionic");
}

std::string weight_vector(const Weight& w)
{
    std::string s;
    for (std::size_t k = 0; k < w.fund.size(); ++k) s += (k ? " " : "") + std::to_string(w.fund[k]);
    return s + ";" + std::to_string(w.delta);
}

// ---- subcommands ----

std::string cmd_crystal_graph(const Options& o)
{
    std::string f = fmt_or(o, "dot", {"dot", "json", "text"});
    CrystalGraph g = crystal_graph(o.n, o.m, !o.full, o.max_nodes);
    if (f == "dot") return to_dot(g);
    if (f == "json") {
        json j;
        j["n"] = g.n;
        j["max_m"] = g.max_m;
        j["component"] = g.component;
        std::vector<std::string> nodes;
        std::vector<bool> js;
        for (const auto& p : g.nodes) {
            nodes.push_back(p.str());
            js.push_back(is_regular(p, g.n) && js_crystal(p, g.n));
        }
        j["nodes"] = nodes;
        j["js"] = js;
        json edges = json::array();
        for (const auto& e : g.edges) edges.push_back({e.from, e.residue, e.to});
        j["edges"] = edges;
        return dump(j);
    }
    std::ostringstream os;
    for (std::size_t k = 0; k < g.nodes.size(); ++k) {
        os << g.nodes[k].str();
        for (const auto& e : g.edges)
            if (e.from == k) os << "  -" << e.residue << "-> " << g.nodes[e.to].str();
        os << '\n';
    }
    return os.str();
}

std::string emit_matrix(const LabeledMatrix& m, const std::string& f, json meta, int n, int size)
{
    if (f == "csv") return matrix_csv(m);
    if (f == "json") {
        json j = matrix_json(m, n, size);
        j.update(meta);
        return dump(j);
    }
    return matrix_text(m);
}

std::string cmd_canonical_basis(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    DecompositionMatrix d = global_lower_basis(o.n, o.m);
    json meta;
    meta["var"] = "q";
    meta["ladder_order"] = canonical_basis(o.n, o.m).increasing_order_used ? "last-ladder-first" : "first-ladder-first";
    return emit_matrix(labeled(d), f, meta, o.n, o.m);
}

std::string cmd_decomp_matrix(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    return emit_matrix(labeled(decomposition_matrix(o.n, o.m)), f, json::object(), o.n, o.m);
}

std::string cmd_restriction(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    json meta;
    meta["var"] = "q";
    return emit_matrix(labeled(restriction_coeffs(o.n, o.m)), f, meta, o.n, o.m);
}

std::string cmd_specht_matrix(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    Partition shape = Partition::parse(o.shape);
    require(!shape.empty(), "--shape must be nonempty");
    TableauOrder order = parse_order(o.order);
    auto basis = standard_tableaux(shape, order);
    PolyMatrix M;
    json meta;
    meta["var"] = "v";
    meta["shape"] = shape.str();
    if (o.jm > 0) {
        require(order == TableauOrder::last_letter, "--jm uses the default tableau order");
        M = jucys_murphy(shape, o.jm);
        meta["operator"] = "L_" + std::to_string(o.jm);
    } else if (!o.word.empty()) {
        M = rep_word(shape, parse_ints(o.word), order);
        meta["operator"] = "T_w";
        meta["word"] = o.word;
    } else {
        M = rep_matrix(shape, o.gen, order);
        meta["operator"] = "T_" + std::to_string(o.gen);
    }
    LabeledMatrix lm = labeled(M, basis, 'v');
    if (!o.specialize_at.empty()) {
        Int v0;
        try {
            v0 = Int(o.specialize_at);
        } catch (const std::invalid_argument&) {
            throw InvalidArgument("--specialize needs an integer");
        }
        auto S = specialize(M, v0);
        for (std::size_t i = 0; i < S.size(); ++i)
            for (std::size_t j = 0; j < S[i].size(); ++j) lm.cells[i][j] = S[i][j].get_str();
        meta["specialized"] = o.specialize_at;
    } else if (o.root > 0) {
        lm = labeled(specialize_cyclotomic(M, o.root), basis, 'v');
        meta["root_of_unity"] = o.root;
    }
    return emit_matrix(lm, f, meta, 0, shape.size());
}

std::string cmd_tableaux(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    require(o.standard, "only standard tableaux are listed");
    Partition shape = Partition::parse(o.shape);
    auto ts = standard_tableaux(shape, parse_order(o.order));
    if (f == "json") {
        json j;
        j["shape"] = shape.str();
        std::vector<std::string> v;
        for (const auto& t : ts) v.push_back(t.str());
        j["tableaux"] = v;
        return dump(j);
    }
    if (f == "csv") {
        TextTable t;
        t.header = {"tableau", "length"};
        for (const auto& x : ts) t.rows.push_back({x.str(), std::to_string(perm_length(x))});
        return to_csv(t);
    }
    std::ostringstream os;
    for (const auto& t : ts) os << t.str() << '\n';
    return os.str();
}

std::string cmd_js_list(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    std::vector<Partition> list;
    json meta;
    meta["n"] = o.n;
    if (o.weight >= 0) {
        Partition core = Partition::parse(o.core);
        list = js_set(o.n, core, o.weight);
        meta["core"] = core.str();
        meta["weight"] = o.weight;
    } else {
        require(o.m >= 0, "--m must be nonnegative");
        for (const auto& p : enumerate_regular(o.m, o.n))
            if (js_combinatorial(p, o.n)) list.push_back(p);
        meta["m"] = o.m;
    }
    std::vector<std::string> names;
    for (const auto& p : list) names.push_back(p.str());
    if (f == "json") {
        meta["partitions"] = names;
        return dump(meta);
    }
    std::ostringstream os;
    if (f == "csv") os << "partition\n";
    for (const auto& s : names) os << (f == "csv" ? csv_cell(s) : s) << '\n';
    return os.str();
}

std::string cmd_fow(const Options& o)
{
    std::string f = fmt_or(o, "csv", {"text", "csv", "json"});
    std::vector<Partition> ps;
    if (!o.partition.empty())
        ps.push_back(Partition::parse(o.partition));
    else
        ps = enumerate_regular(o.m, o.n);
    TextTable t;
    t.header = {"partition", "E", "wt", "fow_j", "js", "core", "weight"};
    json rows = json::array();
    for (const auto& p : ps) {
        ResidueData rd = residue_data(p, o.n);
        // JS(n) lives inside the n-regular partitions
        FowLabel lab = is_regular(p, o.n) ? fow_classify(p, o.n) : FowLabel{};
        std::string jtxt;
        if (lab.kind == FowLabel::all) {
            for (int k = 0; k < o.n; ++k) jtxt += (k ? " " : "") + std::to_string(k);
        } else if (lab.kind == FowLabel::single) {
            jtxt = std::to_string(lab.j);
        } else {
            jtxt = "-";
        }
        CoreData cd = n_core(p, o.n);
        t.rows.push_back({p.str(), std::to_string(rd.energy), weight_vector(rd.weight), jtxt, lab.kind != FowLabel::none ? "1" : "0",
                          cd.core.str(), std::to_string(cd.weight)});
        json r;
        r["partition"] = p.str();
        r["E"] = rd.energy;
        r["wt"] = rd.weight.fund;
        r["delta"] = rd.weight.delta;
        r["fow_j"] = jtxt;
        r["js"] = lab.kind != FowLabel::none;
        r["core"] = cd.core.str();
        r["weight"] = cd.weight;
        rows.push_back(r);
    }
    if (f == "json") {
        json j;
        j["n"] = o.n;
        j["rows"] = rows;
        return dump(j);
    }
    return f == "csv" ? to_csv(t) : to_text(t);
}

std::string cmd_branching(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    auto [s, t] = parse_target(o.target.empty() ? "0,0" : o.target);
    BranchingSource src = parse_source(o.source);
    json meta;
    meta["n"] = o.n;
    meta["j"] = o.j;
    meta["target"] = {s, t};
    meta["source"] = o.source.empty() ? "paths" : o.source;
    if (o.L >= 0) {
        // finite polynomial b(q; L)
        LaurentPoly p;
        if (src == BranchingSource::fermionic) {
            FermionicResult fr = fermionic_poly(o.n, o.j, std::min(s, t), std::max(s, t), o.L);
            p = fr.normalized;
            meta["raw"] = fr.raw.str();
            meta["shift"] = exponent_str(fr.shift);
            meta["agrees_with_paths"] = fr.agrees;
        } else {
            require(src == BranchingSource::paths, "--L is available for the paths and fermionic sources");
            p = branching_poly_paths(o.n, o.j, s, t, o.L);
        }
        meta["L"] = o.L;
        if (f == "json") {
            meta["polynomial"] = p.str();
            return dump(meta);
        }
        if (f == "csv") {
            TextTable tt;
            tt.header = {"exponent", "coefficient"};
            for (const auto& [e, c] : p.terms()) tt.rows.push_back({exponent_str(Exponent(e, p.den())), c.get_str()});
            return to_csv(tt);
        }
        return p.str() + "\n";
    }
    check_degree(o.degree);
    if (src == BranchingSource::fermionic) {
        FermionicResult fr = fermionic_poly(o.n, o.j, std::min(s, t), std::max(s, t), path_cutoff_for_degree(o.n, o.degree));
        meta["shift"] = exponent_str(fr.shift);
        meta["agrees_with_paths"] = fr.agrees;
    }
    return emit_series(branching_series(src, o.n, o.j, s, t, o.degree), f, meta);
}

std::string cmd_chi(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    check_degree(o.degree);
    Partition core = Partition::parse(o.core);
    json meta;
    meta["n"] = o.n;
    meta["core"] = core.str();
    std::string src = o.source.empty() ? "crystal" : o.source;
    meta["source"] = src;
    TruncatedSeries sr;
    if (src == "direct")
        sr = chi_js_direct(o.n, core, o.degree);
    else
        sr = chi_js(o.n, core, o.degree, parse_source(src));
    return emit_series(sr, f, meta);
}

std::string cmd_abf(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "json"});
    json meta;
    meta["L"] = o.L < 0 ? 4 : o.L;
    int L = o.L < 0 ? 4 : o.L;
    meta["abc"] = {o.a, o.b, o.c};
    if (o.limit) {
        check_degree(o.degree);
        return emit_series(x_limit(L, o.a, o.b, o.c, o.degree), f, meta);
    }
    std::string src = o.source.empty() ? "direct" : o.source;
    LaurentPoly direct = abf_sum_direct(L, o.a, o.b, o.c, o.m);
    LaurentPoly closed = abf_closed(L, o.a, o.b, o.c, o.m);
    LaurentPoly p;
    if (src == "direct")
        p = direct;
    else if (src == "closed")
        p = closed;
    else if (src == "printed")
        p = abf_closed_printed(L, o.a, o.b, o.c, o.m);
    else
        throw InvalidArgument("--source must be direct, closed or printed");
    if (f == "json") {
        meta["m"] = o.m;
        meta["source"] = src;
        meta["polynomial"] = p.str();
        if (!direct.is_zero() && !closed.is_zero()) meta["closed_minus_direct_offset"] = exponent_str(closed.min_exponent() - direct.min_exponent());
        meta["closed_agrees"] = direct.is_zero() ? closed.is_zero() : (!closed.is_zero() && closed.shift(direct.min_exponent() - closed.min_exponent()) == direct);
        return dump(meta);
    }
    return p.str() + "\n";
}

std::string cmd_virasoro(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "csv", "json"});
    check_degree(o.degree);
    if (o.ising) {
        auto ms = ising_identification(o.degree);
        TextTable t;
        t.header = {"series", "r", "s", "shift"};
        json rows = json::array();
        for (const auto& m : ms) {
            t.rows.push_back({m.label, std::to_string(m.r), std::to_string(m.s), exponent_str(m.shift)});
            rows.push_back({{"series", m.label}, {"r", m.r}, {"s", m.s}, {"shift", exponent_str(m.shift)}});
        }
        if (f == "json") return dump(json{{"mparam", 3}, {"order", o.degree}, {"matches", rows}});
        return f == "csv" ? to_csv(t) : to_text(t);
    }
    json meta;
    meta["mparam"] = o.mparam;
    meta["r"] = o.r;
    meta["s"] = o.s;
    return emit_series(rocha_caridi(o.mparam, o.r, o.s, o.degree), f, meta);
}

std::string cmd_cores(const Options& o)
{
    std::string f = fmt_or(o, "text", {"text", "json"});
    Partition p = parse_partition_opt(o.partition, "--partition");
    CoreData cd = n_core(p, o.n);
    auto hooks = rim_hooks(p, o.n);
    if (f == "json") {
        json j;
        j["partition"] = p.str();
        j["n"] = o.n;
        j["core"] = cd.core.str();
        j["weight"] = cd.weight;
        std::vector<std::string> rem;
        for (const auto& h : hooks) rem.push_back(h.remainder.str());
        j["rim_hooks"] = rem;
        return dump(j);
    }
    std::ostringstream os;
    os << "core: " << cd.core.str() << "\nweight: " << cd.weight << "\nrim-hooks: " << hooks.size() << '\n';
    for (const auto& h : hooks) os << "  row " << h.top_row << " -> " << h.remainder.str() << '\n';
    return os.str();
}

struct Check {
    std::string name;
    std::function<std::string()> run;  // empty string on success
};

std::string cmd_selfcheck(const Options& o, bool& failed)
{
    std::vector<Check> checks;
    checks.push_back({"fock-relations", [] {
                          for (int n : {2, 3}) {
                              auto r = relation_check(n, 4);
                              if (!r.ok) return r.failure;
                          }
                          return std::string();
                      }});
    checks.push_back({"fock-negative-control", [] {
                          FockRules bad;
                          bad.right_sign = -1;
                          return relation_check(2, 3, bad).ok ? std::string("corrupted action passed") : std::string();
                      }});
    checks.push_back({"js-three-way", [] {
                          for (int n : {2, 3})
                              for (int m = 0; m <= 6; ++m)
                                  for (const auto& p : enumerate_regular(m, n)) {
                                      bool a = js_crystal(p, n), b = js_combinatorial(p, n), c = js_canonical(p, n);
                                      if (a != b || b != c) return "disagreement at " + p.str() + " n=" + std::to_string(n);
                                  }
                          return std::string();
                      }});
    checks.push_back({"path-bijection", [] {
                          for (int n : {2, 3})
                              for (int m = 0; m <= 8; ++m)
                                  for (const auto& p : enumerate_regular(m, n)) {
                                      PathWord w = to_path(p, n);
                                      if (to_partition(w) != p) return "round trip fails at " + p.str();
                                      auto ew = energy_weight(w);
                                      auto rd = residue_data(p, n);
                                      if (ew.energy != rd.energy || ew.weight != rd.weight) return "energy/weight mismatch at " + p.str();
                                  }
                          return std::string();
                      }});
    checks.push_back({"branching-agreement", [] {
                          for (int n : {2, 3})
                              for (int s = 0; s < n; ++s)
                                  for (int t = s; t < n; ++t) {
                                      int j = (s + t) % n;
                                      auto a = branching_series_paths(n, j, s, t, 4);
                                      auto b = branching_series_crystal(n, j, s, t, 4);
                                      auto c = fermionic_limit(n, j, s, t, 4);
                                      if (a != b || a != c) return "series differ for n=" + std::to_string(n) + " j=" + std::to_string(j);
                                  }
                          return std::string();
                      }});
    checks.push_back({"hecke-relations", [] {
                          for (int m = 1; m <= 4; ++m)
                              for (const auto& p : enumerate_partitions(m)) {
                                  auto r = hecke_relation_check(p);
                                  if (!r.ok) return r.failure;
                                  if (!jm_annihilation(p)) return "JM annihilation fails on " + p.str();
                              }
                          return std::string();
                      }});
    checks.push_back({"principal-character", [] {
                          for (int n : {2, 3}) {
                              auto pc = principal_char(n, 8).coefficients();
                              for (int m = 0; m <= 8; ++m)
                                  if (pc[m] != static_cast<long>(enumerate_regular(m, n).size())) return "count differs at m=" + std::to_string(m);
                          }
                          return std::string();
                      }});
    (void)o;
    std::ostringstream os;
    for (const auto& c : checks) {
        std::string msg;
        try {
            msg = c.run();
        } catch (const std::exception& e) {
            msg = std::string("exception: ") + e.what();
        }
        if (msg.empty())
            os << "ok    " << c.name << '\n';
        else {
            os << "FAIL  " << c.name << ": " << msg << '\n';
            failed = true;
        }
    }
    return os.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Fock space, crystal and Specht module computations"};
    app.require_subcommand(1);
    Options o;

    auto common_n = [&](CLI::App* sc) { sc->add_option("--n", o.n, "modulus n (default 2)"); };
    auto fmt = [&](CLI::App* sc) { sc->add_option("--format", o.format, "output format"); };

    auto* cg = app.add_subcommand("crystal-graph", "crystal graph of the Fock space");
    common_n(cg);
    cg->add_option("--m", o.m, "largest partition size");
    cg->add_option("--max-nodes", o.max_nodes, "node cap");
    cg->add_flag("--full", o.full, "whole graph instead of the component of the empty partition");
    fmt(cg);

    auto* cb = app.add_subcommand("canonical-basis", "q-decomposition matrix d(q)");
    common_n(cb);
    cb->add_option("--m", o.m);
    fmt(cb);

    auto* dm = app.add_subcommand("decomp-matrix", "decomposition matrix at q = 1");
    common_n(dm);
    dm->add_option("--m", o.m);
    fmt(dm);

    auto* rs = app.add_subcommand("restriction", "restriction coefficients c(q)");
    common_n(rs);
    rs->add_option("--m", o.m);
    fmt(rs);

    auto* sm = app.add_subcommand("specht-matrix", "representation matrices on a Specht module");
    sm->add_option("--shape", o.shape);
    sm->add_option("--gen", o.gen, "generator T_i");
    sm->add_option("--word", o.word, "product of generators, e.g. 1,2,1");
    sm->add_option("--jm", o.jm, "Jucys-Murphy element L_k");
    sm->add_option("--specialize", o.specialize_at, "integer value for v");
    sm->add_option("--root", o.root, "v as a primitive k-th root of unity");
    sm->add_option("--order", o.order, "tableau order: last-letter or column-word");
    fmt(sm);

    auto* tb = app.add_subcommand("tableaux", "standard tableaux of a shape");
    tb->add_option("--shape", o.shape);
    tb->add_flag("--standard", o.standard);
    tb->add_option("--order", o.order);
    fmt(tb);

    auto* js = app.add_subcommand("js-list", "JS partitions");
    common_n(js);
    js->add_option("--core", o.core, "n-core");
    js->add_option("--weight", o.weight, "n-weight");
    js->add_option("--m", o.m, "size (when no weight is given)");
    fmt(js);

    auto* fw = app.add_subcommand("fow", "path data and FOW classification");
    common_n(fw);
    fw->add_option("--m", o.m);
    fw->add_option("--partition", o.partition);
    fmt(fw);

    auto* br = app.add_subcommand("branching", "branching functions b^{Lambda_s+Lambda_t}_{Lambda_j Lambda_0}");
    common_n(br);
    br->add_option("--j", o.j);
    br->add_option("--target", o.target, "s,t");
    br->add_option("--degree", o.degree);
    br->add_option("--L", o.L, "finite path length");
    br->add_option("--source", o.source, "paths, crystal or fermionic");
    fmt(br);

    auto* ch = app.add_subcommand("chi", "JS generating series");
    common_n(ch);
    ch->add_option("--core", o.core);
    ch->add_option("--degree", o.degree);
    ch->add_option("--source", o.source, "crystal, paths, fermionic or direct");
    fmt(ch);

    auto* ab = app.add_subcommand("abf", "ABF configuration sums");
    ab->add_option("--L", o.L);
    ab->add_option("--a", o.a);
    ab->add_option("--b", o.b);
    ab->add_option("--c", o.c);
    ab->add_option("--m", o.m);
    ab->add_option("--source", o.source, "direct, closed or printed");
    ab->add_flag("--limit", o.limit, "limit series X(a,b,c)");
    ab->add_option("--degree", o.degree);
    fmt(ab);

    auto* vi = app.add_subcommand("virasoro", "Rocha-Caridi characters");
    vi->add_option("--mparam", o.mparam);
    vi->add_option("--r", o.r);
    vi->add_option("--s", o.s);
    vi->add_option("--degree", o.degree);
    vi->add_flag("--ising", o.ising, "match n=2 branching functions and L=4 limits with chi_{r,s}");
    fmt(vi);

    auto* co = app.add_subcommand("cores", "n-core, n-weight and rim hooks");
    common_n(co);
    co->add_option("--partition", o.partition);
    fmt(co);

    auto* sc = app.add_subcommand("selfcheck", "run the internal consistency checks");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_invalid;
    }

    try {
        std::string text;
        bool failed = false;
        if (cg->parsed())
            text = cmd_crystal_graph(o);
        else if (cb->parsed())
            text = cmd_canonical_basis(o);
        else if (dm->parsed())
            text = cmd_decomp_matrix(o);
        else if (rs->parsed())
            text = cmd_restriction(o);
        else if (sm->parsed())
            text = cmd_specht_matrix(o);
        else if (tb->parsed())
            text = cmd_tableaux(o);
        else if (js->parsed())
            text = cmd_js_list(o);
        else if (fw->parsed())
            text = cmd_fow(o);
        else if (br->parsed())
            text = cmd_branching(o);
        else if (ch->parsed())
            text = cmd_chi(o);
        else if (ab->parsed())
            text = cmd_abf(o);
        else if (vi->parsed())
            text = cmd_virasoro(o);
        else if (co->parsed())
            text = cmd_cores(o);
        else if (sc->parsed())
            text = cmd_selfcheck(o, failed);
        out << text;
        return failed ? exit_convention : exit_ok;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return exit_invalid;
    } catch (const ResourceLimit& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const ConventionViolation& e) {
        err << "convention violation: " << e.what() << '\n';
        return exit_convention;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << '\n';
        return exit_convention;
    }
}

} // namespace fcl
