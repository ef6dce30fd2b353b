#include "hellylab/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "hellylab/complexes.hpp"
#include "hellylab/delta.hpp"
#include "hellylab/errors.hpp"
#include "hellylab/garside.hpp"
#include "hellylab/helly.hpp"
#include "hellylab/io.hpp"
#include "hellylab/lattice.hpp"
#include "hellylab/oracle.hpp"
#include "hellylab/poset.hpp"
#include "hellylab/subdivision.hpp"
#include "hellylab/tightspan.hpp"

namespace hellylab {

namespace {

using nlohmann::json;

struct Options {
    std::string format = "text";
    int bound = -1;
    bool unsafe_raise = false;
};

int resolve_bound(const Options& opt, int def) {
    if (opt.bound < 0) return def;
    if (opt.bound > def && !opt.unsafe_raise)
        throw InputError("bound " + std::to_string(opt.bound) + " exceeds the default " +
                         std::to_string(def) + "; pass --unsafe-raise to allow it");
    return opt.bound;
}

json base_json(const std::string& kind) {
    json j;
    j["schema"] = json_schema_version();
    j["kind"] = kind;
    return j;
}

std::vector<int> parse_index_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        try {
            out.push_back(std::stoi(part));
        } catch (...) {
            throw InputError("cannot parse index list entry \"" + part + "\"");
        }
    }
    if (out.empty()) throw InputError("empty index list");
    return out;
}

std::vector<Rat> parse_rat_list(const std::string& s) {
    std::vector<Rat> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        auto v = parse_rat(part);
        if (!v) throw InputError("cannot parse rational \"" + part + "\"");
        out.push_back(*v);
    }
    return out;
}

// Cycle notation like "(0 1)(2 3)"; unlisted vertices stay fixed.
std::vector<int> parse_permutation(const std::string& s, int n) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    size_t pos = 0;
    while (pos < s.size()) {
        while (pos < s.size() && isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == s.size()) break;
        if (s[pos] != '(') throw InputError("permutation must use cycle notation, e.g. (0 1)(2 3)");
        auto close = s.find(')', pos);
        if (close == std::string::npos) throw InputError("unclosed cycle in permutation");
        std::stringstream ss(s.substr(pos + 1, close - pos - 1));
        std::vector<int> cycle;
        long v;
        while (ss >> v) {
            if (v < 0 || v >= n) throw InputError("permutation vertex out of range");
            cycle.push_back(static_cast<int>(v));
        }
        for (size_t i = 0; i < cycle.size(); ++i) perm[cycle[i]] = cycle[(i + 1) % cycle.size()];
        pos = close + 1;
    }
    return perm;
}

json graph_json(const SimpleGraph& g) {
    json j;
    j["n"] = g.size();
    j["edges"] = json::array();
    for (auto [u, v] : g.edges()) j["edges"].push_back({u, v});
    return j;
}

void emit_graph_result(const Options& opt, std::ostream& out, const std::string& kind,
                       const SimpleGraph& g, const std::vector<std::string>& labels,
                       const std::vector<bool>& boxes, json extra = json::object()) {
    if (opt.format == "dot") {
        out << emit_dot(g, labels, boxes);
    } else if (opt.format == "json") {
        json j = base_json(kind);
        j.update(graph_json(g));
        j["labels"] = labels;
        j.update(extra);
        out << j.dump(2) << "\n";
    } else {
        out << emit_graph(g);
        for (size_t i = 0; i < labels.size(); ++i) out << "# " << i << ": " << labels[i] << "\n";
    }
}

std::string set_str(const Bits& b) {
    std::string s = "{";
    bool first = true;
    for (int v : b.members()) {
        if (!first) s += ",";
        s += std::to_string(v);
        first = false;
    }
    return s + "}";
}

IsHellyMethod parse_method(const std::string& m) {
    if (m == "hull" || m == "hull_equality") return IsHellyMethod::HullEquality;
    if (m == "berge" || m == "berge_triples") return IsHellyMethod::BergeTriples;
    if (m == "brute" || m == "brute_force") return IsHellyMethod::BruteForce;
    throw InputError("unknown method \"" + m + "\" (hull|berge|brute)");
}

// --- subcommand payloads ---------------------------------------------------

void require_not_dot(const Options& opt) {
    if (opt.format == "dot")
        throw InputError("unsupported format: dot output only applies to graph results");
}

int cmd_tightspan(const Options& opt, const std::string& action, const std::string& metric_path,
                  const std::string& fvec, int max_iter, std::ostream& out) {
    require_not_dot(opt);
    auto m = parse_metric_file(metric_path);
    int bound = resolve_bound(opt, Bounds::tight_span);
    if (action == "vertices") {
        auto verts = tight_span_vertices(m, bound);
        if (opt.format == "json") {
            json j = base_json("tightspan-vertices");
            j["n"] = m.size();
            j["vertices"] = json::array();
            for (const auto& f : verts) {
                json row = json::array();
                for (const auto& v : f) row.push_back(rat_str(v));
                j["vertices"].push_back(row);
            }
            out << j.dump(2) << "\n";
        } else {
            for (const auto& f : verts) out << rat_vector_str(f) << "\n";
        }
        return 0;
    }
    if (action == "cells") {
        auto cells = tight_span_cells(m, bound);
        if (opt.format == "json") {
            json j = base_json("tightspan-cells");
            j["cells"] = json::array();
            for (const auto& c : cells) {
                json jc;
                jc["dim"] = c.dim;
                jc["tight_pairs"] = json::array();
                for (auto [x, y] : c.tight_pairs) jc["tight_pairs"].push_back({x, y});
                jc["vertices"] = c.vertex_ids;
                j["cells"].push_back(jc);
            }
            out << j.dump(2) << "\n";
        } else {
            for (const auto& c : cells) {
                out << "dim=" << c.dim << " pairs=";
                for (auto [x, y] : c.tight_pairs) out << "{" << x << "," << y << "}";
                out << " vertices=[";
                for (size_t i = 0; i < c.vertex_ids.size(); ++i)
                    out << (i ? "," : "") << c.vertex_ids[i];
                out << "]\n";
            }
        }
        return 0;
    }
    if (action == "dim") {
        int d = combinatorial_dimension(m, bound);
        if (opt.format == "json") {
            json j = base_json("tightspan-dim");
            j["dimension"] = d;
            out << j.dump(2) << "\n";
        } else {
            out << "combinatorial dimension = " << d << "\n";
        }
        return 0;
    }
    if (action == "project") {
        if (fvec.empty()) throw InputError("project needs --f v1,v2,...");
        auto f = parse_rat_list(fvec);
        if (static_cast<int>(f.size()) != m.size())
            throw InputError("--f must list one value per point");
        auto r = project_to_tight_span(m, f, max_iter);
        if (opt.format == "json") {
            json j = base_json("tightspan-project");
            j["exact"] = r.exact;
            j["iterations"] = r.iterations;
            json val = json::array();
            for (const auto& v : r.value) val.push_back(rat_str(v));
            j["value"] = val;
            if (!r.exact) {
                json gap = json::array();
                for (const auto& v : r.gap) gap.push_back(rat_str(v));
                j["gap"] = gap;
            }
            out << j.dump(2) << "\n";
        } else if (r.exact) {
            out << "extremal after " << r.iterations << " steps: " << rat_vector_str(r.value) << "\n";
        } else {
            out << "approximate after " << r.iterations << " steps: " << rat_vector_str(r.value)
                << " gap " << rat_vector_str(r.gap) << "\n";
        }
        return 0;
    }
    throw InputError("unknown tightspan action");
}

int cmd_helly(const Options& opt, const std::string& action, const std::string& graph_path,
              const std::string& method, const std::string& set_spec, std::ostream& out) {
    std::vector<std::string> warnings;
    auto g = parse_graph_file(graph_path, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";

    if (action == "check") {
        auto verdict = is_helly(g, parse_method(method), resolve_bound(opt, Bounds::hull),
                                Bounds::brute_helly);
        if (opt.format == "json") {
            json j = base_json("helly-check");
            j["method"] = method;
            j["helly"] = verdict.helly;
            j["witness"] = json::array();
            for (const auto& b : verdict.witness) j["witness"].push_back({b.center, b.radius});
            out << j.dump(2) << "\n";
        } else {
            out << (verdict.helly ? "Helly" : "not Helly") << "\n";
            if (!verdict.helly) {
                out << "witness balls:";
                for (const auto& b : verdict.witness)
                    out << " B(" << b.center << "," << b.radius << ")";
                out << "\n";
            }
        }
        return verdict.helly ? 0 : 1;
    }
    if (action == "hull") {
        auto res = helly_hull(g, resolve_bound(opt, Bounds::hull));
        std::vector<std::string> labels;
        std::vector<bool> boxes(res.hull.size(), false);
        for (const auto& f : res.functions) {
            std::string l;
            for (size_t i = 0; i < f.size(); ++i) l += (i ? "," : "") + std::to_string(f[i]);
            labels.push_back(l);
        }
        for (int x = 0; x < g.size(); ++x) boxes[res.embedding[x]] = true;
        json extra;
        extra["functions"] = res.functions;
        extra["embedding"] = res.embedding;
        emit_graph_result(opt, out, "helly-hull", res.hull, labels, boxes, extra);
        return 0;
    }
    if (action == "round-cliques") {
        auto rc = round_cliques(g);
        if (opt.format == "json") {
            json j = base_json("round-cliques");
            j["cliques"] = json::array();
            for (const auto& c : rc.cliques) j["cliques"].push_back(c.members());
            j["hasse"] = json::array();
            for (auto [a, b] : rc.hasse) j["hasse"].push_back({a, b});
            j["warnings"] = json::array();
            if (!rc.input_helly) j["warnings"].push_back("input graph is not Helly");
            out << j.dump(2) << "\n";
        } else {
            if (!rc.input_helly) out << "warning: input graph is not Helly\n";
            for (const auto& c : rc.cliques) out << set_str(c) << "\n";
        }
        return 0;
    }
    if (action == "circumclique") {
        if (set_spec.empty()) throw InputError("circumclique needs --set v1,v2,...");
        Bits k(g.size());
        for (int v : parse_index_list(set_spec)) {
            if (v < 0 || v >= g.size()) throw InputError("--set vertex out of range");
            k.set(v);
        }
        auto cc = circumclique(g, k);
        if (opt.format == "json") {
            json j = base_json("circumclique");
            j["members"] = cc.members();
            out << j.dump(2) << "\n";
        } else {
            out << set_str(cc) << "\n";
        }
        return 0;
    }
    if (action == "gap") {
        int gap = coarse_helly_gap(g, resolve_bound(opt, Bounds::hull));
        if (opt.format == "json") {
            json j = base_json("coarse-helly-gap");
            j["gap"] = gap;
            out << j.dump(2) << "\n";
        } else {
            out << "coarse Helly gap = " << gap << "\n";
        }
        return 0;
    }
    if (action == "stability") {
        int beta = interval_stability_bound(g);
        if (opt.format == "json") {
            json j = base_json("interval-stability");
            j["beta"] = beta;
            j["note"] = "interval-level proxy; path-level stability is not enumerated";
            out << j.dump(2) << "\n";
        } else {
            out << "beta = " << beta << " (interval-level proxy)\n";
        }
        return 0;
    }
    throw InputError("unknown helly action");
}

int cmd_construct(const Options& opt, const std::string& kind, int n, const std::string& dims_spec,
                  uint64_t seed, int radius, const std::string& cells_out,
                  const std::string& lattice_spec, const std::string& graph_path,
                  const std::string& cells_path, std::ostream& out) {
    auto dims = [&]() {
        std::vector<int> d;
        for (int v : parse_index_list(dims_spec.empty() ? "3,3" : dims_spec)) d.push_back(v);
        return d;
    };
    auto emit_plain = [&](const SimpleGraph& g) {
        std::vector<std::string> labels;
        for (int v = 0; v < g.size(); ++v) labels.push_back(std::to_string(v));
        emit_graph_result(opt, out, "graph", g, labels, std::vector<bool>(g.size(), true));
        return 0;
    };
    auto emit_complex = [&](const CellComplexSpec& spec) {
        if (!cells_out.empty()) {
            std::ofstream cf(cells_out);
            if (!cf) throw InputError("cannot write " + cells_out);
            for (const auto& c : spec.cells) {
                auto m = c.members();
                for (size_t i = 0; i < m.size(); ++i) cf << (i ? " " : "") << m[i];
                cf << "\n";
            }
        }
        return emit_plain(spec.graph);
    };
    if (kind == "cycle") return emit_plain(gen_cycle(n));
    if (kind == "path") return emit_plain(gen_path(n));
    if (kind == "complete") return emit_plain(gen_complete(n));
    if (kind == "star") return emit_plain(gen_star(n));
    if (kind == "king") return emit_plain(gen_king(dims()));
    if (kind == "grid") return emit_plain(gen_grid(dims()));
    if (kind == "sun") return emit_plain(gen_sun());
    if (kind == "tree") return emit_plain(gen_random_tree(n, seed));
    if (kind == "cube" || kind == "two-squares" || kind == "corner3" || kind == "tree-of-squares")
        return emit_complex(gen_cube_complex(kind));
    if (kind == "garside-ball") {
        auto ball = garside_b3_ball(radius, resolve_bound(opt, Bounds::garside_radius));
        std::vector<bool> boxes(ball.graph.size(), false);
        if (!boxes.empty()) boxes[0] = true;  // the identity
        emit_graph_result(opt, out, "garside-ball", ball.graph, ball.labels, boxes);
        return 0;
    }
    if (kind == "thickening" || kind == "cell-check") {
        if (graph_path.empty() || cells_path.empty())
            throw InputError(kind + " needs --graph and --cells files");
        auto g = parse_graph_file(graph_path);
        auto cells = parse_cells_file(cells_path, g.size());
        auto spec = CellComplexSpec::checked(std::move(g), std::move(cells));
        if (kind == "thickening") return emit_plain(thickening(spec));
        auto rep = cell_helly_check(spec);
        if (opt.format == "json") {
            json j = base_json("cell-helly-check");
            j["family_helly"] = rep.family_helly;
            j["flag_condition"] = rep.flag_condition;
            j["no_infinite_chains"] = rep.no_infinite_chains;
            j["cells_connected"] = rep.cells_connected;
            j["intersections_connected"] = rep.intersections_connected;
            j["edges_covered"] = rep.edges_covered;
            j["simple_connectedness_assumed"] = rep.simple_connectedness_assumed;
            if (rep.flag_witness)
                j["flag_witness"] = {(*rep.flag_witness)[0], (*rep.flag_witness)[1],
                                     (*rep.flag_witness)[2]};
            j["helly_witness"] = rep.helly_witness;
            out << j.dump(2) << "\n";
        } else {
            out << "family Helly property: " << (rep.family_helly ? "pass" : "FAIL") << "\n";
            out << "flag condition:        " << (rep.flag_condition ? "pass" : "FAIL") << "\n";
            out << "finite chains:         " << (rep.no_infinite_chains ? "pass" : "FAIL") << "\n";
            out << "cells connected:       " << (rep.cells_connected ? "pass" : "FAIL") << "\n";
            out << "intersections conn.:   " << (rep.intersections_connected ? "pass" : "FAIL")
                << "\n";
            out << "simple connectedness:  assumed, not verified\n";
        }
        return rep.all_checked_pass() ? 0 : 1;
    }
    if (kind == "lattice") {
        if (lattice_spec.empty()) throw InputError("lattice needs --spec zd:<dims>:<extent> or b3:<k>");
        LatticeWindow w;
        if (lattice_spec.rfind("zd:", 0) == 0) {
            auto rest = lattice_spec.substr(3);
            auto colon = rest.find(':');
            if (colon == std::string::npos) throw InputError("expected zd:<dims>:<extent>");
            w = zd_window(std::stoi(rest.substr(0, colon)), std::stoi(rest.substr(colon + 1)));
        } else if (lattice_spec.rfind("b3:", 0) == 0) {
            w = b3_window(std::stoi(lattice_spec.substr(3)));
        } else {
            throw InputError("unknown lattice spec \"" + lattice_spec + "\"");
        }
        auto res = lattice_to_graph(w);
        if (opt.format == "json") {
            json j = base_json("lattice-graph");
            j.update(graph_json(res.core_graph));
            j["distance_check"] = res.distance_check;
            j["interior_helly"] = res.interior_helly.helly;
            out << j.dump(2) << "\n";
        } else {
            out << "core: " << res.core.count() << " vertices, "
                << res.core_graph.edge_count() << " edges\n";
            out << "interior distance check: " << (res.distance_check ? "pass" : "FAIL") << "\n";
            out << "interior Helly: " << (res.interior_helly.helly ? "yes" : "no") << "\n";
        }
        return (res.distance_check && res.interior_helly.helly) ? 0 : 1;
    }
    throw InputError("unknown construct kind \"" + kind + "\"");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"helly-lab: injective hulls, Helly hulls and Helly graph machinery"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));
    app.add_option("--bound", opt.bound, "Override the enumeration bound (lowering is always allowed)");
    app.add_flag("--unsafe-raise", opt.unsafe_raise, "Allow --bound above the built-in default");

    std::string metric_path, graph_path, cells_path, fvec, method = "berge", set_spec, perm_spec;
    std::string oracle_spec = "king:2", map_spec, kind, dims_spec, cells_out, lattice_spec;
    int max_iter = 64, n = 4, radius = 1, horizon = 12, window = 12, dim_bound = 2, subdivide_n = 1;
    uint64_t seed = 1;

    auto* ts = app.add_subcommand("tightspan", "Injective hull computations");
    std::string ts_action;
    ts->add_option("action", ts_action)->required()->check(CLI::IsMember({"vertices", "cells", "dim", "project"}));
    ts->add_option("--metric", metric_path, "Metric CSV file")->required();
    ts->add_option("--f", fvec, "Function values v1,v2,... (project)");
    ts->add_option("--max-iter", max_iter, "Iteration cap for project");

    auto* he = app.add_subcommand("helly", "Helly graph computations");
    std::string he_action;
    he->add_option("action", he_action)
        ->required()
        ->check(CLI::IsMember({"check", "hull", "round-cliques", "circumclique", "gap", "stability"}));
    he->add_option("--graph", graph_path, "Graph edge-list file")->required();
    he->add_option("--method", method, "check method: hull, berge or brute");
    he->add_option("--set", set_spec, "Vertex set v1,v2,... (circumclique)");

    auto* sub = app.add_subcommand("subdivide", "Helly subdivisions");
    sub->add_option("--graph", graph_path, "Graph edge-list file")->required();
    sub->add_option("--n", subdivide_n, "Subdivision order N");

    auto* aut = app.add_subcommand("aut", "Automorphism classification and translation lengths");
    std::string aut_action;
    aut->add_option("action", aut_action)->required()->check(CLI::IsMember({"classify", "length"}));
    aut->add_option("--graph", graph_path, "Graph edge-list file (classify)");
    aut->add_option("--perm", perm_spec, "Automorphism in cycle notation (classify)");
    aut->add_option("--oracle", oracle_spec, "king:<dims> or tree:<degree> (length)");
    aut->add_option("--map", map_spec, "Coordinate map, e.g. x2+1,x1 (length)");
    aut->add_option("--horizon", horizon, "Iterate count (length)");
    aut->add_option("--window", window, "Window radius (length)");
    aut->add_option("--dim", dim_bound, "Combinatorial dimension bound (length)");

    auto* po = app.add_subcommand("poset", "Poset diagnostics and chain complexes");
    std::string po_action;
    po->add_option("action", po_action)->required()->check(CLI::IsMember({"check", "chains"}));
    po->add_option("--poset", metric_path, "Hasse edge-list file (\"a < b\" lines)")->required();

    auto* co = app.add_subcommand("construct", "Graph and complex builders");
    co->add_option("kind", kind)->required();
    co->add_option("--n", n, "Size parameter");
    co->add_option("--dims", dims_spec, "Dimensions a,b,...");
    co->add_option("--seed", seed, "Random seed (tree)");
    co->add_option("--radius", radius, "Ball radius (garside-ball)");
    co->add_option("--cells-out", cells_out, "Write the cell family to this file");
    co->add_option("--spec", lattice_spec, "Lattice window spec (lattice)");
    co->add_option("--graph", graph_path, "Graph file (thickening, cell-check)");
    co->add_option("--cells", cells_path, "Cells file (thickening, cell-check)");

    auto* me = app.add_subcommand("metric", "Metric diagnostics");
    std::string me_action;
    me->add_option("action", me_action)->required()->check(CLI::IsMember({"delta", "median"}));
    me->add_option("--metric", metric_path, "Metric CSV file")->required();
    me->add_option("--points", set_spec, "Triple x,y,z (median)");

    for (auto* cmd : {ts, he, sub, aut, po, co, me}) cmd->fallthrough();

    std::vector<std::string> argv_storage = args;
    std::vector<const char*> argv{"hellylab"};
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ts->parsed()) return cmd_tightspan(opt, ts_action, metric_path, fvec, max_iter, out);
        if (he->parsed()) return cmd_helly(opt, he_action, graph_path, method, set_spec, out);
        if (sub->parsed()) {
            auto g = parse_graph_file(graph_path);
            auto res = nth_subdivision(g, subdivide_n, resolve_bound(opt, Bounds::subdivision));
            std::vector<std::string> labels;
            std::vector<bool> boxes(res.graph.size(), false);
            for (int i = 0; i < res.graph.size(); ++i) {
                if (res.meaning[i])
                    labels.push_back(set_str(*res.meaning[i]));
                else {
                    std::string l;
                    for (size_t k2 = 0; k2 < res.functions[i].size(); ++k2)
                        l += (k2 ? "," : "") + std::to_string(res.functions[i][k2]);
                    labels.push_back(l);
                }
            }
            for (int x = 0; x < g.size(); ++x) boxes[res.embedding[x]] = true;
            json extra;
            extra["scale"] = res.scale;
            extra["embedding"] = res.embedding;
            emit_graph_result(opt, out, "subdivision", res.graph, labels, boxes, extra);
            return 0;
        }
        if (aut->parsed()) {
            if (aut_action == "classify") {
                if (graph_path.empty() || perm_spec.empty())
                    throw InputError("classify needs --graph and --perm");
                auto g = parse_graph_file(graph_path);
                auto a = GraphAutomorphism::checked(g, parse_permutation(perm_spec, g.size()));
                auto cert = classify_automorphism(g, a);
                if (opt.format == "json") {
                    json j = base_json("aut-classify");
                    j["type"] = "elliptic";
                    j["stabilized_round_clique"] = cert.stabilized_round_clique.members();
                    j["fixed_subdivision_vertex"] = cert.fixed_subdivision_vertex;
                    out << j.dump(2) << "\n";
                } else {
                    out << "elliptic; stabilized round clique "
                        << set_str(cert.stabilized_round_clique) << "; fixed subdivision vertex "
                        << cert.fixed_subdivision_vertex << "\n";
                }
                return 0;
            }
            // length
            if (map_spec.empty()) throw InputError("length needs --map");
            GraphOracle oracle;
            OracleMap m;
            if (oracle_spec.rfind("king:", 0) == 0) {
                int odims = std::stoi(oracle_spec.substr(5));
                oracle = king_oracle(odims);
                m = parse_king_map(map_spec, odims);
            } else if (oracle_spec.rfind("tree:", 0) == 0) {
                int degree = std::stoi(oracle_spec.substr(5));
                oracle = tree_oracle(degree);
                m = parse_tree_map(map_spec, degree);
            } else {
                throw InputError("unknown oracle \"" + oracle_spec + "\"");
            }
            auto r = translation_length(oracle, m, dim_bound, horizon, window);
            if (opt.format == "json") {
                json j = base_json("translation-length");
                j["length"] = rat_str(r.length);
                j["estimate"] = rat_str(r.estimate);
                j["certified"] = r.certified;
                if (r.certified) {
                    j["period"] = r.period;
                    j["increment"] = r.increment;
                }
                j["window_exhausted"] = r.window_exhausted;
                j["orbit_distances"] = r.orbit_distances;
                out << j.dump(2) << "\n";
            } else if (r.certified) {
                out << "L = " << rat_str(r.length) << " (certified, a=" << r.period << ")\n";
            } else {
                out << "L = " << rat_str(r.length) << " (uncertified estimate"
                    << (r.window_exhausted ? ", window exhausted" : "") << ")\n";
            }
            return 0;
        }
        if (po->parsed()) {
            require_not_dot(opt);
            auto p = parse_poset_file(metric_path);
            if (po_action == "check") {
                auto rep = poset_check(p);
                if (opt.format == "json") {
                    json j = base_json("poset-check");
                    j["bowties"] = json::array();
                    for (const auto& b : rep.bowties) j["bowties"].push_back({b.a, b.b, b.c, b.d});
                    j["is_lattice"] = rep.is_lattice;
                    j["graded"] = rep.graded;
                    j["up_flag_failures"] = json::array();
                    for (const auto& f : rep.up_flag_failures)
                        j["up_flag_failures"].push_back({{"base", f.base}, {"tuple", f.tuple}});
                    j["down_flag_failures"] = json::array();
                    for (const auto& f : rep.down_flag_failures)
                        j["down_flag_failures"].push_back({{"base", f.base}, {"tuple", f.tuple}});
                    out << j.dump(2) << "\n";
                } else {
                    out << "bowties: " << rep.bowties.size();
                    for (const auto& b : rep.bowties)
                        out << " (" << p.elements()[b.a] << "," << p.elements()[b.b] << "<"
                            << p.elements()[b.c] << "," << p.elements()[b.d] << ")";
                    out << "\n";
                    out << "lattice: " << (rep.is_lattice ? "yes" : "no") << "\n";
                    out << "graded: " << (rep.graded ? "yes" : "no") << "\n";
                    out << "up-flag failures: " << rep.up_flag_failures.size() << "\n";
                    out << "down-flag failures: " << rep.down_flag_failures.size() << "\n";
                }
                return 0;
            }
            auto cc = orthoscheme_chains(p);
            if (opt.format == "json") {
                json j = base_json("orthoscheme-chains");
                j["f_vector"] = cc.f_vector;
                j["simplices"] = cc.simplices;
                out << j.dump(2) << "\n";
            } else {
                out << "f-vector:";
                for (long v : cc.f_vector) out << " " << v;
                out << "\n" << cc.simplices.size() << " simplices\n";
            }
            return 0;
        }
        if (co->parsed())
            return cmd_construct(opt, kind, n, dims_spec, seed, radius, cells_out, lattice_spec,
                                 graph_path, cells_path, out);
        if (me->parsed()) {
            require_not_dot(opt);
            auto m = parse_metric_file(metric_path);
            if (me_action == "delta") {
                auto d = four_point_delta(m);
                if (opt.format == "json") {
                    json j = base_json("four-point-delta");
                    j["delta"] = rat_str(d);
                    out << j.dump(2) << "\n";
                } else {
                    out << "delta = " << rat_str(d) << "\n";
                }
                return 0;
            }
            if (set_spec.empty()) throw InputError("median needs --points x,y,z");
            auto pts = parse_index_list(set_spec);
            if (pts.size() != 3) throw InputError("median needs exactly three points");
            for (int v : pts)
                if (v < 0 || v >= m.size()) throw InputError("--points index out of range");
            auto med = median_set(m, pts[0], pts[1], pts[2]);
            if (opt.format == "json") {
                json j = base_json("median-set");
                j["median"] = med;
                out << j.dump(2) << "\n";
            } else {
                out << "{";
                for (size_t i = 0; i < med.size(); ++i) out << (i ? "," : "") << med[i];
                out << "}\n";
            }
            return 0;
        }
    } catch (const BoundExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand\n";
    return 2;
}

}  // namespace hellylab
