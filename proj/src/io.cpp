#include "hellylab/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "hellylab/errors.hpp"

namespace hellylab {

namespace {

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

bool blank(const std::string& s) {
    for (char c : s)
        if (!isspace(static_cast<unsigned char>(c))) return false;
    return true;
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return in;
}

}  // namespace

SimpleGraph parse_graph(std::istream& in, std::vector<std::string>* warnings) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1, edge_lines = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            if (!(ss >> n >> m) || n < 0 || m < 0)
                throw InputError("line " + std::to_string(lineno) + ": expected header \"n m\"");
            continue;
        }
        long u, v;
        if (!(ss >> u >> v))
            throw InputError("line " + std::to_string(lineno) + ": expected edge \"u v\"");
        ++edge_lines;
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw InputError("line " + std::to_string(lineno) + ": vertex out of range");
        if (u == v) throw InputError("line " + std::to_string(lineno) + ": loop edge at vertex " +
                                     std::to_string(u));
        std::pair<int, int> key = std::minmax(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert(key).second) {
            if (warnings)
                warnings->push_back("line " + std::to_string(lineno) + ": duplicate edge " +
                                    std::to_string(u) + " " + std::to_string(v) + " (deduplicated)");
            continue;
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw InputError("empty graph file");
    if (edge_lines != m && warnings)
        warnings->push_back("header announced " + std::to_string(m) + " edges, read " +
                            std::to_string(edge_lines));
    return SimpleGraph::from_edges(static_cast<int>(n), edges);
}

SimpleGraph parse_graph_file(const std::string& path, std::vector<std::string>* warnings) {
    auto in = open_or_throw(path);
    return parse_graph(in, warnings);
}

std::string emit_graph(const SimpleGraph& g) {
    auto edges = g.edges();
    std::ostringstream os;
    os << g.size() << " " << edges.size() << "\n";
    for (auto [u, v] : edges) os << u << " " << v << "\n";
    return os.str();
}

FiniteMetric parse_metric(std::istream& in) {
    std::string line;
    std::vector<std::vector<std::string>> rows;
    while (std::getline(in, line)) {
        if (blank(line)) continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(line);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    if (rows.empty()) throw InputError("empty metric file");

    std::vector<std::string> labels;
    size_t first_data = 0;
    bool header = false;
    for (const auto& cell : rows[0])
        if (!parse_rat(cell)) header = true;
    if (header) {
        for (const auto& cell : rows[0]) {
            std::string t = cell;
            while (!t.empty() && isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
            while (!t.empty() && isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
            labels.push_back(t);
        }
        first_data = 1;
    }
    std::vector<std::vector<Rat>> table;
    for (size_t r = first_data; r < rows.size(); ++r) {
        std::vector<Rat> row;
        for (size_t c = 0; c < rows[r].size(); ++c) {
            auto v = parse_rat(rows[r][c]);
            if (!v)
                throw InputError("row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1) +
                                 ": cannot parse \"" + rows[r][c] + "\" as a rational");
            row.push_back(*v);
        }
        table.push_back(std::move(row));
    }
    auto validated = FiniteMetric::validate(std::move(table), std::move(labels));
    if (auto* viol = std::get_if<MetricViolation>(&validated))
        throw InputError("invalid metric: " + viol->describe());
    return std::get<FiniteMetric>(std::move(validated));
}

FiniteMetric parse_metric_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_metric(in);
}

Poset parse_poset(std::istream& in) {
    std::string line;
    int lineno = 0;
    std::map<std::string, int> ids;
    std::vector<std::string> names;
    std::vector<std::pair<int, int>> rels;
    auto intern = [&](const std::string& name) {
        auto it = ids.find(name);
        if (it != ids.end()) return it->second;
        ids.emplace(name, static_cast<int>(names.size()));
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
    };
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        auto pos = line.find('<');
        if (pos == std::string::npos)
            throw InputError("line " + std::to_string(lineno) + ": expected \"a < b\"");
        auto trim = [](std::string s) {
            while (!s.empty() && isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        std::string a = trim(line.substr(0, pos)), b = trim(line.substr(pos + 1));
        if (a.empty() || b.empty())
            throw InputError("line " + std::to_string(lineno) + ": expected \"a < b\"");
        rels.emplace_back(intern(a), intern(b));
    }
    return Poset::from_hasse(std::move(names), rels);
}

Poset parse_poset_file(const std::string& path) {
    auto in = open_or_throw(path);
    return parse_poset(in);
}

std::vector<Bits> parse_cells(std::istream& in, int universe) {
    std::vector<Bits> cells;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_comment(line);
        if (blank(line)) continue;
        Bits cell(universe);
        std::istringstream ss(line);
        long v;
        while (ss >> v) {
            if (v < 0 || v >= universe)
                throw InputError("line " + std::to_string(lineno) + ": vertex out of range");
            cell.set(static_cast<int>(v));
        }
        if (cell.none()) throw InputError("line " + std::to_string(lineno) + ": empty cell");
        cells.push_back(cell);
    }
    return cells;
}

std::vector<Bits> parse_cells_file(const std::string& path, int universe) {
    auto in = open_or_throw(path);
    return parse_cells(in, universe);
}

std::string emit_dot(const SimpleGraph& g, const std::vector<std::string>& labels,
                     const std::vector<bool>& boxes) {
    std::ostringstream os;
    os << "graph G {\n";
    for (int v = 0; v < g.size(); ++v) {
        os << "  n" << v << " [label=\"";
        if (v < static_cast<int>(labels.size()))
            os << labels[v];
        else
            os << v;
        os << "\", shape=" << (v < static_cast<int>(boxes.size()) && boxes[v] ? "box" : "ellipse")
           << "];\n";
    }
    for (auto [u, v] : g.edges()) os << "  n" << u << " -- n" << v << ";\n";
    os << "}\n";
    return os.str();
}

std::string json_schema_version() { return "helly-lab/1"; }

}  // namespace hellylab
