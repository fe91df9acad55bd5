#include "morsegrad/io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace morsegrad {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream ss(line);
    std::string tok;
    while (ss >> tok) {
        if (tok[0] == '#') break;
        out.push_back(tok);
    }
    return out;
}

int parse_int(const std::string& tok, int lineno, const char* what) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad " + what + " '" + tok + "'");
    }
}

} // namespace

ParsedInput parse_input(std::istream& in, bool allow_tiebreak) {
    int params = -1;
    bool closure = false;
    VertexFunction f0;
    std::vector<Simplex> plain_simplices;
    std::vector<std::pair<Simplex, Grade>> graded_simplices;
    std::map<VertexId, int> vertex_line; // for duplicate diagnostics

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> tok = tokenize(line);
        if (tok.empty()) continue;
        const std::string& kw = tok[0];
        if (kw == "params") {
            if (tok.size() != 2) throw ParseError("line " + std::to_string(lineno) + ": params wants one argument");
            params = parse_int(tok[1], lineno, "parameter count");
            if (params < 1) throw ParseError("line " + std::to_string(lineno) + ": params must be positive");
            f0.params = params;
        } else if (kw == "closure") {
            closure = true;
        } else if (kw == "vertex") {
            if (params < 0) throw ParseError("line " + std::to_string(lineno) + ": params must come first");
            if (int(tok.size()) != 2 + params)
                throw ParseError("line " + std::to_string(lineno) + ": vertex wants an id and " +
                                 std::to_string(params) + " grade entries");
            VertexId v = parse_int(tok[1], lineno, "vertex id");
            if (v < 0) throw ParseError("line " + std::to_string(lineno) + ": negative vertex id");
            if (!vertex_line.emplace(v, lineno).second)
                throw ParseError("line " + std::to_string(lineno) + ": duplicate vertex " +
                                 std::to_string(v) + " (first at line " +
                                 std::to_string(vertex_line[v]) + ")");
            Grade g(params);
            for (int i = 0; i < params; ++i) {
                g[i] = parse_int(tok[2 + i], lineno, "grade entry");
                if (g[i] < 0) throw ParseError("line " + std::to_string(lineno) + ": negative grade");
            }
            f0.values[v] = std::move(g);
            plain_simplices.push_back(Simplex({v}));
        } else if (kw == "simplex") {
            if (params < 0) throw ParseError("line " + std::to_string(lineno) + ": params must come first");
            if (tok.size() < 2) throw ParseError("line " + std::to_string(lineno) + ": empty simplex");
            std::vector<VertexId> vs;
            for (std::size_t i = 1; i < tok.size(); ++i)
                vs.push_back(parse_int(tok[i], lineno, "vertex id"));
            try {
                plain_simplices.push_back(Simplex::from_unsorted(std::move(vs)));
            } catch (const std::exception& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        } else if (kw == "grade") {
            if (params < 0) throw ParseError("line " + std::to_string(lineno) + ": params must come first");
            if (int(tok.size()) < 2 + params)
                throw ParseError("line " + std::to_string(lineno) +
                                 ": grade wants vertices followed by " + std::to_string(params) +
                                 " grade entries");
            int k = int(tok.size()) - 1 - params;
            std::vector<VertexId> vs;
            for (int i = 0; i < k; ++i) vs.push_back(parse_int(tok[1 + i], lineno, "vertex id"));
            Grade g(params);
            for (int i = 0; i < params; ++i) {
                g[i] = parse_int(tok[1 + k + i], lineno, "grade entry");
                if (g[i] < 0) throw ParseError("line " + std::to_string(lineno) + ": negative grade");
            }
            try {
                graded_simplices.emplace_back(Simplex::from_unsorted(std::move(vs)), std::move(g));
            } catch (const std::exception& e) {
                throw ParseError("line " + std::to_string(lineno) + ": " + e.what());
            }
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown directive '" + kw + "'");
        }
    }
    if (params < 0) throw ParseError("missing params line");
    if (!graded_simplices.empty() && !f0.values.empty())
        throw ParseError("vertex/simplex lines cannot be mixed with grade lines");

    ParsedInput out;
    if (!graded_simplices.empty()) {
        if (closure)
            throw ParseError("closure is only available in vertex-function mode");
        out.explicit_mode = true;
        std::sort(graded_simplices.begin(), graded_simplices.end(),
                  [](const auto& a, const auto& b) { return DimLexLess{}(a.first, b.first); });
        for (std::size_t i = 0; i + 1 < graded_simplices.size(); ++i)
            if (graded_simplices[i].first == graded_simplices[i + 1].first)
                throw ParseError("cell " + graded_simplices[i].first.to_string() +
                                 " graded twice (one-criticality)");
        std::vector<Simplex> cells;
        for (auto& [s, g] : graded_simplices) cells.push_back(s);
        SimplicialComplex K(cells); // throws if not face-closed
        std::vector<Grade> grades(K.num_cells());
        for (auto& [s, g] : graded_simplices) grades[*K.find(s)] = g;
        try {
            out.filtration = explicit_filtration(std::move(K), std::move(grades), params);
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
    } else {
        if (f0.values.empty()) throw ParseError("no cells given");
        if (allow_tiebreak) {
            out.tiebreak_axes = tiebreak_components(f0);
        }
        SimplicialComplex K;
        try {
            K = SimplicialComplex(std::move(plain_simplices), closure);
        } catch (const std::exception& e) {
            throw ParseError(e.what());
        }
        for (CellId c = K.dim_begin(0); c < K.dim_end(0); ++c) {
            VertexId v = K.cell(c).vertices()[0];
            if (!f0.values.count(v))
                throw ParseError("vertex " + std::to_string(v) + " appears in a simplex but has no vertex line");
        }
        try {
            out.filtration = extend_max(K, f0);
        } catch (const std::exception& e) {
            throw ParseError(std::string(e.what()) +
                             (allow_tiebreak ? "" : " (use --tiebreak to perturb deterministically)"));
        }
    }
    return out;
}

ParsedInput parse_input_file(const std::string& path, bool allow_tiebreak) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    return parse_input(in, allow_tiebreak);
}

std::string format_cell_complex(const LefschetzComplex& M, const std::vector<Grade>& grades,
                                int params) {
    std::ostringstream out;
    out << "params " << params << "\n";
    for (CellId c = 0; c < M.num_cells(); ++c) {
        out << "cell " << c << " " << M.cell_dim(c);
        for (int g : grades[c]) out << " " << g;
        out << "\n";
    }
    for (CellId c = 0; c < M.num_cells(); ++c)
        for (CellId f : M.cell_facets(c)) out << "face " << c << " " << f << " 1\n";
    return out.str();
}

std::uint64_t fnv1a_hash(const std::string& data) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : data) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

nlohmann::json grade_json(const Grade& u) { return nlohmann::json(u); }

namespace {

nlohmann::json cell_json(const Simplex& s) { return nlohmann::json(s.vertices()); }

} // namespace

nlohmann::json gradient_json(const Filtration& F, const DiscreteGradient& V) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [sigma, tau] : V.pairs()) {
        pairs.push_back({{"cell", cell_json(F.complex.cell(sigma))},
                         {"cofacet", cell_json(F.complex.cell(tau))},
                         {"grade", grade_json(F.grades[sigma])}});
    }
    nlohmann::json critical = nlohmann::json::array();
    for (CellId c : V.critical_cells()) {
        critical.push_back({{"cell", cell_json(F.complex.cell(c))},
                            {"dim", F.complex.cell_dim(c)},
                            {"grade", grade_json(F.grades[c])}});
    }
    return {{"pairs", pairs}, {"critical", critical}};
}

nlohmann::json morse_numbers_json(const MorseNumbers& m) {
    nlohmann::json per_grade = nlohmann::json::array();
    for (const auto& [u, counts] : m.per_grade)
        for (int q = 0; q < int(counts.size()); ++q)
            if (counts[q])
                per_grade.push_back({{"grade", grade_json(u)}, {"q", q}, {"count", counts[q]}});
    return {{"per_grade", per_grade}, {"totals", m.totals}};
}

nlohmann::json betti_tables_json(const BettiTables& t) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < 3; ++i)
        for (int q = 0; q < int(t.tables[i].size()); ++q)
            for (const auto& [u, v] : t.tables[i][q])
                entries.push_back({{"table", i}, {"q", q}, {"grade", grade_json(u)}, {"value", v}});
    return {{"params", t.params}, {"entries", entries}};
}

nlohmann::json persistence_pairs_json(const PersistencePairs& p, const SimplicialComplex* K) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& pr : p.pairs) {
        nlohmann::json row = {{"birth", grade_json(pr.birth)},
                              {"death", grade_json(pr.death)},
                              {"q", pr.degree}};
        if (K) {
            row["positive"] = cell_json(K->cell(pr.positive));
            row["negative"] = cell_json(K->cell(pr.negative));
        }
        pairs.push_back(row);
    }
    nlohmann::json essentials = nlohmann::json::array();
    for (const auto& e : p.essentials) {
        nlohmann::json row = {{"birth", grade_json(e.birth)},
                              {"death", nullptr},
                              {"q", e.degree}};
        if (K) row["positive"] = cell_json(K->cell(e.positive));
        essentials.push_back(row);
    }
    return {{"pairs", pairs}, {"essential", essentials}};
}

nlohmann::json perfectness_json(const PerfectnessReport& r) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"grade", grade_json(row.grade)},
                        {"q", row.degree},
                        {"morse", row.morse_count},
                        {"relative_dim", row.relative_dim},
                        {"equal", row.equal()}});
    nlohmann::json witnesses = nlohmann::json::array();
    for (const auto& row : r.witnesses)
        witnesses.push_back({{"grade", grade_json(row.grade)},
                             {"q", row.degree},
                             {"morse", row.morse_count},
                             {"relative_dim", row.relative_dim}});
    nlohmann::json out = {{"verdict", r.relative_perfect}, {"rows", rows}, {"witnesses", witnesses}};
    if (r.n1_betti_identity) out["n1_betti_identity"] = *r.n1_betti_identity;
    if (r.n1_pairs_cover) out["n1_pairs_cover"] = *r.n1_pairs_cover;
    return out;
}

nlohmann::json inequalities_json(const InequalityReport& r) {
    nlohmann::json global = nlohmann::json::array();
    for (const auto& row : r.global_rows)
        global.push_back({{"q", row.degree},
                          {"morse_total", row.morse_total},
                          {"betti", row.betti},
                          {"holds", row.holds},
                          {"equal", row.equal}});
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : r.betti_rows) {
        nlohmann::json j = {{"grade", grade_json(row.grade)},
                            {"q", row.degree},
                            {"xi0", row.xi0},
                            {"xi1_qm1", row.xi1_down1},
                            {"xi2_qm1", row.xi2_down1},
                            {"xi2_qm2", row.xi2_down2},
                            {"lower_bound", row.lower_bound},
                            {"morse", row.morse_count},
                            {"lower_holds", row.lower_holds},
                            {"lower_equal", row.lower_equal}};
        if (row.upper_bound) {
            j["upper_bound"] = *row.upper_bound;
            j["upper_holds"] = *row.upper_holds;
            j["upper_equal"] = *row.upper_equal;
        }
        rows.push_back(j);
    }
    return {{"params", r.params},
            {"all_hold", r.all_hold},
            {"global", global},
            {"rows", rows}};
}

std::string emit_report(const nlohmann::json& meta, const nlohmann::json& sections) {
    nlohmann::json report = sections;
    report["meta"] = meta;
    return report.dump(2) + "\n";
}

} // namespace morsegrad
