// morsegrad: discrete gradient fields consistent with multi-parameter
// sublevel filtrations, their Morse complexes, and the associated invariants
// (Morse numbers, relative perfectness, Betti tables, persistence pairs).

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "morsegrad/analysis.hpp"
#include "morsegrad/io.hpp"
#include "morsegrad/random_complex.hpp"

namespace {

using namespace morsegrad;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct Options {
    std::string subcommand;
    std::string input_file;
    std::string json_out;
    bool tiebreak = false;
    int threads = 1;
    std::uint64_t seed = 1;
    bool random_mode = false;
    int random_count = 25;
    int random_vertices = 9;
    int random_dim = 2;
    int random_params = 2;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

nlohmann::json make_meta(const Options& opt, const std::string& input_text) {
    // thread count deliberately left out: reports must be identical across
    // --threads values
    nlohmann::json meta;
    meta["tool"] = "morsegrad";
    meta["subcommand"] = opt.subcommand;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a_hash(input_text)));
    meta["input_hash"] = std::string(buf);
    meta["tiebreak"] = opt.tiebreak;
    return meta;
}

void write_output(const Options& opt, const std::string& report) {
    if (opt.json_out.empty()) return;
    std::ofstream out(opt.json_out);
    out << report;
}

int run_on_file(Options& opt) {
    const std::string input_text = read_file(opt.input_file);
    std::istringstream in(input_text);
    ParsedInput parsed = parse_input(in, opt.tiebreak);
    const Filtration& F = parsed.filtration;

    nlohmann::json meta = make_meta(opt, input_text);
    if (!parsed.tiebreak_axes.empty()) meta["tiebreak_axes"] = parsed.tiebreak_axes;
    meta["params"] = F.params;
    meta["cells"] = F.complex.num_cells();
    nlohmann::json sections;
    int exit_code = kExitOk;

    auto computed_gradient = [&]() {
        DiscreteGradient V = compute_gradient(F, opt.threads);
        if (auto verdict = validate_gradient(F.complex, V); !verdict.valid)
            throw std::logic_error("computed gradient failed validation: " + verdict.message);
        if (auto verdict = check_consistency(F, V); !verdict.consistent)
            throw std::logic_error("computed gradient is not consistent with the filtration");
        return V;
    };

    if (opt.subcommand == "validate") {
        // parsing already validated the filtration invariants
        sections["validation"] = {{"ok", true},
                                  {"mode", parsed.explicit_mode ? "explicit" : "vertex"}};
        std::cout << "input ok: " << F.complex.num_cells() << " cells, " << F.params
                  << " parameter(s)\n";
    } else if (opt.subcommand == "gradient") {
        DiscreteGradient V = computed_gradient();
        sections["gradient"] = gradient_json(F, V);
        std::cout << "gradient: " << V.num_pairs() << " pairs, "
                  << V.critical_cells().size() << " critical cells\n";
    } else if (opt.subcommand == "reduce") {
        DiscreteGradient V = computed_gradient();
        MorseComplex M = build_morse_complex(F, V);
        sections["gradient"] = gradient_json(F, V);
        std::cout << format_cell_complex(M.complex, M.grades, M.params);
    } else if (opt.subcommand == "morse-numbers") {
        DiscreteGradient V = computed_gradient();
        MorseComplex M = build_morse_complex(F, V);
        sections["gradient"] = gradient_json(F, V);
        sections["morse_numbers"] = morse_numbers_json(morse_numbers(M, grade_grid(F)));
        std::cout << sections["morse_numbers"].dump(2) << "\n";
    } else if (opt.subcommand == "betti") {
        if (F.params > 2) throw ParseError("betti tables are only defined for 1 or 2 parameters");
        std::vector<PersistenceModule> modules;
        for (int q = 0; q <= F.complex.dimension(); ++q) modules.push_back(build_module(F, q));
        BettiTables tables =
            F.params == 1 ? betti_tables_n1(modules) : betti_tables_n2(modules);
        sections["betti_tables"] = betti_tables_json(tables);
        std::cout << sections["betti_tables"].dump(2) << "\n";
    } else if (opt.subcommand == "persistence") {
        if (F.params != 1) throw ParseError("persistence pairs require a 1-parameter filtration");
        PersistencePairs pairs = persistence_pairs_n1(F);
        sections["persistence_pairs"] = persistence_pairs_json(pairs, &F.complex);
        std::cout << sections["persistence_pairs"].dump(2) << "\n";
    } else if (opt.subcommand == "check-perfect") {
        DiscreteGradient V = computed_gradient();
        PerfectnessReport report = check_relative_perfect(F, V, opt.threads);
        sections["gradient"] = gradient_json(F, V);
        sections["morse_numbers"] = morse_numbers_json(morse_numbers(F, V));
        sections["perfectness"] = perfectness_json(report);
        std::cout << "relative-perfect: " << (report.relative_perfect ? "yes" : "no") << "\n";
        for (const auto& w : report.witnesses)
            std::cout << "  witness: grade " << grade_to_string(w.grade) << " q=" << w.degree
                      << " morse=" << w.morse_count << " relative_dim=" << w.relative_dim << "\n";
        if (!report.relative_perfect) exit_code = kExitCheckFailed;
    } else if (opt.subcommand == "verify") {
        DiscreteGradient V = computed_gradient();
        InequalityReport report = verify_inequalities(F, V, opt.threads);
        sections["gradient"] = gradient_json(F, V);
        sections["morse_numbers"] = morse_numbers_json(morse_numbers(F, V));
        sections["perfectness"] = perfectness_json(report.perfectness);
        sections["inequalities"] = inequalities_json(report);
        if (report.params <= 2) sections["betti_tables"] = betti_tables_json(report.tables);
        std::cout << "inequalities hold: " << (report.all_hold ? "yes" : "no")
                  << "; relative-perfect: "
                  << (report.perfectness.relative_perfect ? "yes" : "no") << "\n";
        if (!report.all_hold) exit_code = kExitCheckFailed;
    } else {
        throw ParseError("unknown subcommand: " + opt.subcommand);
    }

    write_output(opt, emit_report(meta, sections));
    return exit_code;
}

int run_random_verify(const Options& opt) {
    RandomComplexSource source(opt.seed);
    int failures = 0;
    for (int i = 0; i < opt.random_count; ++i) {
        Filtration F = source.filtration(opt.random_vertices, opt.random_dim,
                                         2 * opt.random_vertices, opt.random_params);
        DiscreteGradient V = compute_gradient(F, opt.threads);
        bool ok = validate_gradient(F.complex, V).valid &&
                  check_consistency(F, V).consistent;
        if (ok && F.params <= 2) {
            InequalityReport report = verify_inequalities(F, V, opt.threads);
            ok = report.all_hold;
            if (F.complex.dimension() <= 2 && !report.perfectness.relative_perfect) ok = false;
        } else if (ok) {
            PerfectnessReport report = check_relative_perfect(F, V, opt.threads);
            if (F.complex.dimension() <= 2 && !report.relative_perfect) ok = false;
        }
        std::cout << "instance " << i << ": " << F.complex.num_cells() << " cells, "
                  << (ok ? "ok" : "FAILED") << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures ? "FAILED" : "ok") << ": " << (opt.random_count - failures) << "/"
              << opt.random_count << " instances passed\n";
    return failures ? kExitCheckFailed : kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"discrete Morse gradients for multi-parameter filtrations"};
    app.require_subcommand(1);
    Options opt;

    const std::vector<std::string> names = {"validate",      "gradient", "reduce",
                                            "morse-numbers", "betti",    "persistence",
                                            "check-perfect", "verify"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        if (name == "verify") {
            sub->add_option("file", opt.input_file, "input filtration file");
            sub->add_flag("--random", opt.random_mode, "run on random instances instead of a file");
            sub->add_option("--count", opt.random_count, "number of random instances");
            sub->add_option("--vertices", opt.random_vertices, "vertices per random instance");
            sub->add_option("--max-dim", opt.random_dim, "dimension of random instances");
            sub->add_option("--params", opt.random_params, "parameters of random instances");
        } else {
            sub->add_option("file", opt.input_file, "input filtration file")->required();
        }
        sub->add_option("--json", opt.json_out, "write the JSON report here");
        sub->add_flag("--tiebreak", opt.tiebreak,
                      "perturb non-injective vertex components deterministically");
        sub->add_option("--threads", opt.threads, "worker threads");
        sub->add_option("--seed", opt.seed, "seed for the random-instance generator");
        sub->callback([&opt, name] { opt.subcommand = name; });
    }

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.subcommand == "verify" && opt.random_mode) return run_random_verify(opt);
        if (opt.input_file.empty()) throw ParseError("an input file is required");
        return run_on_file(opt);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
}
