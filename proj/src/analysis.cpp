#include "morsegrad/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "morsegrad/parallel.hpp"

namespace morsegrad {

PerfectnessReport check_relative_perfect(const Filtration& F, const DiscreteGradient& V,
                                         int threads) {
    if (auto verdict = check_consistency(F, V); !verdict.consistent)
        throw std::invalid_argument("check_relative_perfect: gradient not consistent");

    const int top = F.complex.dimension();
    MorseNumbers m = morse_numbers(F, V);
    std::vector<Grade> grades = image_grades(F);

    // level sets are empty away from image grades, so both sides vanish there
    std::vector<std::vector<int>> rel_dims(grades.size());
    parallel_for(int(grades.size()), threads, [&](int i) {
        CellMask present = sublevel_mask(F, grades[i]);
        CellMask killed = union_of_predecessors_mask(F, grades[i]);
        rel_dims[i] = homology_dims(F.complex, present, &killed);
    });

    PerfectnessReport report;
    for (std::size_t i = 0; i < grades.size(); ++i) {
        for (int q = 0; q <= top; ++q) {
            PerfectnessRow row{grades[i], q, m.count(grades[i], q), rel_dims[i][q]};
            if (row.morse_count < row.relative_dim)
                throw std::logic_error("relative Morse inequality violated at " +
                                       grade_to_string(grades[i]) + " in degree " +
                                       std::to_string(q));
            if (!row.equal()) {
                report.relative_perfect = false;
                report.witnesses.push_back(row);
            }
            if (row.morse_count || row.relative_dim) report.rows.push_back(row);
        }
    }

    if (F.params == 1) {
        std::vector<PersistenceModule> modules;
        for (int q = 0; q <= top; ++q) modules.push_back(build_module(F, q));
        BettiTables xi = betti_tables_n1(modules);
        bool identity = true;
        const GradeGrid grid = grade_grid(F);
        for (int idx = 0; idx < grid.size(); ++idx) {
            Grade u = grid.decompress(grid.grade_at(idx));
            for (int q = 0; q <= top + 1; ++q)
                identity &= m.count(u, q) == xi.value(0, q, u) + xi.value(1, q - 1, u);
        }
        report.n1_betti_identity = identity;

        MorseComplex M = build_morse_complex(F, V);
        PersistencePairs pairs = persistence_pairs_n1(M);
        std::set<CellId> covered;
        for (const auto& p : pairs.pairs) {
            covered.insert(p.positive);
            covered.insert(p.negative);
        }
        for (const auto& e : pairs.essentials) covered.insert(e.positive);
        report.n1_pairs_cover = int(covered.size()) == M.complex.num_cells();
    }
    return report;
}

InequalityReport verify_inequalities(const Filtration& F, const DiscreteGradient& V, int threads) {
    InequalityReport report;
    report.params = F.params;
    report.perfectness = check_relative_perfect(F, V, threads);
    bool all_hold = true; // the relative inequality already threw if violated

    const int top = F.complex.dimension();
    MorseNumbers m = morse_numbers(F, V);
    std::vector<int> betti = homology_dims(F.complex);
    for (int q = 0; q <= top; ++q) {
        GlobalInequalityRow row;
        row.degree = q;
        row.morse_total = q < int(m.totals.size()) ? m.totals[q] : 0;
        row.betti = betti[q];
        row.holds = row.morse_total >= row.betti;
        row.equal = row.morse_total == row.betti;
        all_hold &= row.holds;
        report.global_rows.push_back(row);
    }

    if (F.params <= 2) {
        std::vector<PersistenceModule> modules;
        for (int q = 0; q <= top; ++q) modules.push_back(build_module(F, q));
        report.tables = F.params == 1 ? betti_tables_n1(modules) : betti_tables_n2(modules);

        const GradeGrid grid = modules.front().grid;
        for (int idx = 0; idx < grid.size(); ++idx) {
            Grade u = grid.decompress(grid.grade_at(idx));
            for (int q = 0; q <= top + 1; ++q) {
                InequalityRow row;
                row.grade = u;
                row.degree = q;
                row.xi0 = report.tables.value(0, q, u);
                row.xi1_down1 = report.tables.value(1, q - 1, u);
                row.xi2_down1 = report.tables.value(2, q - 1, u);
                row.xi2_down2 = report.tables.value(2, q - 2, u);
                row.morse_count = m.count(u, q);
                row.lower_bound = row.xi0 + row.xi1_down1 - row.xi2_down1;
                row.lower_holds = row.morse_count >= row.lower_bound;
                row.lower_equal = row.morse_count == row.lower_bound;
                all_hold &= row.lower_holds;
                if (report.perfectness.relative_perfect) {
                    row.upper_bound = row.xi0 + row.xi1_down1 + row.xi2_down2;
                    row.upper_holds = row.morse_count <= *row.upper_bound;
                    row.upper_equal = row.morse_count == *row.upper_bound;
                    all_hold &= *row.upper_holds;
                }
                if (row.morse_count || row.xi0 || row.xi1_down1 || row.xi2_down1 || row.xi2_down2)
                    report.betti_rows.push_back(row);
            }
        }
    }
    report.all_hold = all_hold;
    return report;
}

} // namespace morsegrad
