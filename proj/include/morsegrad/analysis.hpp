#ifndef MORSEGRAD_ANALYSIS_HPP
#define MORSEGRAD_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "morsegrad/invariants.hpp"

namespace morsegrad {

// One comparison m_q(u) vs dim H_q(K^u, union of predecessors).
struct PerfectnessRow {
    Grade grade;
    int degree = 0;
    int morse_count = 0;
    int relative_dim = 0;

    bool equal() const { return morse_count == relative_dim; }
};

struct PerfectnessReport {
    bool relative_perfect = true;
    std::vector<PerfectnessRow> rows;      // image grades, rows with any nonzero entry
    std::vector<PerfectnessRow> witnesses; // failing rows
    // one-parameter cross-checks (set when params == 1):
    // m_q(u) = xi0^q(u) + xi1^{q-1}(u) at every grade, and every cell of the
    // Morse complex is a positive or negative cell of some reported pair or
    // an essential class
    std::optional<bool> n1_betti_identity;
    std::optional<bool> n1_pairs_cover;
};

// Compares Morse numbers against relative homology across the whole grid.
// The inequality m >= dim is a theorem for consistent gradients; a violation
// reports an internal error.
PerfectnessReport check_relative_perfect(const Filtration& F, const DiscreteGradient& V,
                                         int threads = 1);

// One grade/degree row of the Betti-table bounds. The upper bound uses the
// xi_2 term two degrees down; the one-degree-down value is carried along for
// reference since only one of the two can make the two-triangle example
// sharp.
struct InequalityRow {
    Grade grade;
    int degree = 0;
    int xi0 = 0;        // xi_0^q(u)
    int xi1_down1 = 0;  // xi_1^{q-1}(u)
    int xi2_down1 = 0;  // xi_2^{q-1}(u)
    int xi2_down2 = 0;  // xi_2^{q-2}(u)
    int lower_bound = 0;
    int morse_count = 0;
    bool lower_holds = true;
    bool lower_equal = false;
    std::optional<int> upper_bound; // only when the gradient is relative-perfect
    std::optional<bool> upper_holds;
    std::optional<bool> upper_equal;
};

struct GlobalInequalityRow {
    int degree = 0;
    int morse_total = 0;
    int betti = 0;
    bool holds = true;
    bool equal = false;
};

struct InequalityReport {
    int params = 1;
    PerfectnessReport perfectness;
    std::vector<GlobalInequalityRow> global_rows; // m_q(V) >= beta_q(K)
    std::vector<InequalityRow> betti_rows;        // params <= 2 only
    BettiTables tables;                           // the values behind betti_rows
    bool all_hold = true;
};

// Evaluates, across the grade grid: the relative Morse inequality, the global
// Morse inequalities, and for one or two parameters the Betti-table bounds
// (the upper one only under relative-perfectness). Equalities are flagged.
InequalityReport verify_inequalities(const Filtration& F, const DiscreteGradient& V,
                                     int threads = 1);

} // namespace morsegrad

#endif
