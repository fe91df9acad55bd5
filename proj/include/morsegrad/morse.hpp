#ifndef MORSEGRAD_MORSE_HPP
#define MORSEGRAD_MORSE_HPP

#include <map>
#include <vector>

#include "morsegrad/bitvector.hpp"
#include "morsegrad/gradient.hpp"

namespace morsegrad {

// The discrete Morse complex of a consistent gradient: a Lefschetz complex on
// the critical cells with incidence kappa' given by separatrix parity, graded
// by the entrance grades inherited from the filtration. Cell i corresponds to
// source[i] in the original complex; ids follow the (dim, lex) order of the
// critical cells.
struct MorseComplex {
    LefschetzComplex complex;
    std::vector<Grade> grades;
    std::vector<CellId> source;
    int params = 1;
};

// Parity of the number of separatrices from critical cell t to critical cell
// s (dim t = dim s + 1): one if t is a cofacet of s, plus one per V-path from
// a facet of t down to s. Computed by parity propagation over the acyclic
// path DAG, never by path enumeration.
int separatrix_parity(const SimplicialComplex& K, const DiscreteGradient& V, CellId t, CellId s);

// Shared-memo variant: all boundary parities of critical cells in one sweep.
// parities(t) is indexed by the rank of each critical (dim t - 1)-cell among
// the critical cells of that dimension, in cell-id order.
class SeparatrixCalculator {
public:
    SeparatrixCalculator(const SimplicialComplex& K, const DiscreteGradient& V);

    const BitVector& boundary_parities(CellId critical_cell);
    const std::vector<CellId>& critical_of_dim(int q) const { return critical_by_dim_[q]; }

private:
    const BitVector& flow_parities(CellId cell); // over critical cells of dim(cell)

    const SimplicialComplex& K_;
    const DiscreteGradient& V_;
    std::vector<std::vector<CellId>> critical_by_dim_;
    std::vector<int> critical_rank_;              // rank among criticals of its dim, else -1
    std::map<CellId, BitVector> flow_memo_;       // per-cell parity vectors
    std::map<CellId, BitVector> boundary_memo_;   // per critical cell
};

MorseComplex build_morse_complex(const Filtration& F, const DiscreteGradient& V);

// Multi-parameter Morse numbers: m_q(u) counts the critical q-cells entering
// exactly at grade u; totals are the global Morse numbers m_q(V).
struct MorseNumbers {
    std::map<Grade, std::vector<int>> per_grade; // original grade -> counts by degree
    std::vector<int> totals;

    int count(const Grade& u, int q) const;
};

MorseNumbers morse_numbers(const MorseComplex& M, const GradeGrid& grid);
MorseNumbers morse_numbers(const Filtration& F, const DiscreteGradient& V);

} // namespace morsegrad

#endif
