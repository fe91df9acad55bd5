#ifndef MORSEGRAD_INVARIANTS_HPP
#define MORSEGRAD_INVARIANTS_HPP

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "morsegrad/chain_tools.hpp"
#include "morsegrad/filtration.hpp"
#include "morsegrad/morse.hpp"

namespace morsegrad {

// One homology degree of the persistence module of a graded complex over its
// compressed grade grid: dimensions, representative cycles, and the
// inclusion-induced maps along unit grid edges.
struct PersistenceModule {
    int degree = 0;
    GradeGrid grid;
    std::vector<int> dims;                          // by grid linear index
    std::vector<std::vector<BitVector>> reps;       // by grid linear index
    std::vector<std::vector<F2Matrix>> edge_maps;   // [axis][source index]

    // Map along u -> u + e_axis, shaped dims[target] x dims[source].
    const F2Matrix& edge_map(int axis, int source_index) const {
        return edge_maps[axis][source_index];
    }
};

// Persistence module of degree q for any graded cell complex over the grid.
template <CellComplexLike C>
PersistenceModule build_module(const C& K, const std::vector<Grade>& grades, const GradeGrid& grid,
                               int q);

PersistenceModule build_module(const Filtration& F, int q);
PersistenceModule build_module(const MorseComplex& M, int q);

// Rank of the composite map from grade u to grade v (compressed grid
// coordinates); path-independent by square commutativity. Throws unless
// u <= v on the grid.
int rank_invariant(const PersistenceModule& P, const Grade& u, const Grade& v);

// Betti tables of the persistence modules, indexed (table, degree, grade):
// xi_0 marks births, xi_1 deaths, xi_2 (two parameters only) relations among
// deaths. Grades are original coordinates; absent entries are zero.
struct BettiTables {
    int params = 1;
    int max_degree = 0;
    std::array<std::vector<std::map<Grade, int>>, 3> tables;

    int value(int i, int q, const Grade& u) const;
    void set(int i, int q, const Grade& u, int v);
};

// Eq-style one-parameter tables: xi_0(u) = dim cok(V_{u-1} -> V_u),
// xi_1(u) = dim ker. modules[q] must be the degree-q module.
BettiTables betti_tables_n1(const std::vector<PersistenceModule>& modules);

// Two-parameter tables via the Koszul complex at each grade u, with
// x = u - e_1, y = u - e_2, z = u - e_1 - e_2 (empty spaces off-grid):
//   xi_0 = dim cok(mer), xi_1 = dim ker(mer) - dim im(spl), xi_2 = dim ker(spl),
// where spl stacks the maps out of z and mer merges the maps into u. The
// containment im(spl) <= ker(mer) is verified.
BettiTables betti_tables_n2(const std::vector<PersistenceModule>& modules);

// One-parameter persistence pairs by boundary-matrix reduction in filtration
// order (ties broken by the deterministic cell order). Pairs with equal birth
// and death grade are not reported; unpaired creators are essential.
struct PersistencePairs {
    struct Pair {
        Grade birth, death;
        int degree;         // degree of the class (dimension of the positive cell)
        CellId positive, negative;
    };
    struct Essential {
        Grade birth;
        int degree;
        CellId positive;
    };
    std::vector<Pair> pairs;
    std::vector<Essential> essentials;
};

PersistencePairs persistence_pairs_n1(const Filtration& F);
PersistencePairs persistence_pairs_n1(const MorseComplex& M);

// Kernel and cokernel dimensions of j_q^u : H_q(union of predecessors) ->
// H_q(K^u), the two contributions to the relative homology of the pair.
struct InclusionRanks {
    int kernel = 0;
    int cokernel = 0;
};

InclusionRanks inclusion_ranks(const Filtration& F, const Grade& u, int q);

} // namespace morsegrad

#endif
