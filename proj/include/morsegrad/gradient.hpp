#ifndef MORSEGRAD_GRADIENT_HPP
#define MORSEGRAD_GRADIENT_HPP

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morsegrad/filtration.hpp"

namespace morsegrad {

// An acyclic partial matching of cells with their cofacets. partner[c] is the
// matched cell (facet or cofacet) or -1 when c is critical; the encoding
// makes "no cell in two pairs" structural.
struct DiscreteGradient {
    std::vector<CellId> partner;

    bool is_critical(CellId c) const { return partner[c] == -1; }
    std::vector<CellId> critical_cells() const;

    // Pairs (sigma, tau) with sigma a facet of tau, sorted by sigma.
    std::vector<std::pair<CellId, CellId>> pairs() const;
    int num_pairs() const;

    static DiscreteGradient all_critical(int num_cells) {
        return DiscreteGradient{std::vector<CellId>(num_cells, -1)};
    }
};

// A total order on the cells of one lower star, compatible with the facet
// relation. Rank 0 is first to be considered.
struct ExpansionIndex {
    std::vector<CellId> order; // cells in increasing index
};

// The index used by compute_gradient: cells sorted by (dimension, tuple of
// vertex grades sorted ascending under the lexicographic order on grades,
// vertex ids). Facet-compatible because dimension is the leading key.
ExpansionIndex default_expansion_index(const Filtration& F, std::span<const CellId> star);

struct LocalExpansion {
    std::vector<std::pair<CellId, CellId>> pairs; // (facet, cofacet)
    std::vector<CellId> critical;
};

// Homotopy-expansion matching of one lower star: the base simplex is paired
// to its minimal-index cofacet, then cells are paired off whenever exactly
// one facet inside the star is still unclassified, with unpairable cells
// declared critical. Facet counts only look at cells of the star; everything
// outside is already classified by the grade partition. Every cell of the
// star is classified exactly once.
LocalExpansion homotopy_expansion(const SimplicialComplex& K, std::span<const CellId> star,
                                  const ExpansionIndex& index);

// Runs homotopy_expansion over the lower star of the primary simplex of every
// grade in the image of the filtration and merges the results. The lower
// stars are disjoint, so with threads > 1 they are processed concurrently;
// the output does not depend on the schedule.
DiscreteGradient compute_gradient(const Filtration& F, int threads = 1);

struct GradientVerdict {
    bool valid = true;
    std::string message;
    std::vector<CellId> cycle; // witness of a closed V-path, if any
};

// Partition and acyclicity checks; acyclicity via topological sort of the
// Hasse diagram with matched edges reversed.
GradientVerdict validate_gradient(const SimplicialComplex& K, const DiscreteGradient& V);

struct ConsistencyVerdict {
    bool consistent = true;
    std::optional<std::pair<CellId, CellId>> witness;
};

// A gradient is consistent with a one-critical filtration iff every pair has
// equal grades.
ConsistencyVerdict check_consistency(const Filtration& F, const DiscreteGradient& V);

// Alternating sequence (sigma_0, tau_0, sigma_1, ..., sigma_r) with
// (sigma_i, tau_i) matched and sigma_{i+1} a distinct facet of tau_i.
using VPath = std::vector<CellId>;

// All maximal V-paths from `start`, optionally restricted to a cell subset.
// Paths form a DAG by acyclicity, so enumeration terminates.
std::vector<VPath> trace_vpaths(const SimplicialComplex& K, const DiscreteGradient& V,
                                CellId start, const CellMask* restrict_to = nullptr);

} // namespace morsegrad

#endif
