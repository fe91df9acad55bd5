#ifndef MORSEGRAD_COMPLEX_HPP
#define MORSEGRAD_COMPLEX_HPP

#include <concepts>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "morsegrad/simplex.hpp"

namespace morsegrad {

using CellId = int;

// Anything that looks like a finite cell complex with mod-2 incidence:
// cells indexed 0..n-1, each with a dimension and a list of facets.
template <typename C>
concept CellComplexLike = requires(const C& k, CellId c) {
    { k.num_cells() } -> std::convertible_to<int>;
    { k.dimension() } -> std::convertible_to<int>;
    { k.cell_dim(c) } -> std::convertible_to<int>;
    { k.cell_facets(c) } -> std::convertible_to<std::span<const CellId>>;
    { k.cell_cofacets(c) } -> std::convertible_to<std::span<const CellId>>;
};

// A finite simplicial complex. Cells are stored sorted by (dimension,
// lexicographic vertex tuple) and addressed by that position, which fixes a
// deterministic cell order for boundary matrices and reports. Face-closure is
// a construction invariant.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Builds the complex from the given simplices. With add_closure, missing
    // faces are generated; otherwise a missing face is an error. Duplicates
    // are merged silently.
    explicit SimplicialComplex(std::vector<Simplex> simplices, bool add_closure = false);

    int num_cells() const { return int(cells_.size()); }
    int dimension() const { return int(dim_offsets_.size()) - 2; }

    int cell_dim(CellId c) const { return cells_[c].dim(); }
    const Simplex& cell(CellId c) const { return cells_[c]; }
    const std::vector<Simplex>& cells() const { return cells_; }

    std::span<const CellId> cell_facets(CellId c) const { return facets_[c]; }
    std::span<const CellId> cell_cofacets(CellId c) const { return cofacets_[c]; }

    // Cells of dimension q occupy a contiguous id range.
    int dim_begin(int q) const;
    int dim_end(int q) const;
    int num_cells_of_dim(int q) const { return dim_end(q) - dim_begin(q); }

    std::optional<CellId> find(const Simplex& s) const;
    bool contains(const Simplex& s) const { return find(s).has_value(); }

private:
    std::vector<Simplex> cells_; // sorted by (dim, lex)
    std::vector<int> dim_offsets_;
    std::vector<std::vector<CellId>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
    std::unordered_map<Simplex, CellId, SimplexHash> index_;
};

// Lefschetz-style cell complex: cells carry just a dimension, incidence is an
// explicit mod-2 relation. This is the target representation for Morse
// complexes, whose cells are not simplices of anything.
class LefschetzComplex {
public:
    LefschetzComplex() = default;

    // facet_lists[c] holds the cells with nonzero incidence against c; each
    // must have dimension dim(c) - 1.
    LefschetzComplex(std::vector<int> dims, std::vector<std::vector<CellId>> facet_lists);

    int num_cells() const { return int(dims_.size()); }
    int dimension() const { return dimension_; }
    int cell_dim(CellId c) const { return dims_[c]; }
    std::span<const CellId> cell_facets(CellId c) const { return facets_[c]; }
    std::span<const CellId> cell_cofacets(CellId c) const { return cofacets_[c]; }

    // Condition (iv): the incidence function squares to zero. Returns the
    // first violating (cell, cell) pair if any.
    std::optional<std::pair<CellId, CellId>> incidence_square_violation() const;

private:
    std::vector<int> dims_;
    std::vector<std::vector<CellId>> facets_;
    std::vector<std::vector<CellId>> cofacets_;
    int dimension_ = -1;
};

static_assert(CellComplexLike<SimplicialComplex>);
static_assert(CellComplexLike<LefschetzComplex>);

// View of a simplicial complex as a Lefschetz complex (kappa mod 2).
LefschetzComplex to_lefschetz(const SimplicialComplex& K);

// Cone over K from a fresh apex vertex (must not occur in K).
SimplicialComplex cone(const SimplicialComplex& K, VertexId apex);

} // namespace morsegrad

#endif
