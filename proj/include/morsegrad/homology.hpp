#ifndef MORSEGRAD_HOMOLOGY_HPP
#define MORSEGRAD_HOMOLOGY_HPP

#include <stdexcept>
#include <vector>

#include "morsegrad/complex.hpp"
#include "morsegrad/f2_matrix.hpp"

namespace morsegrad {

// Cell subsets are flat char masks indexed by CellId.
using CellMask = std::vector<char>;

inline CellMask full_mask(int n) { return CellMask(n, 1); }

template <CellComplexLike C>
bool is_face_closed(const C& K, const CellMask& mask) {
    for (CellId c = 0; c < K.num_cells(); ++c) {
        if (!mask[c]) continue;
        for (CellId f : K.cell_facets(c))
            if (!mask[f]) return false;
    }
    return true;
}

// Local (per-dimension) cell indexing of a masked subcomplex; row/column
// coordinates of the boundary matrices below.
template <CellComplexLike C>
std::vector<CellId> masked_cells_of_dim(const C& K, const CellMask& mask, int q) {
    std::vector<CellId> out;
    for (CellId c = 0; c < K.num_cells(); ++c)
        if (mask[c] && K.cell_dim(c) == q) out.push_back(c);
    return out;
}

// Boundary operator from q-cells to (q-1)-cells of the subcomplex selected by
// `present`, with boundary entries landing in `killed` dropped (killed = cells
// of the subcomplex A when computing relative boundaries; empty mask for
// absolute ones). Columns/rows follow the deterministic cell order.
template <CellComplexLike C>
F2Matrix boundary_matrix(const C& K, int q, const CellMask& present, const CellMask* killed = nullptr) {
    std::vector<CellId> cols, rows;
    std::vector<int> row_of(K.num_cells(), -1);
    for (CellId c = 0; c < K.num_cells(); ++c) {
        if (!present[c] || (killed && (*killed)[c])) continue;
        if (K.cell_dim(c) == q) cols.push_back(c);
        if (K.cell_dim(c) == q - 1) {
            row_of[c] = int(rows.size());
            rows.push_back(c);
        }
    }
    F2Matrix m(int(rows.size()), int(cols.size()));
    for (int j = 0; j < int(cols.size()); ++j)
        for (CellId f : K.cell_facets(cols[j]))
            if (row_of[f] >= 0) m.set(row_of[f], j);
    return m;
}

template <CellComplexLike C>
F2Matrix boundary_matrix(const C& K, int q) {
    return boundary_matrix(K, q, full_mask(K.num_cells()));
}

// Betti numbers (or relative homology dimensions when `killed` is given) of
// the masked subcomplex, by degree 0..dim K: beta_q = #cells_q - rank d_q -
// rank d_{q+1}.
template <CellComplexLike C>
std::vector<int> homology_dims(const C& K, const CellMask& present, const CellMask* killed = nullptr) {
    int top = K.dimension();
    std::vector<int> dims(std::max(top + 1, 0), 0);
    if (top < 0) return dims;
    std::vector<int> counts(top + 2, 0), ranks(top + 2, 0);
    for (int q = 0; q <= top + 1; ++q) {
        F2Matrix d = boundary_matrix(K, q, present, killed);
        counts[q] = q <= top ? d.cols() : 0;
        ranks[q] = d.rank();
    }
    for (int q = 0; q <= top; ++q) dims[q] = counts[q] - ranks[q] - ranks[q + 1];
    return dims;
}

template <CellComplexLike C>
std::vector<int> homology_dims(const C& K) {
    return homology_dims(K, full_mask(K.num_cells()));
}

// dim H_q(K, A) for a face-closed subset A of K; throws if A is not a valid
// subcomplex mask.
template <CellComplexLike C>
std::vector<int> relative_homology_dims(const C& K, const CellMask& sub) {
    if (int(sub.size()) != K.num_cells())
        throw std::invalid_argument("relative_homology_dims: mask size mismatch");
    if (!is_face_closed(K, sub))
        throw std::invalid_argument("relative_homology_dims: subset is not face-closed");
    return homology_dims(K, full_mask(K.num_cells()), &sub);
}

// Same with A given as its own complex; every cell of A must occur in K.
std::vector<int> relative_homology_dims(const SimplicialComplex& K, const SimplicialComplex& A);

template <CellComplexLike C>
int euler_characteristic(const C& K) {
    int chi = 0;
    for (CellId c = 0; c < K.num_cells(); ++c) chi += (K.cell_dim(c) % 2 == 0) ? 1 : -1;
    return chi;
}

} // namespace morsegrad

#endif
