#ifndef MORSEGRAD_CHAIN_TOOLS_HPP
#define MORSEGRAD_CHAIN_TOOLS_HPP

#include <stdexcept>
#include <vector>

#include "morsegrad/complex.hpp"
#include "morsegrad/f2_matrix.hpp"
#include "morsegrad/homology.hpp"

namespace morsegrad {

// Basis of H_q of a masked subcomplex with explicit representative cycles.
// Chains live in the coordinates of *all* q-cells of the ambient complex (in
// cell-id order), so a cycle computed at one grade is directly a chain at any
// later grade and can be decomposed there.
class HomologyBasis {
public:
    template <CellComplexLike C>
    HomologyBasis(const C& K, const std::vector<CellId>& ambient_q_cells,
                  const std::vector<CellId>& ambient_q1_cells, const CellMask& present, int q)
        : echelon_(int(ambient_q_cells.size()), 0) {
        const int width = int(ambient_q_cells.size());
        std::vector<int> coord_of(K.num_cells(), -1);
        for (int i = 0; i < width; ++i) coord_of[ambient_q_cells[i]] = i;

        // image of the (q+1)-boundary first, tagged zero
        std::vector<BitVector> boundaries;
        for (CellId c : ambient_q1_cells) {
            if (!present[c]) continue;
            BitVector b(width);
            for (CellId f : K.cell_facets(c)) b.flip(coord_of[f]);
            boundaries.push_back(std::move(b));
        }

        // kernel of the q-boundary on the present cells
        std::vector<CellId> cols;
        for (CellId c : ambient_q_cells)
            if (present[c]) cols.push_back(c);
        std::vector<CellId> rows;
        std::vector<int> row_of(K.num_cells(), -1);
        for (CellId c = 0; c < K.num_cells(); ++c)
            if (present[c] && K.cell_dim(c) == q - 1) {
                row_of[c] = int(rows.size());
                rows.push_back(c);
            }
        F2Matrix d(int(rows.size()), int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j)
            for (CellId f : K.cell_facets(cols[j]))
                if (row_of[f] >= 0) d.set(row_of[f], j);
        std::vector<BitVector> cycles;
        for (const BitVector& k : d.kernel_basis()) {
            BitVector z(width);
            for (int j : k.set_bits()) z.set(coord_of[cols[j]]);
            cycles.push_back(std::move(z));
        }

        // quotient: sift cycles through the boundary span, keep the survivors
        echelon_ = TrackedEchelon(width, int(cycles.size()));
        for (BitVector& b : boundaries) echelon_.insert(std::move(b), BitVector(int(cycles.size())));
        for (BitVector& z : cycles) {
            BitVector tag(int(cycles.size()));
            tag.set(int(reps_.size()));
            BitVector copy = z;
            if (!echelon_.insert(std::move(copy), std::move(tag))) reps_.push_back(std::move(z));
        }
    }

    int dim() const { return int(reps_.size()); }
    const std::vector<BitVector>& reps() const { return reps_; }

    // Coordinates of a cycle (in ambient q-cell coordinates) with respect to
    // this basis, modulo boundaries. Throws if the chain is not a cycle here.
    BitVector decompose(const BitVector& cycle) const {
        auto tag = echelon_.express(cycle);
        if (!tag) throw std::logic_error("HomologyBasis: chain is not a cycle of this subcomplex");
        BitVector out(dim());
        for (int b : tag->set_bits())
            if (b < dim()) out.set(b);
        return out;
    }

private:
    std::vector<BitVector> reps_;
    TrackedEchelon echelon_;
};

// Matrix of the inclusion-induced map H_q(source) -> H_q(target) for nested
// masked subcomplexes, in the bases' rep coordinates.
inline F2Matrix induced_map(const HomologyBasis& source, const HomologyBasis& target) {
    F2Matrix m(target.dim(), source.dim());
    for (int j = 0; j < source.dim(); ++j) {
        BitVector coords = target.decompose(source.reps()[j]);
        for (int i : coords.set_bits()) m.set(i, j);
    }
    return m;
}

} // namespace morsegrad

#endif
