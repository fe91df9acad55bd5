#include "morsegrad/homology.hpp"

namespace morsegrad {

std::vector<int> relative_homology_dims(const SimplicialComplex& K, const SimplicialComplex& A) {
    CellMask sub(K.num_cells(), 0);
    for (const Simplex& s : A.cells()) {
        auto id = K.find(s);
        if (!id)
            throw std::invalid_argument("relative_homology_dims: " + s.to_string() +
                                        " is not a cell of the ambient complex");
        sub[*id] = 1;
    }
    return relative_homology_dims(K, sub);
}

} // namespace morsegrad
