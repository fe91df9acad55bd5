#include "morsegrad/random_complex.hpp"

#include <algorithm>
#include <set>

namespace morsegrad {

int RandomComplexSource::bounded(int n) {
    // rejection sampling keeps the draw uniform and implementation-independent
    std::uint64_t limit = ~std::uint64_t(0) - ~std::uint64_t(0) % std::uint64_t(n);
    std::uint64_t x;
    do {
        x = rng_();
    } while (x >= limit);
    return int(x % std::uint64_t(n));
}

SimplicialComplex RandomComplexSource::complex(int num_vertices, int max_dim, int top_cells) {
    std::vector<Simplex> cells;
    for (int t = 0; t < top_cells; ++t) {
        // mostly full-dimensional cells, the rest lower-dimensional filler
        int k = bounded(3) ? max_dim + 1 : 1 + bounded(max_dim + 1);
        k = std::min(k, num_vertices);
        std::set<VertexId> vs;
        while (int(vs.size()) < k) vs.insert(bounded(num_vertices));
        cells.push_back(Simplex(std::vector<VertexId>(vs.begin(), vs.end())));
    }
    // extra edges and isolated vertices for variety
    int extra = bounded(num_vertices);
    for (int t = 0; t < extra; ++t) {
        VertexId a = bounded(num_vertices), b = bounded(num_vertices);
        if (a == b)
            cells.push_back(Simplex({a}));
        else
            cells.push_back(Simplex::from_unsorted({a, b}));
    }
    cells.push_back(Simplex({bounded(num_vertices)}));
    return SimplicialComplex(std::move(cells), /*add_closure=*/true);
}

VertexFunction RandomComplexSource::vertex_function(const SimplicialComplex& K, int params) {
    VertexFunction f0;
    f0.params = params;
    std::vector<VertexId> vertices;
    for (CellId c = K.dim_begin(0); c < K.dim_end(0); ++c)
        vertices.push_back(K.cell(c).vertices()[0]);
    for (VertexId v : vertices) f0.values[v] = Grade(params);
    for (int i = 0; i < params; ++i) {
        std::vector<int> ranks(vertices.size());
        for (std::size_t k = 0; k < ranks.size(); ++k) ranks[k] = int(k);
        for (int k = int(ranks.size()) - 1; k > 0; --k)
            std::swap(ranks[k], ranks[bounded(k + 1)]);
        for (std::size_t k = 0; k < vertices.size(); ++k) f0.values[vertices[k]][i] = ranks[k];
    }
    return f0;
}

Filtration RandomComplexSource::filtration(int num_vertices, int max_dim, int top_cells,
                                           int params) {
    SimplicialComplex K = complex(num_vertices, max_dim, top_cells);
    return extend_max(K, vertex_function(K, params));
}

} // namespace morsegrad
