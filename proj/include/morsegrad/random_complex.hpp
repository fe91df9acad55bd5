#ifndef MORSEGRAD_RANDOM_COMPLEX_HPP
#define MORSEGRAD_RANDOM_COMPLEX_HPP

#include <cstdint>
#include <random>

#include "morsegrad/filtration.hpp"

namespace morsegrad {

// Seeded generator of small random instances for property suites and the
// verify --random subcommand. Uses its own bounded sampling on top of
// mt19937_64, so a seed fixes the instance regardless of the standard
// library's distribution internals.
class RandomComplexSource {
public:
    explicit RandomComplexSource(std::uint64_t seed) : rng_(seed) {}

    // Face closure of `top_cells` random simplices of dimension max_dim on
    // up to num_vertices vertices, plus a sprinkle of extra edges and lone
    // vertices so disconnected pieces occur.
    SimplicialComplex complex(int num_vertices, int max_dim, int top_cells);

    // Componentwise injective grades: each axis is a random permutation of
    // 0..num_vertices-1.
    VertexFunction vertex_function(const SimplicialComplex& K, int params);

    Filtration filtration(int num_vertices, int max_dim, int top_cells, int params);

    std::uint64_t raw() { return rng_(); }
    int bounded(int n); // uniform in [0, n)

private:
    std::mt19937_64 rng_;
};

} // namespace morsegrad

#endif
