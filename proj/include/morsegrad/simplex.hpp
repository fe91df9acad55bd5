#ifndef MORSEGRAD_SIMPLEX_HPP
#define MORSEGRAD_SIMPLEX_HPP

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace morsegrad {

using VertexId = int;

// An abstract simplex: a strictly increasing tuple of vertex identifiers.
class Simplex {
public:
    Simplex() = default;

    // Vertices must be non-negative; throws if not strictly increasing.
    explicit Simplex(std::vector<VertexId> vertices);

    // Accepts any order, sorts, throws on duplicates.
    static Simplex from_unsorted(std::vector<VertexId> vertices);

    int dim() const { return int(vertices_.size()) - 1; }
    const std::vector<VertexId>& vertices() const { return vertices_; }

    // All codimension-1 faces; the i-th entry is the simplex with the i-th
    // vertex removed.
    std::vector<Simplex> facets() const;

    bool has_vertex(VertexId v) const;
    bool has_face(const Simplex& face) const; // subset test
    Simplex joined_with(VertexId v) const;    // cone over this simplex

    std::string to_string() const;

    auto operator<=>(const Simplex&) const = default; // lexicographic

private:
    std::vector<VertexId> vertices_;
};

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : s.vertices()) {
            h ^= std::size_t(v) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};

// Comparison by (dimension, lexicographic vertex tuple): the deterministic
// cell order used throughout for matrices and reports.
struct DimLexLess {
    bool operator()(const Simplex& a, const Simplex& b) const {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.vertices() < b.vertices();
    }
};

} // namespace morsegrad

#endif
