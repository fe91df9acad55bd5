#include "morsegrad/simplex.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsegrad {

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) throw std::invalid_argument("simplex needs at least one vertex");
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i] < 0) throw std::invalid_argument("negative vertex id");
        if (i > 0 && vertices_[i - 1] >= vertices_[i])
            throw std::invalid_argument("simplex vertices must be strictly increasing");
    }
}

Simplex Simplex::from_unsorted(std::vector<VertexId> vertices) {
    std::sort(vertices.begin(), vertices.end());
    return Simplex(std::move(vertices)); // constructor rejects duplicates
}

std::vector<Simplex> Simplex::facets() const {
    std::vector<Simplex> out;
    if (dim() == 0) return out;
    out.reserve(vertices_.size());
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        std::vector<VertexId> f;
        f.reserve(vertices_.size() - 1);
        for (std::size_t j = 0; j < vertices_.size(); ++j)
            if (j != i) f.push_back(vertices_[j]);
        out.emplace_back(std::move(f));
    }
    return out;
}

bool Simplex::has_vertex(VertexId v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::has_face(const Simplex& face) const {
    return std::includes(vertices_.begin(), vertices_.end(), face.vertices().begin(),
                         face.vertices().end());
}

Simplex Simplex::joined_with(VertexId v) const {
    std::vector<VertexId> joined = vertices_;
    joined.push_back(v);
    return from_unsorted(std::move(joined));
}

std::string Simplex::to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(vertices_[i]);
    }
    s += "]";
    return s;
}

} // namespace morsegrad
