#include "morsegrad/complex.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace morsegrad {

SimplicialComplex::SimplicialComplex(std::vector<Simplex> simplices, bool add_closure) {
    std::unordered_set<Simplex, SimplexHash> seen(simplices.begin(), simplices.end());
    if (add_closure) {
        std::vector<Simplex> queue(seen.begin(), seen.end());
        while (!queue.empty()) {
            Simplex s = std::move(queue.back());
            queue.pop_back();
            for (Simplex& f : s.facets())
                if (seen.insert(f).second) queue.push_back(std::move(f));
        }
    }
    cells_.assign(seen.begin(), seen.end());
    std::sort(cells_.begin(), cells_.end(), DimLexLess{});

    index_.reserve(cells_.size());
    for (CellId c = 0; c < int(cells_.size()); ++c) index_[cells_[c]] = c;

    int dim = cells_.empty() ? -1 : cells_.back().dim();
    dim_offsets_.assign(dim + 2, 0);
    for (const Simplex& s : cells_) ++dim_offsets_[s.dim() + 1];
    for (std::size_t q = 1; q < dim_offsets_.size(); ++q) dim_offsets_[q] += dim_offsets_[q - 1];

    facets_.resize(cells_.size());
    cofacets_.resize(cells_.size());
    for (CellId c = 0; c < int(cells_.size()); ++c) {
        for (const Simplex& f : cells_[c].facets()) {
            auto it = index_.find(f);
            if (it == index_.end())
                throw std::invalid_argument("complex is not face-closed: missing facet " +
                                            f.to_string() + " of " + cells_[c].to_string());
            facets_[c].push_back(it->second);
            cofacets_[it->second].push_back(c);
        }
        std::sort(facets_[c].begin(), facets_[c].end());
    }
    for (auto& cof : cofacets_) std::sort(cof.begin(), cof.end());
}

int SimplicialComplex::dim_begin(int q) const {
    if (q < 0 || q + 1 >= int(dim_offsets_.size())) return num_cells();
    return dim_offsets_[q];
}

int SimplicialComplex::dim_end(int q) const {
    if (q < 0 || q + 1 >= int(dim_offsets_.size())) return num_cells();
    return dim_offsets_[q + 1];
}

std::optional<CellId> SimplicialComplex::find(const Simplex& s) const {
    auto it = index_.find(s);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

LefschetzComplex::LefschetzComplex(std::vector<int> dims,
                                   std::vector<std::vector<CellId>> facet_lists)
    : dims_(std::move(dims)), facets_(std::move(facet_lists)) {
    if (facets_.size() != dims_.size())
        throw std::invalid_argument("LefschetzComplex: facet list count mismatch");
    cofacets_.resize(dims_.size());
    for (CellId c = 0; c < int(dims_.size()); ++c) {
        if (dims_[c] < 0) throw std::invalid_argument("LefschetzComplex: negative dimension");
        dimension_ = std::max(dimension_, dims_[c]);
        std::sort(facets_[c].begin(), facets_[c].end());
        for (std::size_t i = 0; i + 1 < facets_[c].size(); ++i)
            if (facets_[c][i] == facets_[c][i + 1])
                throw std::invalid_argument("LefschetzComplex: duplicate facet entry");
        for (CellId f : facets_[c]) {
            if (f < 0 || f >= int(dims_.size()))
                throw std::invalid_argument("LefschetzComplex: facet id out of range");
            if (dims_[f] != dims_[c] - 1)
                throw std::invalid_argument(
                    "LefschetzComplex: incidence must drop dimension by one");
            cofacets_[f].push_back(c);
        }
    }
}

std::optional<std::pair<CellId, CellId>> LefschetzComplex::incidence_square_violation() const {
    // sum over rho of kappa(t,rho)*kappa(rho,s) must vanish for all t,s
    for (CellId t = 0; t < num_cells(); ++t) {
        std::unordered_map<CellId, int> parity;
        for (CellId rho : facets_[t])
            for (CellId s : facets_[rho]) parity[s] ^= 1;
        for (auto [s, p] : parity)
            if (p) return std::make_pair(t, s);
    }
    return std::nullopt;
}

LefschetzComplex to_lefschetz(const SimplicialComplex& K) {
    std::vector<int> dims(K.num_cells());
    std::vector<std::vector<CellId>> facets(K.num_cells());
    for (CellId c = 0; c < K.num_cells(); ++c) {
        dims[c] = K.cell_dim(c);
        auto fs = K.cell_facets(c);
        facets[c].assign(fs.begin(), fs.end());
    }
    return LefschetzComplex(std::move(dims), std::move(facets));
}

SimplicialComplex cone(const SimplicialComplex& K, VertexId apex) {
    std::vector<Simplex> cells;
    cells.reserve(2 * K.num_cells() + 1);
    for (const Simplex& s : K.cells()) {
        if (s.has_vertex(apex)) throw std::invalid_argument("cone: apex already used in complex");
        cells.push_back(s);
        cells.push_back(s.joined_with(apex));
    }
    cells.push_back(Simplex({apex}));
    return SimplicialComplex(std::move(cells));
}

} // namespace morsegrad
