#include "morsegrad/filtration.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace morsegrad {

std::optional<std::tuple<int, VertexId, VertexId>> component_collision(const VertexFunction& f0) {
    for (int i = 0; i < f0.params; ++i) {
        std::map<int, VertexId> seen;
        for (const auto& [v, g] : f0.values) {
            auto [it, fresh] = seen.emplace(g[i], v);
            if (!fresh) return std::make_tuple(i, it->second, v);
        }
    }
    return std::nullopt;
}

std::vector<int> tiebreak_components(VertexFunction& f0) {
    std::vector<int> touched;
    for (int i = 0; i < f0.params; ++i) {
        std::vector<std::pair<int, VertexId>> order; // (value, vertex), vertex id breaks ties
        for (const auto& [v, g] : f0.values) order.emplace_back(g[i], v);
        std::sort(order.begin(), order.end());
        bool collided = false;
        for (std::size_t k = 0; k + 1 < order.size(); ++k)
            collided |= order[k].first == order[k + 1].first;
        for (std::size_t k = 0; k < order.size(); ++k) f0.values[order[k].second][i] = int(k);
        if (collided) touched.push_back(i);
    }
    return touched;
}

Filtration extend_max(const SimplicialComplex& K, const VertexFunction& f0) {
    if (auto hit = component_collision(f0)) {
        auto [axis, v, w] = *hit;
        throw std::invalid_argument("vertex function component " + std::to_string(axis) +
                                    " is not injective: vertices " + std::to_string(v) + " and " +
                                    std::to_string(w) + " collide");
    }
    Filtration F;
    F.params = f0.params;
    F.max_extended = true;
    F.grades.resize(K.num_cells());
    for (CellId c = 0; c < K.num_cells(); ++c) {
        Grade g(f0.params, 0);
        bool first = true;
        for (VertexId v : K.cell(c).vertices()) {
            auto it = f0.values.find(v);
            if (it == f0.values.end())
                throw std::invalid_argument("no grade given for vertex " + std::to_string(v));
            g = first ? it->second : grade_join(g, it->second);
            first = false;
        }
        F.grades[c] = std::move(g);
    }
    F.complex = K;
    return F;
}

Filtration explicit_filtration(SimplicialComplex K, std::vector<Grade> grades, int params) {
    if (int(grades.size()) != K.num_cells())
        throw std::invalid_argument("explicit_filtration: one grade per cell required");
    for (CellId c = 0; c < K.num_cells(); ++c) {
        if (int(grades[c].size()) != params)
            throw std::invalid_argument("explicit_filtration: grade arity mismatch at cell " +
                                        K.cell(c).to_string());
        for (CellId f : K.cell_facets(c))
            if (!grade_leq(grades[f], grades[c]))
                throw std::invalid_argument("explicit_filtration: grades not monotone: " +
                                            K.cell(f).to_string() + " enters after " +
                                            K.cell(c).to_string());
    }
    Filtration F;
    F.complex = std::move(K);
    F.grades = std::move(grades);
    F.params = params;
    F.max_extended = false;
    return F;
}

CellMask sublevel_mask(const Filtration& F, const Grade& u) {
    CellMask mask(F.complex.num_cells(), 0);
    for (CellId c = 0; c < F.complex.num_cells(); ++c) mask[c] = grade_leq(F.grades[c], u);
    return mask;
}

SimplicialComplex complex_from_mask(const SimplicialComplex& K, const CellMask& mask) {
    std::vector<Simplex> cells;
    for (CellId c = 0; c < K.num_cells(); ++c)
        if (mask[c]) cells.push_back(K.cell(c));
    return SimplicialComplex(std::move(cells));
}

SimplicialComplex sublevel(const Filtration& F, const Grade& u) {
    return complex_from_mask(F.complex, sublevel_mask(F, u));
}

CellMask union_of_predecessors_mask(const Filtration& F, const Grade& u) {
    CellMask mask(F.complex.num_cells(), 0);
    for (int i = 0; i < F.params; ++i) {
        if (u[i] <= 0) continue; // that predecessor is empty
        Grade pred = u;
        --pred[i];
        for (CellId c = 0; c < F.complex.num_cells(); ++c)
            if (!mask[c] && grade_leq(F.grades[c], pred)) mask[c] = 1;
    }
    return mask;
}

SimplicialComplex union_of_predecessors(const Filtration& F, const Grade& u) {
    return complex_from_mask(F.complex, union_of_predecessors_mask(F, u));
}

std::vector<CellId> level_set(const Filtration& F, const Grade& u) {
    std::vector<CellId> out;
    for (CellId c = 0; c < F.complex.num_cells(); ++c)
        if (F.grades[c] == u) out.push_back(c);
    return out;
}

std::vector<CellId> lower_star(const Filtration& F, CellId s) {
    if (s < 0 || s >= F.complex.num_cells())
        throw std::invalid_argument("lower_star: cell not in complex");
    const Grade& base = F.grades[s];
    // cofaces with grade <= base; intermediate faces are in the star too by
    // monotonicity, so pruned BFS over cofacets is exhaustive
    std::vector<CellId> out{s};
    std::vector<char> seen(F.complex.num_cells(), 0);
    seen[s] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (CellId cof : F.complex.cell_cofacets(out[head])) {
            if (!seen[cof] && grade_leq(F.grades[cof], base)) {
                seen[cof] = 1;
                out.push_back(cof);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<CellId> primary_simplex(const Filtration& F, const Grade& u) {
    if (!F.max_extended)
        throw std::logic_error("primary_simplex requires a max-extension filtration");
    // the primary simplex is spanned by the vertices realizing each coordinate
    std::set<VertexId> span;
    for (int i = 0; i < F.params; ++i) {
        std::optional<VertexId> realizer;
        for (CellId c = F.complex.dim_begin(0); c < F.complex.dim_end(0); ++c) {
            if (F.grades[c][i] == u[i]) {
                realizer = F.complex.cell(c).vertices()[0];
                break; // unique by componentwise injectivity
            }
        }
        if (!realizer) return std::nullopt; // u_i not a vertex value => u not in the image
        span.insert(*realizer);
    }
    auto id = F.complex.find(Simplex(std::vector<VertexId>(span.begin(), span.end())));
    if (!id || F.grades[*id] != u) return std::nullopt;
    return id;
}

GradeGrid grade_grid(const Filtration& F) {
    std::vector<std::vector<int>> axes(F.params);
    for (const Grade& g : F.grades)
        for (int i = 0; i < F.params; ++i) axes[i].push_back(g[i]);
    for (auto& axis : axes) {
        std::sort(axis.begin(), axis.end());
        axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
        if (axis.empty()) axis.push_back(0); // empty complex still gets a grid point
    }
    return GradeGrid(std::move(axes));
}

std::vector<Grade> compressed_grades(const Filtration& F, const GradeGrid& grid) {
    std::vector<Grade> out;
    out.reserve(F.grades.size());
    for (const Grade& g : F.grades) out.push_back(grid.compress(g));
    return out;
}

std::vector<Grade> image_grades(const Filtration& F) {
    std::vector<Grade> out = F.grades;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace morsegrad
