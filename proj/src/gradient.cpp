#include "morsegrad/gradient.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "morsegrad/parallel.hpp"

namespace morsegrad {

std::vector<CellId> DiscreteGradient::critical_cells() const {
    std::vector<CellId> out;
    for (CellId c = 0; c < int(partner.size()); ++c)
        if (partner[c] == -1) out.push_back(c);
    return out;
}

std::vector<std::pair<CellId, CellId>> DiscreteGradient::pairs() const {
    std::vector<std::pair<CellId, CellId>> out;
    for (CellId c = 0; c < int(partner.size()); ++c)
        if (partner[c] > c) out.push_back({c, partner[c]});
    return out;
}

int DiscreteGradient::num_pairs() const {
    int n = 0;
    for (CellId c = 0; c < int(partner.size()); ++c)
        if (partner[c] > c) ++n;
    return n;
}

ExpansionIndex default_expansion_index(const Filtration& F, std::span<const CellId> star) {
    // grade of each vertex, looked up through its 0-cell
    std::unordered_map<VertexId, const Grade*> vertex_grade;
    for (CellId c = F.complex.dim_begin(0); c < F.complex.dim_end(0); ++c)
        vertex_grade[F.complex.cell(c).vertices()[0]] = &F.grades[c];

    using Key = std::pair<std::vector<Grade>, const std::vector<VertexId>*>;
    std::vector<std::pair<Key, CellId>> keyed;
    keyed.reserve(star.size());
    for (CellId c : star) {
        std::vector<Grade> gs;
        for (VertexId v : F.complex.cell(c).vertices()) gs.push_back(*vertex_grade.at(v));
        std::sort(gs.begin(), gs.end());
        keyed.push_back({{std::move(gs), &F.complex.cell(c).vertices()}, c});
    }
    std::sort(keyed.begin(), keyed.end(), [&F](const auto& a, const auto& b) {
        int da = F.complex.cell_dim(a.second), db = F.complex.cell_dim(b.second);
        if (da != db) return da < db;
        if (a.first.first != b.first.first) return a.first.first < b.first.first;
        return *a.first.second < *b.first.second;
    });
    ExpansionIndex idx;
    idx.order.reserve(star.size());
    for (auto& [key, c] : keyed) idx.order.push_back(c);
    return idx;
}

namespace {

struct StarLocal {
    std::unordered_map<CellId, int> rank; // position in the expansion index
    std::vector<CellId> by_rank;
    std::vector<char> classified;
    std::vector<int> unclassified_facets; // facets inside the star only
};

} // namespace

LocalExpansion homotopy_expansion(const SimplicialComplex& K, std::span<const CellId> star,
                                  const ExpansionIndex& index) {
    const int n = int(star.size());
    if (n == 0) throw std::invalid_argument("homotopy_expansion: empty lower star");
    if (int(index.order.size()) != n)
        throw std::invalid_argument("homotopy_expansion: index does not cover the star");

    StarLocal L;
    L.by_rank = index.order;
    L.rank.reserve(n);
    for (int r = 0; r < n; ++r)
        if (!L.rank.emplace(index.order[r], r).second)
            throw std::invalid_argument("homotopy_expansion: duplicate cell in index");
    for (CellId c : star)
        if (!L.rank.count(c))
            throw std::invalid_argument("homotopy_expansion: index does not cover the star");

    // the base simplex is the unique minimal cell; everything must be a coface
    CellId base = star[0];
    for (CellId c : star)
        if (K.cell_dim(c) < K.cell_dim(base)) base = c;
    for (CellId c : star)
        if (!K.cell(c).has_face(K.cell(base)))
            throw std::invalid_argument("homotopy_expansion: cells do not form a single lower star");

    L.classified.assign(n, 0);
    L.unclassified_facets.assign(n, 0);
    for (int r = 0; r < n; ++r)
        for (CellId f : K.cell_facets(L.by_rank[r])) {
            auto it = L.rank.find(f);
            if (it != L.rank.end()) {
                ++L.unclassified_facets[r];
                if (it->second >= r)
                    throw std::invalid_argument(
                        "homotopy_expansion: index not compatible with the facet relation");
            }
        }

    LocalExpansion out;
    auto classify = [&](int r) {
        L.classified[r] = 1;
        for (CellId cof : K.cell_cofacets(L.by_rank[r])) {
            auto it = L.rank.find(cof);
            if (it != L.rank.end()) --L.unclassified_facets[it->second];
        }
    };

    if (n == 1) {
        out.critical.push_back(base);
        return out;
    }

    const int base_rank = L.rank.at(base);
    using MinQueue = std::priority_queue<int, std::vector<int>, std::greater<int>>;
    MinQueue ord0, ord1;

    // pair the base with its minimal-index cofacet
    int delta_rank = -1;
    for (CellId cof : K.cell_cofacets(base)) {
        auto it = L.rank.find(cof);
        if (it != L.rank.end() && (delta_rank < 0 || it->second < delta_rank))
            delta_rank = it->second;
    }
    if (delta_rank < 0)
        throw std::invalid_argument("homotopy_expansion: base simplex has no cofacet in the star");
    classify(base_rank);
    classify(delta_rank);
    out.pairs.push_back({base, L.by_rank[delta_rank]});

    for (int r = 0; r < n; ++r) {
        if (L.classified[r]) continue;
        if (L.unclassified_facets[r] == 0) ord0.push(r);
        if (L.unclassified_facets[r] == 1 && r > delta_rank) ord1.push(r);
    }

    auto enqueue_ready = [&](int threshold_a, int threshold_b) {
        // cells with exactly one unclassified facet whose index exceeds one of
        // the just-classified cells become candidates
        for (int r = 0; r < n; ++r)
            if (!L.classified[r] && L.unclassified_facets[r] == 1 &&
                (r > threshold_a || r > threshold_b))
                ord1.push(r);
    };

    while (!ord1.empty() || !ord0.empty()) {
        while (!ord1.empty()) {
            int a = ord1.top();
            ord1.pop();
            if (L.classified[a]) continue;
            if (L.unclassified_facets[a] == 0) {
                ord0.push(a);
                continue;
            }
            // exactly one unclassified facet left inside the star
            int lam = -1;
            for (CellId f : K.cell_facets(L.by_rank[a])) {
                auto it = L.rank.find(f);
                if (it != L.rank.end() && !L.classified[it->second]) {
                    lam = it->second;
                    break;
                }
            }
            classify(a);
            classify(lam);
            out.pairs.push_back({L.by_rank[lam], L.by_rank[a]});
            enqueue_ready(a, lam);
        }
        while (!ord0.empty()) {
            int g = ord0.top();
            ord0.pop();
            if (L.classified[g]) continue;
            classify(g);
            out.critical.push_back(L.by_rank[g]);
            enqueue_ready(g, n); // only tau > gamma here
            break;
        }
    }

    for (int r = 0; r < n; ++r)
        if (!L.classified[r])
            throw std::logic_error("homotopy_expansion: cell left unclassified in " +
                                   K.cell(L.by_rank[r]).to_string());
    std::sort(out.critical.begin(), out.critical.end());
    std::sort(out.pairs.begin(), out.pairs.end());
    return out;
}

DiscreteGradient compute_gradient(const Filtration& F, int threads) {
    if (!F.max_extended)
        throw std::invalid_argument("compute_gradient requires a max-extension filtration");

    const std::vector<Grade> grades = image_grades(F);
    std::vector<std::vector<CellId>> stars(grades.size());
    std::vector<char> covered(F.complex.num_cells(), 0);
    for (std::size_t i = 0; i < grades.size(); ++i) {
        auto s = primary_simplex(F, grades[i]);
        if (!s) throw std::logic_error("compute_gradient: no primary simplex at grade " +
                                       grade_to_string(grades[i]));
        stars[i] = lower_star(F, *s);
        for (CellId c : stars[i]) {
            if (covered[c])
                throw std::logic_error("compute_gradient: lower stars do not partition the complex");
            covered[c] = 1;
        }
    }
    for (CellId c = 0; c < F.complex.num_cells(); ++c)
        if (!covered[c])
            throw std::logic_error("compute_gradient: cell not covered by any lower star");

    DiscreteGradient V;
    V.partner.assign(F.complex.num_cells(), -1);
    // stars are disjoint, so workers write to disjoint slots
    parallel_for(int(grades.size()), threads, [&](int i) {
        ExpansionIndex idx = default_expansion_index(F, stars[i]);
        LocalExpansion local = homotopy_expansion(F.complex, stars[i], idx);
        for (auto [sigma, tau] : local.pairs) {
            V.partner[sigma] = tau;
            V.partner[tau] = sigma;
        }
    });
    return V;
}

GradientVerdict validate_gradient(const SimplicialComplex& K, const DiscreteGradient& V) {
    GradientVerdict verdict;
    if (int(V.partner.size()) != K.num_cells()) {
        verdict.valid = false;
        verdict.message = "partner vector size does not match the complex";
        return verdict;
    }
    for (CellId c = 0; c < K.num_cells(); ++c) {
        CellId p = V.partner[c];
        if (p == -1) continue;
        if (p < 0 || p >= K.num_cells() || V.partner[p] != c) {
            verdict.valid = false;
            verdict.message = "matching is not an involution at cell " + K.cell(c).to_string();
            return verdict;
        }
        if (K.cell_dim(p) == K.cell_dim(c) + 1) {
            if (!K.cell(p).has_face(K.cell(c))) {
                verdict.valid = false;
                verdict.message = "paired cells are not incident: " + K.cell(c).to_string() +
                                  ", " + K.cell(p).to_string();
                return verdict;
            }
        } else if (K.cell_dim(p) != K.cell_dim(c) - 1) {
            verdict.valid = false;
            verdict.message = "paired cells do not differ by one dimension: " +
                              K.cell(c).to_string() + ", " + K.cell(p).to_string();
            return verdict;
        }
    }

    // modified Hasse diagram: tau -> facet, reversed on matched pairs
    std::vector<std::vector<CellId>> succ(K.num_cells());
    std::vector<int> indeg(K.num_cells(), 0);
    for (CellId t = 0; t < K.num_cells(); ++t) {
        for (CellId f : K.cell_facets(t)) {
            if (V.partner[f] == t) {
                succ[f].push_back(t);
                ++indeg[t];
            } else {
                succ[t].push_back(f);
                ++indeg[f];
            }
        }
    }
    std::vector<CellId> ready;
    for (CellId c = 0; c < K.num_cells(); ++c)
        if (indeg[c] == 0) ready.push_back(c);
    int removed = 0;
    while (!ready.empty()) {
        CellId c = ready.back();
        ready.pop_back();
        ++removed;
        for (CellId s : succ[c])
            if (--indeg[s] == 0) ready.push_back(s);
    }
    if (removed == K.num_cells()) return verdict;

    verdict.valid = false;
    verdict.message = "closed V-path found";
    // walk inside the remaining subgraph until a node repeats
    CellId start = -1;
    for (CellId c = 0; c < K.num_cells(); ++c)
        if (indeg[c] > 0) {
            start = c;
            break;
        }
    std::vector<int> visited_at(K.num_cells(), -1);
    std::vector<CellId> walk;
    CellId cur = start;
    while (visited_at[cur] == -1) {
        visited_at[cur] = int(walk.size());
        walk.push_back(cur);
        for (CellId s : succ[cur])
            if (indeg[s] > 0) {
                cur = s;
                break;
            }
    }
    verdict.cycle.assign(walk.begin() + visited_at[cur], walk.end());
    return verdict;
}

ConsistencyVerdict check_consistency(const Filtration& F, const DiscreteGradient& V) {
    ConsistencyVerdict verdict;
    for (CellId c = 0; c < int(V.partner.size()); ++c) {
        CellId p = V.partner[c];
        if (p > c && F.grades[c] != F.grades[p]) {
            verdict.consistent = false;
            verdict.witness = std::make_pair(c, p);
            return verdict;
        }
    }
    return verdict;
}

namespace {

void extend_vpath(const SimplicialComplex& K, const DiscreteGradient& V, const CellMask* mask,
                  VPath& path, std::vector<VPath>& out, int depth) {
    if (depth > 2 * K.num_cells() + 2)
        throw std::logic_error("trace_vpaths: path exceeds cell count; gradient is not acyclic");
    CellId sigma = path.back();
    CellId tau = V.partner[sigma];
    bool can_step = tau != -1 && K.cell_dim(tau) == K.cell_dim(sigma) + 1 &&
                    (!mask || (*mask)[tau]);
    if (can_step) {
        bool extended = false;
        for (CellId f : K.cell_facets(tau)) {
            if (f == sigma || (mask && !(*mask)[f])) continue;
            path.push_back(tau);
            path.push_back(f);
            extend_vpath(K, V, mask, path, out, depth + 1);
            path.pop_back();
            path.pop_back();
            extended = true;
        }
        if (extended) return;
    }
    out.push_back(path);
}

} // namespace

std::vector<VPath> trace_vpaths(const SimplicialComplex& K, const DiscreteGradient& V,
                                CellId start, const CellMask* restrict_to) {
    if (start < 0 || start >= K.num_cells())
        throw std::invalid_argument("trace_vpaths: start cell not in complex");
    if (restrict_to && !(*restrict_to)[start]) return {};
    std::vector<VPath> out;
    VPath path{start};
    extend_vpath(K, V, restrict_to, path, out, 0);
    return out;
}

} // namespace morsegrad
