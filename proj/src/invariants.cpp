#include "morsegrad/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace morsegrad {

namespace {

template <CellComplexLike C>
std::vector<CellId> cells_of_dim(const C& K, int q) {
    std::vector<CellId> out;
    for (CellId c = 0; c < K.num_cells(); ++c)
        if (K.cell_dim(c) == q) out.push_back(c);
    return out;
}

// sublevel mask in compressed coordinates
CellMask mask_leq(const std::vector<Grade>& compressed, const Grade& u, int ncells) {
    CellMask mask(ncells, 0);
    for (int c = 0; c < ncells; ++c) mask[c] = grade_leq(compressed[c], u);
    return mask;
}

} // namespace

template <CellComplexLike C>
PersistenceModule build_module(const C& K, const std::vector<Grade>& grades, const GradeGrid& grid,
                               int q) {
    PersistenceModule P;
    P.degree = q;
    P.grid = grid;
    std::vector<Grade> compressed(K.num_cells());
    for (CellId c = 0; c < K.num_cells(); ++c) compressed[c] = grid.compress(grades[c]);

    const std::vector<CellId> q_cells = cells_of_dim(K, q);
    const std::vector<CellId> q1_cells = cells_of_dim(K, q + 1);

    std::vector<HomologyBasis> bases;
    bases.reserve(grid.size());
    P.dims.resize(grid.size());
    P.reps.resize(grid.size());
    for (int idx = 0; idx < grid.size(); ++idx) {
        Grade u = grid.grade_at(idx);
        CellMask present = mask_leq(compressed, u, K.num_cells());
        bases.emplace_back(K, q_cells, q1_cells, present, q);
        P.dims[idx] = bases.back().dim();
        P.reps[idx] = bases.back().reps();
    }

    P.edge_maps.assign(grid.params(), {});
    for (int axis = 0; axis < grid.params(); ++axis) {
        P.edge_maps[axis].resize(grid.size());
        for (int idx = 0; idx < grid.size(); ++idx) {
            Grade u = grid.grade_at(idx);
            if (u[axis] + 1 >= grid.axis_size(axis)) continue;
            Grade v = u;
            ++v[axis];
            P.edge_maps[axis][idx] = induced_map(bases[idx], bases[grid.index(v)]);
        }
    }
    return P;
}

template PersistenceModule build_module<SimplicialComplex>(const SimplicialComplex&,
                                                           const std::vector<Grade>&,
                                                           const GradeGrid&, int);
template PersistenceModule build_module<LefschetzComplex>(const LefschetzComplex&,
                                                          const std::vector<Grade>&,
                                                          const GradeGrid&, int);

PersistenceModule build_module(const Filtration& F, int q) {
    return build_module(F.complex, F.grades, grade_grid(F), q);
}

PersistenceModule build_module(const MorseComplex& M, int q) {
    // evaluated over its own grade grid; callers wanting the grid of the
    // original filtration should pass it explicitly
    std::vector<std::vector<int>> axes(M.params);
    for (const Grade& g : M.grades)
        for (int i = 0; i < M.params; ++i) axes[i].push_back(g[i]);
    for (auto& a : axes) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        if (a.empty()) a.push_back(0);
    }
    return build_module(M.complex, M.grades, GradeGrid(std::move(axes)), q);
}

int rank_invariant(const PersistenceModule& P, const Grade& u, const Grade& v) {
    if (!grade_leq(u, v)) throw std::invalid_argument("rank_invariant: grades not comparable");
    F2Matrix m = F2Matrix::identity(P.dims[P.grid.index(u)]);
    Grade cur = u;
    for (int axis = 0; axis < P.grid.params(); ++axis) {
        while (cur[axis] < v[axis]) {
            m = P.edge_map(axis, P.grid.index(cur)) * m;
            ++cur[axis];
        }
    }
    return m.rank();
}

int BettiTables::value(int i, int q, const Grade& u) const {
    if (q < 0 || q >= int(tables[i].size())) return 0;
    auto it = tables[i][q].find(u);
    return it == tables[i][q].end() ? 0 : it->second;
}

void BettiTables::set(int i, int q, const Grade& u, int v) {
    if (v != 0) tables[i][q][u] = v;
}

BettiTables betti_tables_n1(const std::vector<PersistenceModule>& modules) {
    if (modules.empty() || modules.front().grid.params() != 1)
        throw std::invalid_argument("betti_tables_n1: one-parameter modules required");
    BettiTables out;
    out.params = 1;
    out.max_degree = int(modules.size()) - 1;
    for (auto& t : out.tables) t.resize(modules.size());
    for (int q = 0; q < int(modules.size()); ++q) {
        const PersistenceModule& P = modules[q];
        for (int idx = 0; idx < P.grid.size(); ++idx) {
            Grade u = P.grid.grade_at(idx);
            int du = P.dims[idx];
            int dprev = 0, rank = 0;
            if (u[0] > 0) {
                Grade prev = u;
                --prev[0];
                dprev = P.dims[P.grid.index(prev)];
                rank = P.edge_map(0, P.grid.index(prev)).rank();
            }
            out.set(0, q, P.grid.decompress(u), du - rank);
            out.set(1, q, P.grid.decompress(u), dprev - rank);
        }
    }
    return out;
}

namespace {

// [top; bottom] stacked vertically
F2Matrix stack_rows(const F2Matrix& top, const F2Matrix& bottom) {
    F2Matrix out(top.rows() + bottom.rows(), top.cols());
    for (int r = 0; r < top.rows(); ++r) out.row(r) = top.row(r);
    for (int r = 0; r < bottom.rows(); ++r) out.row(top.rows() + r) = bottom.row(r);
    return out;
}

// [left | right] side by side
F2Matrix concat_cols(const F2Matrix& left, const F2Matrix& right) {
    F2Matrix out(left.rows(), left.cols() + right.cols());
    for (int r = 0; r < left.rows(); ++r) {
        for (int c : left.row(r).set_bits()) out.set(r, c);
        for (int c : right.row(r).set_bits()) out.set(r, left.cols() + c);
    }
    return out;
}

} // namespace

BettiTables betti_tables_n2(const std::vector<PersistenceModule>& modules) {
    if (modules.empty() || modules.front().grid.params() != 2)
        throw std::invalid_argument("betti_tables_n2: two-parameter modules required");
    BettiTables out;
    out.params = 2;
    out.max_degree = int(modules.size()) - 1;
    for (auto& t : out.tables) t.resize(modules.size());

    for (int q = 0; q < int(modules.size()); ++q) {
        const PersistenceModule& P = modules[q];
        const GradeGrid& grid = P.grid;
        for (int idx = 0; idx < grid.size(); ++idx) {
            Grade u = grid.grade_at(idx);
            const bool has_x = u[0] > 0, has_y = u[1] > 0;
            Grade x = u, y = u, z = u;
            if (has_x) --x[0];
            if (has_y) --y[1];
            if (has_x && has_y) {
                --z[0];
                --z[1];
            }
            int du = P.dims[idx];
            int dx = has_x ? P.dims[grid.index(x)] : 0;
            int dy = has_y ? P.dims[grid.index(y)] : 0;
            int dz = (has_x && has_y) ? P.dims[grid.index(z)] : 0;

            // mer: V_x + V_y -> V_u (the sign difference vanishes over F2)
            F2Matrix map_xu = has_x ? P.edge_map(0, grid.index(x)) : F2Matrix(du, 0);
            F2Matrix map_yu = has_y ? P.edge_map(1, grid.index(y)) : F2Matrix(du, 0);
            F2Matrix mer = concat_cols(map_xu, map_yu);

            // spl: V_z -> V_x + V_y
            F2Matrix map_zx = (has_x && has_y) ? P.edge_map(1, grid.index(z)) : F2Matrix(dx, 0);
            F2Matrix map_zy = (has_x && has_y) ? P.edge_map(0, grid.index(z)) : F2Matrix(dy, 0);
            F2Matrix spl = stack_rows(map_zx, map_zy);

            if (!(mer * spl).is_zero())
                throw std::logic_error("betti_tables_n2: im(spl) not contained in ker(mer)");

            int rank_mer = mer.rank();
            int rank_spl = spl.rank();
            Grade orig = grid.decompress(u);
            out.set(0, q, orig, du - rank_mer);
            out.set(1, q, orig, (dx + dy - rank_mer) - rank_spl);
            out.set(2, q, orig, dz - rank_spl);
        }
    }
    return out;
}

namespace {

template <CellComplexLike C>
PersistencePairs reduce_pairs(const C& K, const std::vector<Grade>& grades) {
    const int n = K.num_cells();
    // filtration order: by grade, then the deterministic cell order
    std::vector<CellId> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](CellId a, CellId b) {
        if (grades[a] != grades[b]) return grades[a] < grades[b];
        if (K.cell_dim(a) != K.cell_dim(b)) return K.cell_dim(a) < K.cell_dim(b);
        return a < b;
    });
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    std::vector<BitVector> columns(n, BitVector(n));
    for (int j = 0; j < n; ++j)
        for (CellId f : K.cell_facets(order[j])) columns[j].set(pos[f]);

    std::vector<int> pivot_col(n, -1);
    std::vector<int> paired_with(n, -1);
    for (int j = 0; j < n; ++j) {
        int low = columns[j].highest_set();
        while (low >= 0 && pivot_col[low] >= 0) {
            columns[j].xor_with(columns[pivot_col[low]]);
            low = columns[j].highest_set();
        }
        if (low >= 0) {
            pivot_col[low] = j;
            paired_with[low] = j;
            paired_with[j] = low;
        }
    }

    PersistencePairs out;
    for (int i = 0; i < n; ++i) {
        if (paired_with[i] > i) {
            const Grade& birth = grades[order[i]];
            const Grade& death = grades[order[paired_with[i]]];
            if (birth == death) continue; // instant pair, invisible to the module
            out.pairs.push_back({birth, death, K.cell_dim(order[i]), order[i],
                                 order[paired_with[i]]});
        } else if (paired_with[i] == -1) {
            out.essentials.push_back({grades[order[i]], K.cell_dim(order[i]), order[i]});
        }
    }
    return out;
}

} // namespace

PersistencePairs persistence_pairs_n1(const Filtration& F) {
    if (F.params != 1)
        throw std::invalid_argument("persistence_pairs_n1: one-parameter filtration required");
    return reduce_pairs(F.complex, F.grades);
}

PersistencePairs persistence_pairs_n1(const MorseComplex& M) {
    if (M.params != 1)
        throw std::invalid_argument("persistence_pairs_n1: one-parameter filtration required");
    return reduce_pairs(M.complex, M.grades);
}

InclusionRanks inclusion_ranks(const Filtration& F, const Grade& u, int q) {
    const SimplicialComplex& K = F.complex;
    std::vector<CellId> q_cells, q1_cells;
    for (CellId c = 0; c < K.num_cells(); ++c) {
        if (K.cell_dim(c) == q) q_cells.push_back(c);
        if (K.cell_dim(c) == q + 1) q1_cells.push_back(c);
    }
    HomologyBasis target(K, q_cells, q1_cells, sublevel_mask(F, u), q);
    HomologyBasis source(K, q_cells, q1_cells, union_of_predecessors_mask(F, u), q);
    int rank = induced_map(source, target).rank();
    return InclusionRanks{source.dim() - rank, target.dim() - rank};
}

} // namespace morsegrad
