#ifndef MORSEGRAD_TEST_ORACLES_HPP
#define MORSEGRAD_TEST_ORACLES_HPP

// Test-only reference implementations, independent of the library's linear
// algebra: dense byte-matrix elimination over F2, dense homology of graded
// complexes, and a grade-by-grade minimal free presentation for Betti tables.
// Everything here trades speed for obviousness; keep instances small.

#include <algorithm>
#include <array>
#include <map>
#include <stdexcept>
#include <vector>

namespace oracle {

struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<std::vector<unsigned char>> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(r, std::vector<unsigned char>(c, 0)) {}
};

inline int dense_rank(DenseMatrix m) {
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.a[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m.a[rank], m.a[pivot]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && m.a[r][col])
                for (int c = col; c < m.cols; ++c) m.a[r][c] ^= m.a[rank][c];
        ++rank;
    }
    return rank;
}

// Basis of the null space as coordinate vectors of length cols.
inline std::vector<std::vector<unsigned char>> dense_kernel(DenseMatrix m) {
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < m.cols && rank < m.rows; ++col) {
        int pivot = -1;
        for (int r = rank; r < m.rows; ++r)
            if (m.a[r][col]) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m.a[rank], m.a[pivot]);
        for (int r = 0; r < m.rows; ++r)
            if (r != rank && m.a[r][col])
                for (int c = 0; c < m.cols; ++c) m.a[r][c] ^= m.a[rank][c];
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<unsigned char> is_pivot(m.cols, 0);
    for (int c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<unsigned char>> kernel;
    for (int free_col = 0; free_col < m.cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<unsigned char> v(m.cols, 0);
        v[free_col] = 1;
        for (int r = 0; r < rank; ++r)
            if (m.a[r][free_col]) v[pivot_col[r]] = 1;
        kernel.push_back(std::move(v));
    }
    return kernel;
}

// Plain description of a graded cell complex, decoupled from library types.
struct GradedComplex {
    int params = 1;
    std::vector<int> dims;
    std::vector<std::vector<int>> facets;
    std::vector<std::vector<int>> grades;
};

inline bool leq(const std::vector<int>& u, const std::vector<int>& v) {
    for (std::size_t i = 0; i < u.size(); ++i)
        if (u[i] > v[i]) return false;
    return true;
}

// Relative homology dims of (present, killed) by dense elimination.
inline std::vector<int> dense_relative_homology(const GradedComplex& K,
                                                const std::vector<char>& present,
                                                const std::vector<char>& killed) {
    int top = 0;
    for (int d : K.dims) top = std::max(top, d);
    std::vector<int> counts(top + 2, 0), ranks(top + 2, 0);
    for (int q = 0; q <= top + 1; ++q) {
        std::vector<int> rows, cols;
        std::vector<int> row_of(K.dims.size(), -1);
        for (int c = 0; c < int(K.dims.size()); ++c) {
            if (!present[c] || killed[c]) continue;
            if (K.dims[c] == q) cols.push_back(c);
            if (K.dims[c] == q - 1) {
                row_of[c] = int(rows.size());
                rows.push_back(c);
            }
        }
        DenseMatrix m(int(rows.size()), int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j)
            for (int f : K.facets[cols[j]])
                if (row_of[f] >= 0) m.a[row_of[f]][j] ^= 1;
        if (q <= top) counts[q] = int(cols.size());
        ranks[q] = dense_rank(std::move(m));
    }
    std::vector<int> out(top + 1, 0);
    for (int q = 0; q <= top; ++q) out[q] = counts[q] - ranks[q] - ranks[q + 1];
    return out;
}

inline std::vector<int> dense_homology(const GradedComplex& K, const std::vector<char>& present) {
    return dense_relative_homology(K, present, std::vector<char>(K.dims.size(), 0));
}

namespace detail {

inline int linear_index(const std::vector<int>& shape, const std::vector<int>& g) {
    int idx = 0;
    for (std::size_t i = 0; i < shape.size(); ++i) idx = idx * shape[i] + g[i];
    return idx;
}

inline std::vector<int> grid_grade(const std::vector<int>& shape, int idx) {
    std::vector<int> g(shape.size());
    for (int i = int(shape.size()) - 1; i >= 0; --i) {
        g[i] = idx % shape[i];
        idx /= shape[i];
    }
    return g;
}

// Row echelon kept sorted by pivot, every stored row has its pivot as its
// lowest nonzero coordinate; a single increasing-pivot reduction pass is then
// exact.
struct Echelon {
    struct Row {
        int pivot;
        std::vector<unsigned char> vec;
    };
    std::vector<Row> rows;

    void reduce(std::vector<unsigned char>& v) const {
        for (const Row& r : rows)
            if (v[r.pivot])
                for (std::size_t c = 0; c < v.size(); ++c) v[c] ^= r.vec[c];
    }

    // returns true if v was independent (and absorbs it)
    bool add(std::vector<unsigned char> v) {
        reduce(v);
        int p = -1;
        for (int i = 0; i < int(v.size()); ++i)
            if (v[i]) {
                p = i;
                break;
            }
        if (p < 0) return false;
        auto it = std::lower_bound(rows.begin(), rows.end(), p,
                                   [](const Row& r, int piv) { return r.pivot < piv; });
        rows.insert(it, Row{p, std::move(v)});
        return true;
    }

    bool contains(std::vector<unsigned char> v) const {
        reduce(v);
        for (unsigned char c : v)
            if (c) return false;
        return true;
    }

    int rank() const { return int(rows.size()); }
};

} // namespace detail

// ------------------------------------------------------------------
// Dense persistence module over the compressed grade grid of K.

struct DenseModule {
    std::vector<int> shape;
    std::vector<std::vector<int>> axes;
    std::vector<int> dims;                                       // per grid index
    std::vector<std::vector<std::vector<unsigned char>>> basis;  // reps per grid index
    std::vector<std::vector<DenseMatrix>> edge;                  // [axis][src index]
};

// Homology of every sublevel plus inclusion maps along grid edges, all dense.
// Induced maps are found by solving [boundaries | reps | z] x = 0 at the
// target grade: the rep block of a dependency involving z is the unique
// coordinate vector of z.
inline DenseModule dense_module(const GradedComplex& K, int degree) {
    DenseModule M;
    M.axes.resize(K.params);
    for (const auto& g : K.grades)
        for (int i = 0; i < K.params; ++i) M.axes[i].push_back(g[i]);
    for (auto& a : M.axes) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        if (a.empty()) a.push_back(0);
        M.shape.push_back(int(a.size()));
    }
    int total = 1;
    for (int s : M.shape) total *= s;

    std::vector<std::vector<int>> comp_grades(K.grades.size(), std::vector<int>(K.params));
    for (std::size_t c = 0; c < K.grades.size(); ++c)
        for (int i = 0; i < K.params; ++i) {
            const auto& axis = M.axes[i];
            comp_grades[c][i] =
                int(std::lower_bound(axis.begin(), axis.end(), K.grades[c][i]) - axis.begin());
        }

    std::vector<int> q_cells, q1_cells, qm1_cells;
    for (int c = 0; c < int(K.dims.size()); ++c) {
        if (K.dims[c] == degree) q_cells.push_back(c);
        if (K.dims[c] == degree + 1) q1_cells.push_back(c);
        if (K.dims[c] == degree - 1) qm1_cells.push_back(c);
    }
    std::vector<int> coord_of(K.dims.size(), -1), row_of(K.dims.size(), -1);
    for (int i = 0; i < int(q_cells.size()); ++i) coord_of[q_cells[i]] = i;
    for (int i = 0; i < int(qm1_cells.size()); ++i) row_of[qm1_cells[i]] = i;
    const int width = int(q_cells.size());

    std::vector<std::vector<std::vector<unsigned char>>> boundary_cols(total);
    M.dims.resize(total);
    M.basis.resize(total);

    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> u = detail::grid_grade(M.shape, idx);
        std::vector<char> present(K.dims.size(), 0);
        for (int c = 0; c < int(K.dims.size()); ++c) present[c] = leq(comp_grades[c], u);

        detail::Echelon quotient;
        for (int c : q1_cells) {
            if (!present[c]) continue;
            std::vector<unsigned char> b(width, 0);
            for (int f : K.facets[c]) b[coord_of[f]] ^= 1;
            boundary_cols[idx].push_back(b);
            quotient.add(std::move(b));
        }
        std::vector<int> cols;
        for (int c : q_cells)
            if (present[c]) cols.push_back(c);
        DenseMatrix d(int(qm1_cells.size()), int(cols.size()));
        for (int j = 0; j < int(cols.size()); ++j)
            for (int f : K.facets[cols[j]])
                if (row_of[f] >= 0) d.a[row_of[f]][j] ^= 1;
        for (const auto& k : dense_kernel(std::move(d))) {
            std::vector<unsigned char> z(width, 0);
            for (int j = 0; j < int(cols.size()); ++j)
                if (k[j]) z[coord_of[cols[j]]] = 1;
            if (quotient.add(z)) M.basis[idx].push_back(std::move(z));
        }
        M.dims[idx] = int(M.basis[idx].size());
    }

    auto decompose = [&](int idx, const std::vector<unsigned char>& z) {
        const auto& bnd = boundary_cols[idx];
        const auto& reps = M.basis[idx];
        const int nb = int(bnd.size()), nr = int(reps.size());
        DenseMatrix S(width, nb + nr + 1);
        for (int j = 0; j < nb; ++j)
            for (int r = 0; r < width; ++r) S.a[r][j] = bnd[j][r];
        for (int j = 0; j < nr; ++j)
            for (int r = 0; r < width; ++r) S.a[r][nb + j] = reps[j][r];
        for (int r = 0; r < width; ++r) S.a[r][nb + nr] = z[r];
        for (const auto& k : dense_kernel(std::move(S))) {
            if (!k[nb + nr]) continue;
            std::vector<unsigned char> tag(nr, 0);
            for (int j = 0; j < nr; ++j) tag[j] = k[nb + j];
            return tag;
        }
        throw std::logic_error("oracle: chain is not a cycle of the target subcomplex");
    };

    M.edge.assign(K.params, std::vector<DenseMatrix>(total));
    for (int axis = 0; axis < K.params; ++axis) {
        for (int idx = 0; idx < total; ++idx) {
            std::vector<int> u = detail::grid_grade(M.shape, idx);
            if (u[axis] + 1 >= M.shape[axis]) continue;
            std::vector<int> v = u;
            ++v[axis];
            int tgt = detail::linear_index(M.shape, v);
            DenseMatrix map(M.dims[tgt], M.dims[idx]);
            for (int j = 0; j < M.dims[idx]; ++j) {
                auto tag = decompose(tgt, M.basis[idx][j]);
                for (int i = 0; i < M.dims[tgt]; ++i) map.a[i][j] = tag[i];
            }
            M.edge[axis][idx] = std::move(map);
        }
    }
    return M;
}

// ------------------------------------------------------------------
// Minimal free presentation of a dense module, built grade by grade in a
// linear extension of the grid order. xi_0 counts new generators, xi_1 new
// relations, xi_2 new syzygies among the relations. The Hilbert-function
// identity dim V_u = sum_{w <= u} (xi0 - xi1 + xi2)(w) is asserted on the
// way out.

struct XiTables {
    std::array<std::map<int, int>, 3> xi; // [table][grid index] -> value

    int value(int table, int idx) const {
        auto it = xi[table].find(idx);
        return it == xi[table].end() ? 0 : it->second;
    }
};

inline XiTables presentation_betti(const DenseModule& M) {
    const int nparams = int(M.shape.size());
    int total = 1;
    for (int s : M.shape) total *= s;

    struct Gen {
        std::vector<int> birth;
        std::vector<std::vector<unsigned char>> push; // image at every grid index >= birth
    };
    std::vector<Gen> gens;
    XiTables out;

    auto apply_edge = [&](const DenseMatrix& m, const std::vector<unsigned char>& v) {
        std::vector<unsigned char> w(m.rows, 0);
        for (int i = 0; i < m.rows; ++i) {
            unsigned char acc = 0;
            for (int j = 0; j < m.cols; ++j) acc ^= m.a[i][j] & v[j];
            w[i] = acc;
        }
        return w;
    };

    // row-major order is a linear extension of the componentwise order
    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> u = detail::grid_grade(M.shape, idx);
        for (auto& g : gens) {
            if (!g.push[idx].empty() || !leq(g.birth, u) || g.birth == u) continue;
            for (int axis = 0; axis < nparams; ++axis) {
                if (u[axis] == 0) continue;
                std::vector<int> w = u;
                --w[axis];
                if (!leq(g.birth, w)) continue;
                int src = detail::linear_index(M.shape, w);
                g.push[idx] = apply_edge(M.edge[axis][src], g.push[src]);
                break;
            }
        }
        detail::Echelon older; // span of everything arriving from below
        for (auto& g : gens)
            if (leq(g.birth, u) && g.birth != u) older.add(g.push[idx]);
        int fresh = M.dims[idx] - older.rank();
        if (fresh) out.xi[0][idx] = fresh;
        for (int k = 0; k < M.dims[idx] && fresh > 0; ++k) {
            std::vector<unsigned char> e(M.dims[idx], 0);
            e[k] = 1;
            if (older.add(e)) {
                Gen g;
                g.birth = u;
                g.push.assign(total, {});
                g.push[idx] = std::move(e);
                gens.push_back(std::move(g));
                --fresh;
            }
        }
    }

    // relations: kernel of the generator matrix at each grade
    struct Rel {
        std::vector<int> birth;
        std::vector<unsigned char> combo; // coordinates over all generators
    };
    std::vector<Rel> rels;
    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> u = detail::grid_grade(M.shape, idx);
        std::vector<int> live;
        for (int g = 0; g < int(gens.size()); ++g)
            if (leq(gens[g].birth, u)) live.push_back(g);
        DenseMatrix P(M.dims[idx], int(live.size()));
        for (int j = 0; j < int(live.size()); ++j)
            for (int i = 0; i < M.dims[idx]; ++i) P.a[i][j] = gens[live[j]].push[idx][i];
        detail::Echelon known;
        for (const auto& r : rels)
            if (leq(r.birth, u)) known.add(r.combo);
        int fresh = 0;
        for (const auto& k : dense_kernel(std::move(P))) {
            std::vector<unsigned char> v(gens.size(), 0);
            for (int j = 0; j < int(live.size()); ++j) v[live[j]] = k[j];
            if (known.add(v)) {
                rels.push_back({u, std::move(v)});
                ++fresh;
            }
        }
        if (fresh) out.xi[1][idx] = fresh;
    }

    // syzygies among the chosen relations
    struct Syz {
        std::vector<int> birth;
        std::vector<unsigned char> combo;
    };
    std::vector<Syz> syz;
    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> u = detail::grid_grade(M.shape, idx);
        std::vector<int> live_gens, live_rels;
        for (int g = 0; g < int(gens.size()); ++g)
            if (leq(gens[g].birth, u)) live_gens.push_back(g);
        for (int r = 0; r < int(rels.size()); ++r)
            if (leq(rels[r].birth, u)) live_rels.push_back(r);
        DenseMatrix Q(int(live_gens.size()), int(live_rels.size()));
        for (int j = 0; j < int(live_rels.size()); ++j)
            for (int i = 0; i < int(live_gens.size()); ++i)
                Q.a[i][j] = rels[live_rels[j]].combo[live_gens[i]];
        detail::Echelon known;
        for (const auto& s : syz)
            if (leq(s.birth, u)) known.add(s.combo);
        int fresh = 0;
        for (const auto& k : dense_kernel(std::move(Q))) {
            std::vector<unsigned char> v(rels.size(), 0);
            for (int j = 0; j < int(live_rels.size()); ++j) v[live_rels[j]] = k[j];
            if (known.add(v)) {
                syz.push_back({u, std::move(v)});
                ++fresh;
            }
        }
        if (fresh) out.xi[2][idx] = fresh;
    }

    // Hilbert-function self-check
    for (int idx = 0; idx < total; ++idx) {
        std::vector<int> u = detail::grid_grade(M.shape, idx);
        int acc = 0;
        for (int w = 0; w < total; ++w)
            if (leq(detail::grid_grade(M.shape, w), u))
                acc += out.value(0, w) - out.value(1, w) + out.value(2, w);
        if (acc != M.dims[idx])
            throw std::logic_error("presentation oracle failed its Hilbert-function check");
    }
    return out;
}

} // namespace oracle

#endif
