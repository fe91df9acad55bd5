#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "morsegrad/complex.hpp"
#include "morsegrad/f2_matrix.hpp"
#include "morsegrad/homology.hpp"
#include "morsegrad/random_complex.hpp"
#include "oracles.hpp"

using namespace morsegrad;

namespace {

SimplicialComplex four_cycle() {
    return SimplicialComplex({Simplex({0}), Simplex({1}), Simplex({2}), Simplex({3}),
                              Simplex({0, 1}), Simplex({1, 2}), Simplex({2, 3}),
                              Simplex({0, 3})});
}

// quotient of a subdivided triangle with its boundary glued a.a.a^-1; eight
// vertices, contractible but not collapsible
std::vector<Simplex> dunce_hat_triangles() {
    const int t[17][3] = {{1, 2, 4}, {2, 3, 4}, {3, 4, 5}, {1, 3, 5}, {1, 2, 5}, {2, 5, 6},
                          {2, 3, 6}, {1, 3, 6}, {1, 6, 7}, {1, 3, 7}, {2, 3, 7}, {2, 7, 8},
                          {1, 2, 8}, {1, 4, 8}, {4, 5, 6}, {4, 6, 7}, {4, 7, 8}};
    std::vector<Simplex> out;
    for (auto& tri : t) out.push_back(Simplex::from_unsorted({tri[0], tri[1], tri[2]}));
    return out;
}

oracle::GradedComplex to_oracle(const SimplicialComplex& K) {
    oracle::GradedComplex G;
    G.params = 1;
    for (CellId c = 0; c < K.num_cells(); ++c) {
        G.dims.push_back(K.cell_dim(c));
        auto fs = K.cell_facets(c);
        G.facets.emplace_back(fs.begin(), fs.end());
        G.grades.push_back({0});
    }
    return G;
}

} // namespace

TEST_CASE("bitvector basics") {
    BitVector v(130);
    CHECK(v.none());
    v.set(0);
    v.set(64);
    v.set(129);
    CHECK(v.count() == 3);
    CHECK(v.lowest_set() == 0);
    CHECK(v.highest_set() == 129);
    BitVector w(130);
    w.set(64);
    v.xor_with(w);
    CHECK(v.count() == 2);
    CHECK(!v.test(64));
    CHECK(v.set_bits() == std::vector<int>{0, 129});
}

TEST_CASE("f2 matrix rank and kernel match the dense oracle") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + int(rng() % 12), cols = 1 + int(rng() % 12);
        F2Matrix m(rows, cols);
        oracle::DenseMatrix d(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng() & 1) {
                    m.set(r, c);
                    d.a[r][c] = 1;
                }
        CHECK(m.rank() == oracle::dense_rank(d));
        auto kernel = m.kernel_basis();
        CHECK(int(kernel.size()) == cols - m.rank());
        for (const BitVector& k : kernel) {
            // m * k = 0
            BitVector out(rows);
            for (int c : k.set_bits())
                for (int r = 0; r < rows; ++r)
                    if (m.get(r, c)) out.flip(r);
            CHECK(out.none());
        }
    }
}

TEST_CASE("tracked echelon expresses vectors over inserted tags") {
    TrackedEchelon ech(8, 3);
    BitVector a(8), b(8), c(8);
    a.set(0);
    a.set(1);
    b.set(1);
    b.set(2);
    c.set(0);
    c.set(2); // c = a + b
    BitVector ta(3), tb(3);
    ta.set(0);
    tb.set(1);
    CHECK(!ech.insert(a, ta));
    CHECK(!ech.insert(b, tb));
    auto combo = ech.express(c);
    REQUIRE(combo.has_value());
    CHECK(combo->test(0));
    CHECK(combo->test(1));
    BitVector d(8);
    d.set(7);
    CHECK(!ech.express(d).has_value());
}

TEST_CASE("facets come in vertex-deletion order") {
    Simplex s({1, 2, 5});
    auto f = s.facets();
    REQUIRE(f.size() == 3);
    CHECK(f[0] == Simplex({2, 5}));
    CHECK(f[1] == Simplex({1, 5}));
    CHECK(f[2] == Simplex({1, 2}));

    CHECK(Simplex({7}).facets().empty());

    auto g = Simplex({2, 3, 5}).facets();
    CHECK(g[0] == Simplex({3, 5}));
    CHECK(g[1] == Simplex({2, 5}));
    CHECK(g[2] == Simplex({2, 3}));
}

TEST_CASE("simplex validation") {
    CHECK_THROWS(Simplex({2, 1}));
    CHECK_THROWS(Simplex::from_unsorted({1, 1}));
    CHECK_THROWS(Simplex(std::vector<VertexId>{}));
    CHECK(Simplex::from_unsorted({3, 1, 2}) == Simplex({1, 2, 3}));
}

TEST_CASE("complex construction and closure") {
    CHECK_THROWS(SimplicialComplex({Simplex({0, 1})})); // not face-closed
    SimplicialComplex K({Simplex({0, 1, 2})}, true);
    CHECK(K.num_cells() == 7);
    CHECK(K.dimension() == 2);
    CHECK(K.num_cells_of_dim(0) == 3);
    CHECK(K.num_cells_of_dim(1) == 3);
    // cells sorted by (dim, lex)
    for (CellId c = 1; c < K.num_cells(); ++c)
        CHECK(DimLexLess{}(K.cell(c - 1), K.cell(c)));
}

TEST_CASE("boundary matrices") {
    SimplicialComplex K = four_cycle();
    F2Matrix d1 = boundary_matrix(K, 1);
    CHECK(d1.rows() == 4);
    CHECK(d1.cols() == 4);
    for (int j = 0; j < 4; ++j) {
        int ones = 0;
        for (int i = 0; i < 4; ++i) ones += d1.get(i, j);
        CHECK(ones == 2); // every edge has two endpoints
    }
    F2Matrix d0 = boundary_matrix(K, 0);
    CHECK(d0.rows() == 0);
    CHECK(d0.cols() == 4);

    SimplicialComplex T({Simplex({0, 1, 3})}, true);
    F2Matrix d2 = boundary_matrix(T, 2);
    CHECK(d2.rows() == 3);
    CHECK(d2.cols() == 1);
    int ones = 0;
    for (int i = 0; i < 3; ++i) ones += d2.get(i, 0);
    CHECK(ones == 3);
}

TEST_CASE("boundary of boundary vanishes") {
    RandomComplexSource source(11);
    for (int trial = 0; trial < 20; ++trial) {
        SimplicialComplex K = source.complex(8, 3, 10);
        for (int q = 1; q <= K.dimension(); ++q) {
            F2Matrix prod = boundary_matrix(K, q) * boundary_matrix(K, q + 1);
            CHECK(prod.is_zero());
        }
    }
}

TEST_CASE("homology dims of reference spaces") {
    CHECK(homology_dims(four_cycle()) == std::vector<int>{1, 1});

    SimplicialComplex two_points({Simplex({0}), Simplex({1})});
    CHECK(homology_dims(two_points) == std::vector<int>{2});

    SimplicialComplex dunce(dunce_hat_triangles(), true);
    CHECK(dunce.num_cells() == 8 + 24 + 17);
    CHECK(euler_characteristic(dunce) == 1);
    CHECK(homology_dims(dunce) == std::vector<int>{1, 0, 0});
}

TEST_CASE("cones are contractible") {
    RandomComplexSource source(3);
    for (int trial = 0; trial < 15; ++trial) {
        SimplicialComplex K = source.complex(7, 2, 8);
        SimplicialComplex C = cone(K, 100);
        std::vector<int> dims = homology_dims(C);
        CHECK(dims[0] == 1);
        for (std::size_t q = 1; q < dims.size(); ++q) CHECK(dims[q] == 0);
    }
}

TEST_CASE("euler characteristic equals alternating betti sum") {
    RandomComplexSource source(5);
    for (int trial = 0; trial < 15; ++trial) {
        SimplicialComplex K = source.complex(9, 3, 12);
        std::vector<int> dims = homology_dims(K);
        int alt = 0;
        for (std::size_t q = 0; q < dims.size(); ++q) alt += (q % 2 ? -1 : 1) * dims[q];
        CHECK(alt == euler_characteristic(K));
    }
}

TEST_CASE("relative homology") {
    SimplicialComplex K = four_cycle();
    CellMask empty(K.num_cells(), 0);
    CHECK(relative_homology_dims(K, empty) == homology_dims(K));
    CHECK(relative_homology_dims(K, full_mask(K.num_cells())) == std::vector<int>{0, 0});

    // sublevel at (3,2) of the graded four-cycle is the path a-b-c; relative
    // to {a, c} it is a circle
    SimplicialComplex path({Simplex({0}), Simplex({1}), Simplex({2}), Simplex({0, 1}),
                            Simplex({1, 2})});
    SimplicialComplex A({Simplex({0}), Simplex({2})});
    CHECK(relative_homology_dims(path, A) == std::vector<int>{0, 1});

    // the full cycle relative to the two opposite vertices is a wedge of two
    // circles
    CHECK(relative_homology_dims(K, A) == std::vector<int>{0, 2});

    // not a subcomplex: an edge without its endpoints
    CellMask bad(K.num_cells(), 0);
    bad[*K.find(Simplex({0, 1}))] = 1;
    CHECK_THROWS(relative_homology_dims(K, bad));

    SimplicialComplex not_in_K({Simplex({9})});
    CHECK_THROWS(relative_homology_dims(K, not_in_K));
}

TEST_CASE("relative homology agrees with the dense oracle") {
    RandomComplexSource source(17);
    for (int trial = 0; trial < 25; ++trial) {
        SimplicialComplex K = source.complex(8, 3, 9);
        // random face-closed subset: sublevel of a random vertex ordering
        oracle::GradedComplex G = to_oracle(K);
        CellMask sub(K.num_cells(), 0);
        std::vector<char> present(K.num_cells(), 1), killed(K.num_cells(), 0);
        int cutoff = source.bounded(K.num_cells() + 1);
        for (CellId c = 0; c < K.num_cells(); ++c) {
            bool inside = true;
            for (VertexId v : K.cell(c).vertices()) inside &= v < cutoff % 9;
            sub[c] = inside;
            killed[c] = inside;
        }
        CHECK(relative_homology_dims(K, sub) == oracle::dense_relative_homology(G, present, killed));
    }
}

TEST_CASE("lefschetz complex validation") {
    // single edge with both endpoints
    LefschetzComplex L({0, 0, 1}, {{}, {}, {0, 1}});
    CHECK(L.num_cells() == 3);
    CHECK(L.dimension() == 1);
    CHECK(!L.incidence_square_violation());
    CHECK(homology_dims(L) == std::vector<int>{1, 0});

    CHECK_THROWS(LefschetzComplex({0, 1}, {{}, {0, 0}}));    // duplicate incidence
    CHECK_THROWS(LefschetzComplex({0, 0, 2}, {{}, {}, {0}})); // dimension gap

    // 2-cell with a single 1-dimensional face used once: square fails
    LefschetzComplex bad({0, 0, 1, 2}, {{}, {}, {0, 1}, {2}});
    CHECK(bad.incidence_square_violation().has_value());

    SimplicialComplex K = four_cycle();
    LefschetzComplex conv = to_lefschetz(K);
    CHECK(homology_dims(conv) == homology_dims(K));
    CHECK(!conv.incidence_square_violation());
}
