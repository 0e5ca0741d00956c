#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "intdecomp/graph.hpp"
#include "intdecomp/hermite.hpp"

#include "golden.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

using namespace intdecomp;

namespace {

// Symmetric matrix with entries in [-bound, bound].
IntMatrix random_symmetric(testutil::Rng &rng, std::size_t n, long bound) {
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int v = testutil::rand_in(rng, -bound, bound);
            b(i, j) = v;
            b(j, i) = v;
        }
    return b;
}

IntMatrix random_nonneg_symmetric(testutil::Rng &rng, std::size_t n,
                                  long bound) {
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Int v = testutil::rand_in(rng, 0, bound);
            b(i, j) = v;
            b(j, i) = v;
        }
    return b;
}

} // namespace

TEST_CASE("WeightedGraph rejects non-symmetric adjacency") {
    CHECK_THROWS_AS(WeightedGraph(IntMatrix{{0, 1}, {2, 0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(WeightedGraph(IntMatrix(2, 3)), std::invalid_argument);
}

TEST_CASE("degrees are full row sums") {
    CHECK(degrees(WeightedGraph(golden::b)) ==
          std::vector<Int>{6, 10, 3, 9, 15});
    CHECK(degrees(WeightedGraph(IntMatrix(3, 3))) ==
          std::vector<Int>{0, 0, 0});
    CHECK(degrees(WeightedGraph(IntMatrix::identity(3))) ==
          std::vector<Int>{1, 1, 1});
}

TEST_CASE("laplacian of the worked example") {
    CHECK(laplacian(WeightedGraph(golden::b)) == golden::laplacian);

    // Self-loops cancel: the loopless graph with edges {1,4},{2,5},{3,4}
    // of weights 2,6,2 has the same Laplacian.
    IntMatrix adj(5, 5);
    adj(0, 3) = adj(3, 0) = 2;
    adj(1, 4) = adj(4, 1) = 6;
    adj(2, 3) = adj(3, 2) = 2;
    CHECK(laplacian(WeightedGraph(adj)) == golden::laplacian);
}

TEST_CASE("laplacian basics") {
    CHECK(laplacian(WeightedGraph(IntMatrix{{7, 0}, {0, 3}})) ==
          IntMatrix(2, 2));
    CHECK(laplacian(WeightedGraph(IntMatrix{{0, 4}, {4, 0}})) ==
          IntMatrix{{4, -4}, {-4, 4}});
}

TEST_CASE("laplacian rows sum to zero") {
    testutil::Rng rng(21);
    for (int it = 0; it < 100; ++it) {
        std::size_t n = testutil::rand_in(rng, 1, 6);
        IntMatrix l = laplacian(WeightedGraph(random_symmetric(rng, n, 5)));
        for (std::size_t i = 0; i < n; ++i) {
            Int s = 0;
            for (std::size_t j = 0; j < n; ++j)
                s += l(i, j);
            CHECK(s == 0);
        }
    }
}

TEST_CASE("rref") {
    CHECK(rref(RatMatrix(golden::laplacian)) == golden::rref);
    CHECK(rref(RatMatrix(IntMatrix::identity(3))) ==
          RatMatrix(IntMatrix::identity(3)));
    CHECK(rref(RatMatrix(IntMatrix{{2, 4}})) == RatMatrix(IntMatrix{{1, 2}}));

    RrefResult r = rref_with_pivots(RatMatrix(golden::laplacian));
    CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("rref is idempotent and rank matches pivot count") {
    testutil::Rng rng(22);
    for (int it = 0; it < 100; ++it) {
        IntMatrix a = testutil::random_matrix(
            rng, testutil::rand_in(rng, 1, 4), testutil::rand_in(rng, 1, 5),
            -6, 6);
        RatMatrix r = rref(RatMatrix(a));
        CHECK(rref(r) == r);
    }
}

TEST_CASE("components via rref on the worked example") {
    CHECK(components_via_rref(WeightedGraph(golden::b)) ==
          golden::components);

    ConnectivityCrossCheck cc = cross_check_components(WeightedGraph(golden::b));
    CHECK(cc.agreed);
    CHECK(cc.rank_law_holds);
    CHECK(cc.laplacian_rank == 3);
    CHECK(cc.zero_pattern == golden::components);
    CHECK(cc.via_rref == golden::components);
}

TEST_CASE("components via rref on simple graphs") {
    CHECK(components_via_rref(WeightedGraph(IntMatrix(3, 3))).components ==
          std::vector<std::vector<std::size_t>>{{1}, {2}, {3}});

    // Path 1-2-3-4.
    IntMatrix path(4, 4);
    path(0, 1) = path(1, 0) = 1;
    path(1, 2) = path(2, 1) = 1;
    path(2, 3) = path(3, 2) = 1;
    CHECK(components_via_rref(WeightedGraph(path)).components ==
          std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}});

    // Isolated vertex before an edge: the kernel basis indices pass
    // through pivot columns, not raw row numbers.
    IntMatrix iso(3, 3);
    iso(0, 0) = 1;
    iso(1, 1) = 4;
    iso(1, 2) = iso(2, 1) = 2;
    iso(2, 2) = 1;
    CHECK(components_via_rref(WeightedGraph(iso)).components ==
          std::vector<std::vector<std::size_t>>{{1}, {2, 3}});
}

TEST_CASE("components via zero pattern") {
    CHECK(components_via_zero_pattern(WeightedGraph(golden::b)) ==
          golden::components);
    CHECK(
        components_via_zero_pattern(WeightedGraph(IntMatrix::identity(4)))
            .components ==
        std::vector<std::vector<std::size_t>>{{1}, {2}, {3}, {4}});

    IntMatrix ones(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            ones(i, j) = 1;
    CHECK(components_via_zero_pattern(WeightedGraph(ones)).components ==
          std::vector<std::vector<std::size_t>>{{1, 2, 3}});
}

TEST_CASE("zero pattern agrees with a BFS oracle") {
    testutil::Rng rng(23);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = testutil::rand_in(rng, 1, 7);
        IntMatrix b = random_symmetric(rng, n, 2);
        CHECK(components_via_zero_pattern(WeightedGraph(b)) ==
              oracles::bfs_components(b));
    }
}

TEST_CASE("cross check: agreement happens exactly when the rank law holds") {
    testutil::Rng rng(24);
    std::size_t gaps = 0;
    for (int it = 0; it < 400; ++it) {
        std::size_t m = testutil::rand_in(rng, 1, 3);
        std::size_t n = testutil::rand_in(rng, 1, 5);
        IntMatrix h = hermite_normal_form(
                          testutil::random_matrix(rng, m, n, -3, 3))
                          .h;
        bool zero_col = false;
        for (std::size_t j = 0; j < n; ++j)
            zero_col = zero_col || h.is_zero_column(j);
        if (zero_col)
            continue;
        // cross_check_components itself throws if agreed != rank_law_holds.
        ConnectivityCrossCheck cc = cross_check_components(WeightedGraph(gram(h)));
        CHECK(cc.agreed == cc.rank_law_holds);
        if (cc.rank_law_holds)
            CHECK(cc.via_rref == cc.zero_pattern);
        else
            ++gaps;
    }
    // The corpus is wide enough to exercise both branches.
    CHECK(gaps > 0);
}

TEST_CASE("a gram matrix can break the Laplacian rank law") {
    // H = [1 1 -2] has zero row sum, so the gram degrees all vanish and
    // L = -B has rank 1 on a connected 3-vertex graph instead of 2.
    IntMatrix h{{1, 1, -2}};
    ConnectivityCrossCheck cc = cross_check_components(WeightedGraph(gram(h)));
    CHECK(cc.zero_pattern.components ==
          std::vector<std::vector<std::size_t>>{{1, 2, 3}});
    CHECK(cc.laplacian_rank == 1);
    CHECK_FALSE(cc.rank_law_holds);
    CHECK_FALSE(cc.agreed);
}

TEST_CASE("negative weights can fool the Laplacian rank") {
    // Rank-one Laplacian on a connected graph: the kernel sets overlap,
    // so the rref reading cannot form a partition and must throw with
    // the zero-pattern answer attached.
    IntMatrix b{{-1, -1, 1, 1},
                {-1, -1, 1, 1},
                {1, 1, -1, -1},
                {1, 1, -1, -1}};
    WeightedGraph g(b);
    CHECK(components_via_zero_pattern(g).components ==
          std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}});
    CHECK_THROWS_AS(components_via_rref(g), ConnectivityMismatchError);
    try {
        components_via_rref(g);
    } catch (const ConnectivityMismatchError &e) {
        CHECK(e.zero_pattern_partition().components ==
              std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}});
    }

    // A signed four-cycle whose Laplacian loses a rank: rref still yields
    // a partition, but a wrong one. The methods disagree.
    IntMatrix cyc{{0, 1, 0, -1},
                  {1, 0, -1, 0},
                  {0, -1, 0, 1},
                  {-1, 0, 1, 0}};
    WeightedGraph gc(cyc);
    CHECK(components_via_zero_pattern(gc).components ==
          std::vector<std::vector<std::size_t>>{{1, 2, 3, 4}});
    CHECK(components_via_rref(gc).components ==
          std::vector<std::vector<std::size_t>>{{1, 3}, {2, 4}});
}

TEST_CASE("is_reducible") {
    CHECK(is_reducible(golden::b));
    CHECK_FALSE(is_reducible(IntMatrix{{1, 1}, {1, 1}}));
    CHECK_FALSE(is_reducible(IntMatrix{{5}}));
    CHECK(is_reducible(IntMatrix::identity(2)));
    CHECK_THROWS_AS(is_reducible(IntMatrix{{0, 1}, {2, 0}}),
                    std::invalid_argument);
}

TEST_CASE("brute-force reducibility witness") {
    CHECK(reducibility_witness_brute_force(golden::b) ==
          std::vector<std::size_t>{1, 3, 4});
    CHECK(reducibility_witness_brute_force(IntMatrix::identity(2)) ==
          std::vector<std::size_t>{1});
    CHECK_FALSE(
        reducibility_witness_brute_force(IntMatrix{{1, 1}, {1, 1}}).has_value());
    CHECK_FALSE(reducibility_witness_brute_force(IntMatrix{{3}}).has_value());
    CHECK_THROWS_AS(reducibility_witness_brute_force(IntMatrix(21, 21)),
                    std::invalid_argument);
}

TEST_CASE("witness agrees with is_reducible") {
    testutil::Rng rng(25);
    for (int it = 0; it < 300; ++it) {
        std::size_t n = testutil::rand_in(rng, 1, 6);
        IntMatrix b = random_symmetric(rng, n, 2);
        auto w = reducibility_witness_brute_force(b);
        CHECK(w.has_value() == is_reducible(b));
        if (w) {
            CHECK(!w->empty());
            CHECK(w->size() < n);
            // No edge may leave the witness set.
            std::vector<bool> in(n + 1, false);
            for (std::size_t v : *w)
                in[v] = true;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (i != j && b(i, j) != 0)
                        CHECK(in[i + 1] == in[j + 1]);
        }
    }
}

TEST_CASE("Laplacian rank law for nonnegative weights") {
    testutil::Rng rng(26);
    for (int it = 0; it < 200; ++it) {
        std::size_t n = testutil::rand_in(rng, 1, 6);
        IntMatrix b = random_nonneg_symmetric(rng, n, 3);
        WeightedGraph g(b);
        std::size_t t = components_via_zero_pattern(g).components.size();
        std::size_t rank =
            rref_with_pivots(RatMatrix(laplacian(g))).pivot_cols.size();
        CHECK(rank == n - t);
    }
}
