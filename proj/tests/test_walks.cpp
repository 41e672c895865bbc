#include <doctest.h>

#include "treewalk/tree_gen.hpp"
#include "treewalk/walk_count.hpp"

using namespace treewalk;

namespace {

using Matrix = std::vector<std::vector<WalkCount>>;

Matrix adjacency(const Tree& t) {
    Matrix a(t.order(), std::vector<WalkCount>(t.order(), 0));
    for (auto [u, v] : t.edges()) a[u][v] = a[v][u] = 1;
    return a;
}

Matrix multiply(const Matrix& x, const Matrix& y) {
    std::size_t n = x.size();
    Matrix z(n, std::vector<WalkCount>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (x[i][k] != 0)
                for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][k] * y[k][j];
    return z;
}

// Dense A^len.
Matrix power(const Tree& t, int len) {
    Matrix r(t.order(), std::vector<WalkCount>(t.order(), 0));
    for (int i = 0; i < t.order(); ++i) r[i][i] = 1;
    Matrix a = adjacency(t);
    for (int i = 0; i < len; ++i) r = multiply(r, a);
    return r;
}

WalkCount pairs_at(const Tree& t, int len) {
    WalkCount c = 0;
    for (Vertex u = 0; u < t.order(); ++u)
        for (Vertex v = u + 1; v < t.order(); ++v)
            if (distance(t, u, v) == len) ++c;
    return c;
}

}  // namespace

TEST_SUITE("walk_count") {
    TEST_CASE("closed walks") {
        CHECK(count_closed_walks(path_tree(4), 4) == 14);
        CHECK(count_closed_walks(star_tree(4), 4) == 18);
        for (int n = 2; n <= 8; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                CHECK(count_closed_walks(t, 2) == 2 * (n - 1));
                CHECK(count_closed_walks(t, 5) == 0);
            }
        }
        CHECK_THROWS_AS(count_closed_walks(path_tree(3), 0), std::invalid_argument);
    }

    TEST_CASE("all walks") {
        CHECK(count_walks(path_tree(2), 1) == 2);
        CHECK(count_walks(path_tree(3), 2) == 6);
        for (int n = 1; n <= 7; ++n) CHECK(count_walks(star_tree(n), 1) == 2 * (n - 1));
    }

    TEST_CASE("enumeration examples") {
        CHECK(enumerate_walks(star_tree(4), 2, 0, 0).size() == 3);
        CHECK(enumerate_walks(path_tree(3), 2).size() == 6);
        auto empty = enumerate_walks(path_tree(5), 0, 2, 2);
        REQUIRE(empty.size() == 1);
        CHECK(empty[0].vertices == std::vector<Vertex>{2});
        CHECK(enumerate_walks(path_tree(5), 0).size() == 5);
    }

    TEST_CASE("sparse counts equal dense powers and brute-force listings") {
        for (int n = 1; n <= 8; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                for (int len = 1; len <= 8; ++len) {
                    Matrix m = power(t, len);
                    WalkCount trace = 0, sum = 0;
                    for (int i = 0; i < n; ++i) {
                        trace += m[i][i];
                        for (int j = 0; j < n; ++j) sum += m[i][j];
                    }
                    CHECK(count_closed_walks(t, len) == trace);
                    CHECK(count_walks(t, len) == sum);
                    auto walks = enumerate_walks(t, len);
                    CHECK(WalkCount(walks.size()) == sum);
                    WalkCount closed = 0;
                    for (const Walk& w : walks) closed += w.closed() ? 1 : 0;
                    CHECK(closed == trace);
                    for (Vertex u = 0; u < n; ++u) {
                        CHECK(count_walks_between(t, len, u, n - 1 - u) == m[u][n - 1 - u]);
                        CHECK(WalkCount(enumerate_walks(t, len, u, n - 1 - u).size()) == m[u][n - 1 - u]);
                    }
                }
            }
        }
    }

    TEST_CASE("closed 4-walks from degrees") {
        for (int n = 1; n <= 9; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                WalkCount squares = 0;
                for (Vertex v = 0; v < n; ++v) squares += t.degree(v) * t.degree(v);
                CHECK(count_closed_walks(t, 4) == 2 * squares - 2 * (n - 1));
            }
        }
    }

    TEST_CASE("len-paths") {
        for (int n = 1; n <= 9; ++n) {
            for (int len = 1; len <= 9; ++len) CHECK(count_ell_paths(path_tree(n), len) == std::max(0, n - len));
        }
        CHECK(count_ell_paths(star_tree(4), 2) == 3);
        CHECK(count_ell_paths(double_broom_paths(8, 5), 5) == 4);
        for (int n = 1; n <= 9; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                for (int len = 1; len <= 9; ++len) {
                    WalkCount r = count_ell_paths(t, len);
                    CHECK(r == pairs_at(t, len));
                    CHECK(r <= WalkCount(n) * (n - 1) / 2);
                }
            }
        }
    }

    TEST_CASE("wiener index") {
        CHECK(wiener(path_tree(2)) == 1);
        CHECK(wiener(path_tree(4)) == 10);
        for (int t = 1; t <= 40; ++t) CHECK(wiener(path_tree(t + 1)) == WalkCount(t) * (t + 1) * (t + 2) / 6);
        for (int n = 1; n <= 30; ++n) CHECK(wiener(star_tree(n)) == WalkCount(n - 1) * (n - 1));
        for (int n = 1; n <= 9; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                WalkCount sum = 0;
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v) sum += distance(t, u, v);
                CHECK(wiener(t) == sum);
            }
        }
    }
}
