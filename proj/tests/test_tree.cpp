#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "treewalk/tree.hpp"
#include "treewalk/tree_gen.hpp"

using namespace treewalk;

namespace {

Tree relabel(const Tree& t, const std::vector<Vertex>& perm) {
    std::vector<Edge> edges;
    for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
    return Tree(t.order(), edges);
}

std::vector<Vertex> random_perm(int n, std::mt19937& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// Isomorphism by trying every vertex bijection.
bool brute_isomorphic(const Tree& a, const Tree& b) {
    if (a.order() != b.order()) return false;
    std::vector<Vertex> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : a.edges()) {
            if (!b.has_edge(p[u], p[v])) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

// Otter: unrooted trees from the rooted counts r(n).
std::vector<long long> otter_counts(int max_n) {
    std::vector<long long> r(max_n + 1, 0);
    r[1] = 1;
    for (int n = 1; n < max_n; ++n) {
        // r(n+1) = (1/n) sum_{k=1}^{n} (sum_{d|k} d r(d)) r(n-k+1)
        long long s = 0;
        for (int k = 1; k <= n; ++k) {
            long long inner = 0;
            for (int d = 1; d <= k; ++d) {
                if (k % d == 0) inner += d * r[d];
            }
            s += inner * r[n - k + 1];
        }
        r[n + 1] = s / n;
    }
    std::vector<long long> t(max_n + 1, 0);
    for (int n = 1; n <= max_n; ++n) {
        long long pairs = 0;
        for (int i = 1; i < n; ++i) pairs += r[i] * r[n - i];
        if (n % 2 == 0) pairs -= r[n / 2];
        t[n] = r[n] - pairs / 2;
    }
    return t;
}

}  // namespace

TEST_SUITE("tree_core") {
    TEST_CASE("construction rejects non-trees") {
        CHECK_THROWS_AS(Tree(3, {{0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Tree(3, {{0, 1}, {0, 1}}), std::invalid_argument);
        CHECK_THROWS_AS(Tree(3, {{0, 0}, {1, 2}}), std::invalid_argument);
        CHECK_THROWS_AS(Tree(4, {{0, 1}, {1, 2}, {2, 0}}), std::invalid_argument);
        CHECK_THROWS_AS(Tree(3, {{0, 1}, {1, 3}}), std::invalid_argument);
        CHECK(Tree(1, {}).order() == 1);
        CHECK(Tree().edges().empty());
    }

    TEST_CASE("distance and diameter") {
        Tree p4 = path_tree(4);
        CHECK(distance(p4, 0, 3) == 3);
        CHECK(distance(p4, 2, 2) == 0);
        Tree s5 = star_tree(5);
        CHECK(distance(s5, 1, 4) == 2);
        CHECK_THROWS_AS(distance(s5, 0, 5), std::out_of_range);
        CHECK(diameter(s5) == 2);
        for (int n = 1; n <= 8; ++n) CHECK(diameter(path_tree(n)) == n - 1);
    }

    TEST_CASE("p-broom diameter from all-pairs distances") {
        for (int len : {4, 6, 8}) {
            for (int p = 2; p <= 4; ++p) {
                Tree t = p_broom(p_broom_min_order(len, p) + 3, len, p);
                int best = 0;
                for (Vertex u = 0; u < t.order(); ++u) {
                    for (Vertex v = 0; v < t.order(); ++v) best = std::max(best, distance(t, u, v));
                }
                CHECK(best == len);
                CHECK(diameter(t) == len);
            }
        }
    }

    TEST_CASE("tree metric along leaf-to-leaf paths") {
        for (int n = 2; n <= 8; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                auto leaves = t.leaves();
                for (Vertex u : leaves) {
                    for (Vertex v : leaves) {
                        for (Vertex w : path_between(t, u, v)) {
                            CHECK(distance(t, u, v) == distance(t, u, w) + distance(t, w, v));
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("canonical code is invariant under relabelling") {
        std::mt19937 rng(7);
        for (int n = 1; n <= 10; ++n) {
            for (const Tree& t : enumerate_free_trees(n)) {
                for (int rep = 0; rep < 3; ++rep) CHECK(canonical_code(relabel(t, random_perm(n, rng))) == canonical_code(t));
            }
        }
        CHECK(canonical_code(star_tree(4)) != canonical_code(path_tree(4)));
        CHECK(!is_isomorphic(star_tree(4), path_tree(4)));
    }

    TEST_CASE("125 labelled trees on 5 vertices fall into 3 classes") {
        std::set<CanonicalCode> codes;
        std::vector<Vertex> seq(3);
        for (seq[0] = 0; seq[0] < 5; ++seq[0])
            for (seq[1] = 0; seq[1] < 5; ++seq[1])
                for (seq[2] = 0; seq[2] < 5; ++seq[2]) codes.insert(canonical_code(from_pruefer(seq, 5)));
        CHECK(codes.size() == 3);
    }

    TEST_CASE("canonical code agrees with brute-force isomorphism") {
        for (int n = 1; n <= 7; ++n) {
            auto trees = enumerate_free_trees(n);
            for (std::size_t i = 0; i < trees.size(); ++i) {
                for (std::size_t j = 0; j < trees.size(); ++j) CHECK(brute_isomorphic(trees[i], trees[j]) == (i == j));
            }
        }
        // random labelled sample at n = 8
        std::mt19937 rng(11);
        std::uniform_int_distribution<int> pick(0, 7);
        std::vector<Tree> sample;
        for (int s = 0; s < 24; ++s) {
            std::vector<Vertex> seq(6);
            for (auto& x : seq) x = pick(rng);
            sample.push_back(from_pruefer(seq, 8));
        }
        for (const Tree& a : sample) {
            for (const Tree& b : sample) CHECK(is_isomorphic(a, b) == brute_isomorphic(a, b));
        }
    }

    TEST_CASE("text format") {
        Tree t = parse_tree("4\n0 1\n1 2\n1 3\n");
        CHECK(t.degree(1) == 3);
        CHECK(parse_tree(format_tree(t)) == t);

        std::istringstream in("2\n0 1\n\n3\n0 1\n1 2\n");
        auto trees = read_trees(in);
        REQUIRE(trees.size() == 2);
        CHECK(trees[1].order() == 3);

        auto line_of = [](const std::string& text) {
            try {
                parse_tree(text);
            } catch (const ParseError& e) {
                return e.line();
            }
            return 0;
        };
        CHECK(line_of("3\n0 1\n1 x\n") == 3);
        CHECK(line_of("3\n0 1\n1 7\n") == 3);
        CHECK(line_of("3\n0 1\n") == 3);
        CHECK(line_of("3\n0 1\n0 1\n") == 1);
    }
}

TEST_SUITE("tree_gen") {
    TEST_CASE("pruefer decoding") {
        CHECK(from_pruefer({}, 2).edges() == std::vector<Edge>{{0, 1}});
        std::vector<Vertex> zeros{0, 0, 0};
        Tree s = from_pruefer(zeros, 5);
        CHECK(s.degree(0) == 4);
        std::vector<Vertex> bad{0, 5, 1};
        CHECK_THROWS_AS(from_pruefer(bad, 5), std::invalid_argument);
        CHECK_THROWS_AS(from_pruefer(zeros, 4), std::invalid_argument);

        std::set<std::vector<Edge>> labelled;
        std::set<CanonicalCode> classes;
        for (Vertex a = 0; a < 4; ++a) {
            for (Vertex b = 0; b < 4; ++b) {
                std::vector<Vertex> seq{a, b};
                Tree t = from_pruefer(seq, 4);
                labelled.insert(t.edges());
                classes.insert(canonical_code(t));
                CHECK(to_pruefer(t) == seq);
            }
        }
        CHECK(labelled.size() == 16);
        CHECK(classes.size() == 2);
    }

    TEST_CASE("free tree counts") {
        const std::vector<std::size_t> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
        auto otter = otter_counts(14);
        for (int n = 1; n <= 10; ++n) CHECK(enumerate_free_trees(n).size() == expected[n - 1]);
        for (int n = 1; n <= 14; ++n) CHECK(static_cast<long long>(enumerate_free_trees(n).size()) == otter[n]);
        CHECK_THROWS_AS(enumerate_free_trees(kMaxEnumerationOrder + 1), std::invalid_argument);
    }

    TEST_CASE("pruefer route gives the same classes") {
        for (int n = 1; n <= 9; ++n) {
            auto a = enumerate_free_trees(n), b = enumerate_free_trees_pruefer(n);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(canonical_code(a[i]) == canonical_code(b[i]));
        }
    }

    TEST_CASE("enumeration is sorted and duplicate-free") {
        for (int n = 1; n <= 10; ++n) {
            auto trees = enumerate_free_trees(n);
            for (std::size_t i = 1; i < trees.size(); ++i) CHECK(canonical_code(trees[i - 1]) < canonical_code(trees[i]));
        }
    }

    TEST_CASE("families") {
        Tree pb = p_broom(16, 4, 3);
        CHECK(pb.order() == 16);
        CHECK(pb.degree(0) == 3);
        CHECK(p_broom_leaf_counts(16, 4, 3) == std::vector<int>{4, 4, 4});
        for (Vertex v : pb.neighbors(0)) CHECK(pb.degree(v) == 5);

        Tree db = double_broom_paths(8, 5);
        CHECK(db.order() == 8);
        CHECK(diameter(db) == 5);
        auto leaves = db.leaves();
        CHECK(leaves.size() == 4);

        CHECK(broom(1280, 720).order() == 2001);
        CHECK(double_broom_walks(1000).order() == 2001);
        for (int k = 2; k <= 20; k += 2) CHECK(double_broom_walks(k).order() == 2 * k + 1);

        for (int n = 5; n <= 30; ++n) {
            for (int p = 1; p_broom_min_order(6, p) <= n; ++p) {
                auto counts = p_broom_leaf_counts(n, 6, p);
                auto [lo, hi] = std::minmax_element(counts.begin(), counts.end());
                CHECK(*hi - *lo <= 1);
                CHECK(p_broom(n, 6, p).order() == n);
            }
        }
        CHECK_THROWS_AS(p_broom(5, 4, 3), std::invalid_argument);
        CHECK_THROWS_AS(p_broom(20, 5, 2), std::invalid_argument);
        CHECK(make_family({Family::star, 6}).degree(0) == 5);
    }
}
