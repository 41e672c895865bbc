#include "treewalk/tree_gen.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <stdexcept>

namespace treewalk {

Tree from_pruefer(std::span<const Vertex> seq, int n) {
    if (n < 2) throw std::invalid_argument("Pruefer decoding needs n >= 2");
    if (static_cast<int>(seq.size()) != n - 2) {
        throw std::invalid_argument("Pruefer sequence for n=" + std::to_string(n) + " must have length " +
                                    std::to_string(n - 2));
    }
    std::vector<int> deg(n, 1);
    for (Vertex s : seq) {
        if (s < 0 || s >= n) throw std::invalid_argument("Pruefer entry out of range");
        ++deg[s];
    }
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        if (deg[v] == 1) leaves.push(v);
    }
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex s : seq) {
        Vertex leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, s);
        if (--deg[s] == 1) leaves.push(s);
    }
    Vertex u = leaves.top();
    leaves.pop();
    edges.emplace_back(u, leaves.top());
    return Tree(n, std::move(edges));
}

std::vector<Vertex> to_pruefer(const Tree& t) {
    int n = t.order();
    if (n < 2) return {};
    std::vector<int> deg(n);
    std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) leaves.push(v);
    }
    std::vector<char> removed(n, 0);
    std::vector<Vertex> seq;
    seq.reserve(n - 2);
    while (static_cast<int>(seq.size()) < n - 2) {
        Vertex leaf = leaves.top();
        leaves.pop();
        removed[leaf] = 1;
        for (Vertex w : t.neighbors(leaf)) {
            if (!removed[w]) {
                seq.push_back(w);
                if (--deg[w] == 1) leaves.push(w);
                break;
            }
        }
    }
    return seq;
}

namespace {

void check_enumeration_order(int n, int limit) {
    if (n < 1) throw std::invalid_argument("tree order must be positive");
    if (n > limit) {
        throw std::invalid_argument("order " + std::to_string(n) + " exceeds the enumeration limit " +
                                    std::to_string(limit));
    }
}

Tree from_level_sequence(const std::vector<int>& level) {
    int n = static_cast<int>(level.size());
    std::vector<Vertex> last_at(n + 2, -1);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        if (i > 0) edges.emplace_back(last_at[level[i] - 1], i);
        last_at[level[i]] = i;
    }
    return Tree(n, std::move(edges));
}

std::vector<Tree> sorted_classes(std::map<CanonicalCode, Tree>&& classes) {
    std::vector<Tree> out;
    out.reserve(classes.size());
    for (auto& [code, tree] : classes) out.push_back(std::move(tree));
    return out;
}

}  // namespace

std::vector<Tree> enumerate_free_trees(int n) {
    check_enumeration_order(n, kMaxEnumerationOrder);
    // Rooted trees as canonical level sequences (Beyer-Hedetniemi successor
    // rule, root at level 1). Every free tree appears rooted at some vertex.
    std::vector<int> level(n);
    for (int i = 0; i < n; ++i) level[i] = i + 1;
    std::map<CanonicalCode, Tree> classes;
    while (true) {
        Tree t = from_level_sequence(level);
        auto code = canonical_code(t);
        classes.try_emplace(std::move(code), std::move(t));

        int p = n - 1;
        while (p > 0 && level[p] <= 2) --p;
        if (p <= 0) break;
        int q = p - 1;
        while (level[q] != level[p] - 1) --q;
        for (int i = p; i < n; ++i) level[i] = level[i - p + q];
    }
    return sorted_classes(std::move(classes));
}

std::vector<Tree> enumerate_free_trees_pruefer(int n) {
    check_enumeration_order(n, kMaxPrueferOrder);
    if (n == 1) return {Tree()};
    std::map<CanonicalCode, Tree> classes;
    std::vector<Vertex> seq(n - 2, 0);
    while (true) {
        Tree t = from_pruefer(seq, n);
        auto code = canonical_code(t);
        classes.try_emplace(std::move(code), std::move(t));
        // Odometer increment over {0..n-1}^(n-2).
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return sorted_classes(std::move(classes));
}

Tree path_tree(int n) {
    if (n < 1) throw std::invalid_argument("path needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree(n, std::move(edges));
}

Tree star_tree(int n) {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return Tree(n, std::move(edges));
}

namespace {

// Path 0..length, then `left` leaves on vertex 0 and `right` leaves on vertex `length`.
Tree path_with_end_stars(int length, int left, int right) {
    int n = length + 1 + left + right;
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (int i = 0; i < length; ++i) edges.emplace_back(i, i + 1);
    int next = length + 1;
    for (int i = 0; i < left; ++i) edges.emplace_back(0, next++);
    for (int i = 0; i < right; ++i) edges.emplace_back(length, next++);
    return Tree(n, std::move(edges));
}

}  // namespace

Tree broom(int path_length, int leaves) {
    if (path_length < 0 || leaves < 0) throw std::invalid_argument("broom parameters must be non-negative");
    return path_with_end_stars(path_length, 0, leaves);
}

Tree double_broom_walks(int k) {
    if (k < 1) throw std::invalid_argument("double broom needs k >= 1");
    return path_with_end_stars(k, k / 2, k - k / 2);
}

Tree double_broom_paths(int n, int len) {
    if (len < 2) throw std::invalid_argument("double broom for paths needs len >= 2");
    int extra = n - len + 1;
    if (extra < 0) {
        throw std::invalid_argument("double broom needs n >= len - 1 (n=" + std::to_string(n) +
                                    ", len=" + std::to_string(len) + ")");
    }
    return path_with_end_stars(len - 2, extra / 2, extra - extra / 2);
}

int p_broom_min_order(int len, int p) {
    return 1 + p * (len - 2) / 2 + p;
}

std::vector<int> p_broom_leaf_counts(int n, int len, int p) {
    if (len < 4 || len % 2 != 0) throw std::invalid_argument("p-broom needs an even len >= 4");
    if (p < 1) throw std::invalid_argument("p-broom needs p >= 1");
    if (n < p_broom_min_order(len, p)) {
        throw std::invalid_argument("p-broom(n=" + std::to_string(n) + ", len=" + std::to_string(len) +
                                    ", p=" + std::to_string(p) + ") is infeasible");
    }
    int total = n - 1 - p * (len - 2) / 2;
    std::vector<int> counts(p, total / p);
    for (int i = 0; i < total % p; ++i) ++counts[i];
    return counts;
}

Tree p_broom(int n, int len, int p) {
    auto counts = p_broom_leaf_counts(n, len, p);
    int leg = (len - 2) / 2;
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    Vertex next = 1;
    for (int j = 0; j < p; ++j) {
        Vertex prev = 0;
        for (int i = 0; i < leg; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        for (int i = 0; i < counts[j]; ++i) edges.emplace_back(prev, next++);
    }
    return Tree(n, std::move(edges));
}

Tree make_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::path: return path_tree(spec.n);
        case Family::star: return star_tree(spec.n);
        case Family::broom: return broom(spec.path_length, spec.leaves);
        case Family::double_broom_walks: return double_broom_walks(spec.k);
        case Family::double_broom_paths: return double_broom_paths(spec.n, spec.len);
        case Family::p_broom: return p_broom(spec.n, spec.len, spec.p);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace treewalk
