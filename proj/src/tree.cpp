#include "treewalk/tree.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <numeric>
#include <queue>
#include <sstream>

namespace treewalk {

Tree::Tree(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 1) throw std::invalid_argument("tree must have at least one vertex");
    if (static_cast<int>(edges_.size()) != n_ - 1) {
        throw std::invalid_argument("tree on " + std::to_string(n_) + " vertices needs " +
                                    std::to_string(n_ - 1) + " edges, got " +
                                    std::to_string(edges_.size()));
    }
    for (auto& [u, v] : edges_) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("duplicate edge");
    }

    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());

    // n-1 edges plus connectivity rules out cycles.
    std::vector<char> seen(n_, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex w : adj_[u]) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    if (reached != n_) throw std::invalid_argument("edge set is not connected");
}

std::span<const Vertex> Tree::neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
}

bool Tree::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Vertex> Tree::leaves() const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n_; ++v) {
        if (adj_[v].size() == 1) out.push_back(v);
    }
    return out;
}

void Tree::check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) {
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for tree on " +
                                std::to_string(n_) + " vertices");
    }
}

std::vector<int> distances_from(const Tree& t, Vertex source) {
    t.check_vertex(source);
    std::vector<int> dist(t.order(), -1);
    std::queue<Vertex> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        Vertex u = q.front();
        q.pop();
        for (Vertex w : t.neighbors(u)) {
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

int distance(const Tree& t, Vertex u, Vertex v) {
    t.check_vertex(v);
    return distances_from(t, u)[v];
}

int diameter(const Tree& t) {
    // Double sweep: the farthest vertex from anywhere is a diameter endpoint.
    auto d0 = distances_from(t, 0);
    Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = distances_from(t, far);
    return *std::max_element(d1.begin(), d1.end());
}

std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v) {
    t.check_vertex(u);
    t.check_vertex(v);
    std::vector<Vertex> parent(t.order(), -1);
    std::queue<Vertex> q;
    parent[v] = v;
    q.push(v);
    while (!q.empty()) {
        Vertex a = q.front();
        q.pop();
        if (a == u) break;
        for (Vertex w : t.neighbors(a)) {
            if (parent[w] < 0) {
                parent[w] = a;
                q.push(w);
            }
        }
    }
    std::vector<Vertex> path{u};
    while (path.back() != v) path.push_back(parent[path.back()]);
    return path;
}

std::vector<Vertex> center(const Tree& t) {
    int n = t.order();
    if (n <= 2) {
        std::vector<Vertex> all(n);
        std::iota(all.begin(), all.end(), 0);
        return all;
    }
    std::vector<int> deg(n);
    std::vector<Vertex> layer;
    for (Vertex v = 0; v < n; ++v) {
        deg[v] = t.degree(v);
        if (deg[v] == 1) layer.push_back(v);
    }
    int remaining = n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<Vertex> next;
        for (Vertex leaf : layer) {
            deg[leaf] = 0;
            for (Vertex w : t.neighbors(leaf)) {
                if (deg[w] > 0 && --deg[w] == 1) next.push_back(w);
            }
        }
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

namespace {

std::string rooted_code(const Tree& t, Vertex root) {
    int n = t.order();
    std::vector<Vertex> order;
    std::vector<Vertex> parent(n, -1);
    order.reserve(n);
    order.push_back(root);
    parent[root] = root;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : t.neighbors(order[i])) {
            if (parent[w] < 0) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<std::vector<std::string>> child_codes(n);
    std::vector<std::string> code(n);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        auto& kids = child_codes[v];
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (auto& k : kids) s += k;
        s += ')';
        kids.clear();
        kids.shrink_to_fit();
        if (v != root) {
            child_codes[parent[v]].push_back(std::move(s));
        } else {
            code[v] = std::move(s);
        }
    }
    return code[root];
}

}  // namespace

CanonicalCode canonical_code(const Tree& t) {
    auto c = center(t);
    std::string best = rooted_code(t, c[0]);
    if (c.size() == 2) best = std::min(best, rooted_code(t, c[1]));
    return CanonicalCode{std::move(best)};
}

bool is_isomorphic(const Tree& a, const Tree& b) {
    return a.order() == b.order() && canonical_code(a) == canonical_code(b);
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<long long> parse_ints(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<long long> out;
    std::string tok;
    while (ss >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        }
        if (used != tok.size()) throw ParseError(lineno, "expected an integer, got '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

bool blank(const std::string& s) {
    return std::all_of(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); });
}

}  // namespace

std::vector<Tree> read_trees(std::istream& in) {
    std::vector<Tree> trees;
    std::string line;
    int lineno = 0;
    auto next_line = [&](bool allow_eof) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (!blank(line)) return true;
        }
        if (!allow_eof) throw ParseError(lineno + 1, "unexpected end of input");
        return false;
    };

    while (next_line(true)) {
        int header_line = lineno;
        auto header = parse_ints(line, lineno);
        if (header.size() != 1) throw ParseError(lineno, "expected vertex count on its own line");
        if (header[0] < 1 || header[0] > 1'000'000) throw ParseError(lineno, "vertex count out of range");
        int n = static_cast<int>(header[0]);
        std::vector<Edge> edges;
        for (int i = 0; i + 1 < n; ++i) {
            next_line(false);
            auto uv = parse_ints(line, lineno);
            if (uv.size() != 2) throw ParseError(lineno, "expected an edge 'u v'");
            for (long long x : uv) {
                if (x < 0 || x >= n) {
                    throw ParseError(lineno, "vertex " + std::to_string(x) + " out of range 0.." +
                                                 std::to_string(n - 1));
                }
            }
            edges.emplace_back(static_cast<Vertex>(uv[0]), static_cast<Vertex>(uv[1]));
        }
        try {
            trees.emplace_back(n, std::move(edges));
        } catch (const std::invalid_argument& e) {
            throw ParseError(header_line, e.what());
        }
    }
    return trees;
}

Tree parse_tree(const std::string& text) {
    std::istringstream in(text);
    auto trees = read_trees(in);
    if (trees.size() != 1) {
        throw ParseError(1, "expected exactly one tree, found " + std::to_string(trees.size()));
    }
    return std::move(trees.front());
}

std::string format_tree(const Tree& t) {
    std::string out = std::to_string(t.order()) + "\n";
    for (auto [u, v] : t.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace treewalk
