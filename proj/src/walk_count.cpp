#include "treewalk/walk_count.hpp"

#include <stdexcept>

namespace treewalk {

namespace {

void require_positive_length(int len) {
    if (len < 1) throw std::invalid_argument("walk length must be >= 1");
}

void require_nonnegative_length(int len) {
    if (len < 0) throw std::invalid_argument("walk length must be >= 0");
}

// Sparse vector over the vertex set: dense storage plus the list of touched
// coordinates, so propagating from a single vertex costs only its ball.
class SparseVec {
public:
    explicit SparseVec(int n) : value_(n), mark_(n, 0) {}

    void add(Vertex v, const WalkCount& x) {
        if (!mark_[v]) {
            mark_[v] = 1;
            support_.push_back(v);
        }
        value_[v] += x;
    }
    const WalkCount& operator[](Vertex v) const { return value_[v]; }
    const std::vector<Vertex>& support() const { return support_; }

    void clear() {
        for (Vertex v : support_) {
            value_[v] = 0;
            mark_[v] = 0;
        }
        support_.clear();
    }

private:
    std::vector<WalkCount> value_;
    std::vector<char> mark_;
    std::vector<Vertex> support_;
};

// cur <- A * cur, using `scratch` as the destination buffer.
void multiply(const Tree& t, SparseVec& cur, SparseVec& scratch) {
    scratch.clear();
    for (Vertex u : cur.support()) {
        if (cur[u] == 0) continue;
        for (Vertex w : t.neighbors(u)) scratch.add(w, cur[u]);
    }
    std::swap(cur, scratch);
}

}  // namespace

WalkCount count_closed_walks(const Tree& t, int len) {
    require_positive_length(len);
    if (len % 2 != 0) return 0;
    // (A^len)_vv = |A^(len/2) e_v|^2 since A is symmetric.
    int half = len / 2;
    int n = t.order();
    SparseVec cur(n), scratch(n);
    WalkCount total = 0;
    for (Vertex v = 0; v < n; ++v) {
        cur.clear();
        cur.add(v, 1);
        for (int step = 0; step < half; ++step) multiply(t, cur, scratch);
        for (Vertex u : cur.support()) total += cur[u] * cur[u];
    }
    return total;
}

WalkCount count_walks(const Tree& t, int len) {
    require_positive_length(len);
    int n = t.order();
    std::vector<WalkCount> x(n, 1), y(n);
    for (int step = 0; step < len; ++step) {
        for (Vertex u = 0; u < n; ++u) {
            y[u] = 0;
            for (Vertex w : t.neighbors(u)) y[u] += x[w];
        }
        std::swap(x, y);
    }
    WalkCount total = 0;
    for (auto& v : x) total += v;
    return total;
}

std::vector<WalkCount> walk_counts_from(const Tree& t, int len, Vertex from) {
    require_nonnegative_length(len);
    t.check_vertex(from);
    int n = t.order();
    SparseVec cur(n), scratch(n);
    cur.add(from, 1);
    for (int step = 0; step < len; ++step) multiply(t, cur, scratch);
    std::vector<WalkCount> out(n);
    for (Vertex u : cur.support()) out[u] = cur[u];
    return out;
}

WalkCount count_walks_from(const Tree& t, int len, Vertex from) {
    WalkCount total = 0;
    for (auto& x : walk_counts_from(t, len, from)) total += x;
    return total;
}

WalkCount count_walks_between(const Tree& t, int len, Vertex from, Vertex to) {
    t.check_vertex(to);
    return walk_counts_from(t, len, from)[to];
}

std::vector<Walk> enumerate_walks(const Tree& t, int len, std::optional<Vertex> start,
                                  std::optional<Vertex> end) {
    require_nonnegative_length(len);
    if (start) t.check_vertex(*start);
    std::vector<int> to_end;
    if (end) to_end = distances_from(t, *end);

    std::vector<Walk> out;
    Walk current;
    current.vertices.reserve(len + 1);
    // Depth-first; prune branches that can no longer reach `end` in time.
    auto extend = [&](auto&& self, int remaining) -> void {
        Vertex at = current.vertices.back();
        if (end && to_end[at] > remaining) return;
        if (remaining == 0) {
            if (!end || at == *end) out.push_back(current);
            return;
        }
        for (Vertex w : t.neighbors(at)) {
            current.vertices.push_back(w);
            self(self, remaining - 1);
            current.vertices.pop_back();
        }
    };
    for (Vertex s = 0; s < t.order(); ++s) {
        if (start && s != *start) continue;
        current.vertices.assign(1, s);
        extend(extend, len);
    }
    return out;
}

WalkCount count_ell_paths(const Tree& t, int len) {
    require_positive_length(len);
    long long ordered = 0;
    for (Vertex v = 0; v < t.order(); ++v) {
        for (int d : distances_from(t, v)) {
            if (d == len) ++ordered;
        }
    }
    return WalkCount(ordered / 2);
}

WalkCount wiener(const Tree& t) {
    // Each edge is crossed by s*(n-s) pairs, s = size of the side below it.
    int n = t.order();
    std::vector<Vertex> order{0};
    std::vector<Vertex> parent(n, -1);
    parent[0] = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (Vertex w : t.neighbors(order[i])) {
            if (parent[w] < 0) {
                parent[w] = order[i];
                order.push_back(w);
            }
        }
    }
    std::vector<long long> size(n, 1);
    WalkCount total = 0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        Vertex v = *it;
        if (v == 0) continue;
        size[parent[v]] += size[v];
        total += WalkCount(size[v]) * (n - size[v]);
    }
    return total;
}

}  // namespace treewalk
