#include "treewalk/kc.hpp"

#include <algorithm>
#include <stdexcept>

namespace treewalk {

BarePath bare_path(const Tree& t, Vertex x, Vertex y) {
    t.check_vertex(x);
    t.check_vertex(y);
    if (x == y) throw std::invalid_argument("bare path needs distinct endpoints");
    auto path = path_between(t, x, y);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (t.degree(path[i]) != 2) {
            throw std::invalid_argument("path " + std::to_string(x) + ".." + std::to_string(y) +
                                        " is not bare: interior vertex " + std::to_string(path[i]) +
                                        " has degree " + std::to_string(t.degree(path[i])));
        }
    }
    return BarePath{std::move(path)};
}

bool is_bare(const Tree& t, Vertex x, Vertex y) {
    if (x == y) return false;
    auto path = path_between(t, x, y);
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (t.degree(path[i]) != 2) return false;
    }
    return true;
}

std::vector<BarePath> bare_paths(const Tree& t) {
    std::vector<BarePath> out;
    for (Vertex x = 0; x < t.order(); ++x) {
        for (Vertex first : t.neighbors(x)) {
            // Walk away from x while the current vertex is a degree-2 interior vertex.
            std::vector<Vertex> path{x, first};
            while (true) {
                if (path.back() > x) out.push_back(BarePath{path});
                Vertex at = path.back();
                if (t.degree(at) != 2) break;
                auto nb = t.neighbors(at);
                Vertex next = nb[0] == path[path.size() - 2] ? nb[1] : nb[0];
                path.push_back(next);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const BarePath& a, const BarePath& b) {
        return std::pair(a.front(), a.back()) < std::pair(b.front(), b.back());
    });
    return out;
}

Tree kc_transform(const Tree& t, Vertex x, Vertex y) {
    auto path = bare_path(t, x, y);
    Vertex z = path.vertices[path.vertices.size() - 2];
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (auto [u, v] : t.edges()) {
        if (u == y && v != z) {
            edges.emplace_back(x, v);
        } else if (v == y && u != z) {
            edges.emplace_back(x, u);
        } else {
            edges.emplace_back(u, v);
        }
    }
    return Tree(t.order(), std::move(edges));
}

std::set<CanonicalCode> kc_moves(const Tree& t) {
    std::set<CanonicalCode> out;
    for (const auto& p : bare_paths(t)) {
        out.insert(canonical_code(kc_transform(t, p.front(), p.back())));
        out.insert(canonical_code(kc_transform(t, p.back(), p.front())));
    }
    return out;
}

Valency valency(const Tree& t, Vertex v, int len) {
    if (len < 1) throw std::invalid_argument("valency needs len >= 1");
    auto dist = distances_from(t, v);
    return Valency{v, static_cast<int>(std::count(dist.begin(), dist.end(), len))};
}

Tree dc_transform(const Tree& t, Vertex v, Vertex w) {
    t.check_vertex(v);
    t.check_vertex(w);
    if (v == w) throw std::invalid_argument("DC transform needs two distinct leaves");
    if (!t.is_leaf(v) || !t.is_leaf(w)) throw std::invalid_argument("DC transform applies to leaves only");
    Vertex anchor = t.neighbors(w)[0];
    if (anchor == v) throw std::invalid_argument("DC transform undefined on a single edge");
    std::vector<Edge> edges;
    edges.reserve(t.edges().size());
    for (auto [a, b] : t.edges()) {
        if (a == v || b == v) {
            edges.emplace_back(v, anchor);
        } else {
            edges.emplace_back(a, b);
        }
    }
    return Tree(t.order(), std::move(edges));
}

}  // namespace treewalk
