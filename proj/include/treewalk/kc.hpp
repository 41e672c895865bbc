#pragma once

#include <set>
#include <vector>

#include "treewalk/tree.hpp"

namespace treewalk {

/// A path p_0..p_k (k >= 1) whose interior vertices all have degree 2 in the
/// host tree. Single edges qualify vacuously.
struct BarePath {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex front() const { return vertices.front(); }
    Vertex back() const { return vertices.back(); }
};

/// The path x..y if it is bare; throws std::invalid_argument otherwise (or if x == y).
BarePath bare_path(const Tree& t, Vertex x, Vertex y);
bool is_bare(const Tree& t, Vertex x, Vertex y);

/// Every bare path, oriented from the smaller endpoint, sorted by endpoints.
std::vector<BarePath> bare_paths(const Tree& t);

/// Moves every neighbor of y other than its path neighbor z over to x.
Tree kc_transform(const Tree& t, Vertex x, Vertex y);

/// Isomorphism classes reachable by one KC move, in either direction.
std::set<CanonicalCode> kc_moves(const Tree& t);

struct Valency {
    Vertex vertex = 0;
    int r = 0;
};

/// Number of vertices at distance exactly len from v.
Valency valency(const Tree& t, Vertex v, int len);

/// Deletes leaf v and re-attaches it as a twin of leaf w (a new leaf on w's
/// neighbor). The clone keeps v's id, so the vertex set is unchanged.
Tree dc_transform(const Tree& t, Vertex v, Vertex w);

}  // namespace treewalk
