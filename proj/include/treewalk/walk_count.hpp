#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "treewalk/tree.hpp"

namespace treewalk {

/// Exact non-negative count. Walk numbers grow exponentially in the length.
using WalkCount = boost::multiprecision::cpp_int;

/// Vertex sequence v_0..v_len with consecutive vertices adjacent.
struct Walk {
    std::vector<Vertex> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }
    Vertex start() const { return vertices.front(); }
    Vertex end() const { return vertices.back(); }
    bool closed() const { return vertices.front() == vertices.back(); }

    auto operator<=>(const Walk&) const = default;
    bool operator==(const Walk&) const = default;
};

// Counting uses exact sparse products with the adjacency matrix. Lengths
// must be >= 1, except where noted.

/// trace(A^len): directed closed walks of length len.
WalkCount count_closed_walks(const Tree& t, int len);

/// 1^T A^len 1: all directed walks of length len.
WalkCount count_walks(const Tree& t, int len);

/// Row `from` of A^len; entry v counts walks from `from` to v. len >= 0.
std::vector<WalkCount> walk_counts_from(const Tree& t, int len, Vertex from);

/// Walks of length len starting at `from` (any end). len >= 0.
WalkCount count_walks_from(const Tree& t, int len, Vertex from);

/// (A^len)[from][to]. len >= 0.
WalkCount count_walks_between(const Tree& t, int len, Vertex from, Vertex to);

/// Brute-force listing in lexicographic vertex order, optionally pinned at
/// either end. len = 0 yields the one-vertex walks.
std::vector<Walk> enumerate_walks(const Tree& t, int len, std::optional<Vertex> start = std::nullopt,
                                  std::optional<Vertex> end = std::nullopt);

/// Unordered vertex pairs at distance exactly len (the number of len-paths).
WalkCount count_ell_paths(const Tree& t, int len);

/// Wiener index: sum of d(u,v) over unordered pairs.
WalkCount wiener(const Tree& t);

}  // namespace treewalk
