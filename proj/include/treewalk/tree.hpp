#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace treewalk {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Isomorphism-class fingerprint of a free tree: an AHU parenthesis string
/// of the tree rooted at its center (minimum over both rootings when the
/// center is an edge).
struct CanonicalCode {
    std::string code;

    auto operator<=>(const CanonicalCode&) const = default;
    bool operator==(const CanonicalCode&) const = default;
};

/// Undirected tree on vertices 0..n-1. Immutable once constructed; every
/// constructor path validates n-1 edges, no loops/duplicates, connectivity.
class Tree {
public:
    /// Throws std::invalid_argument if the edge set is not a tree on n vertices.
    Tree(int n, std::vector<Edge> edges);

    /// Single-vertex tree.
    Tree() : Tree(1, {}) {}

    int order() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    bool is_leaf(Vertex v) const { return degree(v) == 1; }
    bool has_edge(Vertex u, Vertex v) const;
    std::vector<Vertex> leaves() const;

    /// Throws std::out_of_range for a vertex outside 0..n-1.
    void check_vertex(Vertex v) const;

    bool operator==(const Tree& other) const { return n_ == other.n_ && edges_ == other.edges_; }

private:
    int n_;
    std::vector<Edge> edges_;          // normalized u < v, sorted
    std::vector<std::vector<Vertex>> adj_;  // sorted neighbor lists
};

/// BFS distances from `source`; entry v is d(source, v).
std::vector<int> distances_from(const Tree& t, Vertex source);

int distance(const Tree& t, Vertex u, Vertex v);

int diameter(const Tree& t);

/// Vertices of the unique u-v path, u first.
std::vector<Vertex> path_between(const Tree& t, Vertex u, Vertex v);

/// One or two central vertices (iterative leaf removal).
std::vector<Vertex> center(const Tree& t);

CanonicalCode canonical_code(const Tree& t);

bool is_isomorphic(const Tree& a, const Tree& b);

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Tree text format: `n`, then n-1 lines `u v`. Throws ParseError.
Tree parse_tree(const std::string& text);

/// Reads every tree record from a stream (records back to back, blank lines
/// between records allowed). Throws ParseError with the offending line.
std::vector<Tree> read_trees(std::istream& in);

std::string format_tree(const Tree& t);

}  // namespace treewalk
