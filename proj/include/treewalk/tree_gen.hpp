#pragma once

#include <span>
#include <string>
#include <vector>

#include "treewalk/tree.hpp"

namespace treewalk {

/// Largest order accepted by enumerate_free_trees.
inline constexpr int kMaxEnumerationOrder = 18;
/// Largest order accepted by the exhaustive Pruefer enumeration (n^(n-2) sequences).
inline constexpr int kMaxPrueferOrder = 10;

Tree from_pruefer(std::span<const Vertex> seq, int n);
std::vector<Vertex> to_pruefer(const Tree& t);

/// One representative per isomorphism class, sorted by canonical code.
/// Generated from rooted level sequences, deduplicated by canonical code.
std::vector<Tree> enumerate_free_trees(int n);

/// Same contract as enumerate_free_trees, computed by decoding every Pruefer
/// sequence and deduplicating. Exponential; kept as an independent route.
std::vector<Tree> enumerate_free_trees_pruefer(int n);

enum class Family { path, star, broom, double_broom_walks, double_broom_paths, p_broom };

/// Parametric description of a named family. Only the fields relevant to
/// `kind` are read:
///   path, star:          n
///   broom:               path_length, leaves
///   double_broom_walks:  k
///   double_broom_paths:  n, len
///   p_broom:             n, len, p
struct FamilySpec {
    Family kind = Family::path;
    int n = 0;
    int path_length = 0;
    int leaves = 0;
    int k = 0;
    int len = 0;
    int p = 0;
};

Tree make_family(const FamilySpec& spec);

Tree path_tree(int n);
Tree star_tree(int n);
/// Path 0..path_length with `leaves` extra leaves on vertex path_length.
Tree broom(int path_length, int leaves);
/// Path of length k with floor(k/2) leaves on one end and ceil(k/2) on the other.
Tree double_broom_walks(int k);
/// Path of length len-2 with the remaining n-len+1 vertices split as evenly as
/// possible between its two ends.
Tree double_broom_paths(int n, int len);
/// Vertex 0 is the center; p legs of length (len-2)/2; the n-1-p(len-2)/2
/// leaves go to leg ends as evenly as possible, leftovers to the lowest legs.
Tree p_broom(int n, int len, int p);

/// Leaves per leg end of p_broom(n, len, p), leg index order.
std::vector<int> p_broom_leaf_counts(int n, int len, int p);

/// Smallest n for which p_broom(n, len, p) exists (one leaf per leg end).
int p_broom_min_order(int len, int p);

}  // namespace treewalk
