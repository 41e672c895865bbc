#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treewalk/kc.hpp"
#include "treewalk/tree.hpp"
#include "treewalk/walk_count.hpp"

namespace treewalk {

// Walk words on a tree T with a distinguished bare path P = p_0..p_k and on
// its KC transform T' = KC(T, p_0, p_k). Path edges are c_1..c_k with
// c_i = p_{i-1} p_i; edges of the component A of p_0 in T - E(P) are
// a-letters and edges of the component B of p_k are b-letters. T' carries
// the same labels, the b-edges at p_k having moved to p_0.

enum class LetterKind : std::uint8_t { a, b, c };

struct Letter {
    LetterKind kind = LetterKind::c;
    int index = 1;  // 1-based

    auto operator<=>(const Letter&) const = default;
    bool operator==(const Letter&) const = default;
};

using Word = std::vector<Letter>;

/// Space-separated tokens `a<i>`, `b<i>`, `c<i>`.
std::string format_word(std::span<const Letter> w);
/// Throws std::invalid_argument on a malformed token.
Word parse_word(std::string_view text);

enum class Host { original, transformed };
enum class Side { a, b };

/// Bit set of admissible letter kinds; restricting a host to a mask gives
/// the induced labelled subgraphs T[A u P], T[B u P] and P.
using KindMask = std::uint8_t;
inline constexpr KindMask kKindA = 1;
inline constexpr KindMask kKindB = 2;
inline constexpr KindMask kKindC = 4;
inline constexpr KindMask kAllKinds = kKindA | kKindB | kKindC;

class PathContext {
public:
    /// Path p_0 = x .. p_k = y; throws std::invalid_argument unless bare.
    PathContext(Tree tree, Vertex x, Vertex y);

    const Tree& tree() const { return tree_; }
    const Tree& transformed() const { return transformed_; }
    const Tree& host(Host h) const { return h == Host::original ? tree_ : transformed_; }
    const BarePath& path() const { return path_; }
    int k() const { return path_.length(); }
    Vertex p(int i) const { return path_.vertices.at(i); }
    int letter_count(LetterKind kind) const;

    Edge endpoints(Letter l, Host h) const;
    /// Throws std::invalid_argument if u-v is not an edge of the host.
    Letter label(Vertex u, Vertex v, Host h) const;
    std::span<const std::pair<Vertex, Letter>> labeled_neighbors(Vertex v, Host h) const;

    /// Component sides as vertex sets of T (path interior excluded).
    const std::vector<Vertex>& side_vertices(Side s) const { return s == Side::a ? a_vertices_ : b_vertices_; }

    /// Smallest side letter on the attaching path end (p_0 for A, p_k for B),
    /// if that side is nonempty.
    std::optional<Letter> designated_letter(Side s) const;

private:
    Tree tree_;
    BarePath path_;
    Tree transformed_;
    std::vector<Edge> a_edges_, c_edges_, b_edges_, b_edges_moved_;
    std::vector<Vertex> a_vertices_, b_vertices_;
    std::vector<std::vector<std::pair<Vertex, Letter>>> adj_[2];
};

PathContext build_context(const Tree& t, Vertex x, Vertex y);

/// Throws std::invalid_argument if the walk is not a walk of the host.
Word encode_walk(const PathContext& ctx, const Walk& walk, Host h);

/// All walks of the host whose word is `word`, restricted to letters in
/// `mask`. Words that repeat one letter throughout have two walks (one per
/// direction); every other nonempty valid word has exactly one. Invalid and
/// empty words give an empty list.
std::vector<Walk> decode_word(const PathContext& ctx, std::span<const Letter> word, Host h,
                              KindMask mask = kAllKinds);

bool is_valid_word(const PathContext& ctx, std::span<const Letter> word, Host h, KindMask mask = kAllKinds);
bool is_closed_word(const PathContext& ctx, std::span<const Letter> word, Host h);
/// Some walk of the word starts at `from` (and ends at `to`, if given).
bool word_in(const PathContext& ctx, std::span<const Letter> word, Host h, KindMask mask,
             std::optional<Vertex> from, std::optional<Vertex> to = std::nullopt);

struct WordQuery {
    KindMask mask = kAllKinds;
    std::optional<Vertex> start;
    bool closed_only = false;
};

/// Distinct words of the given length over walks of the host.
std::set<Word> collect_words(const PathContext& ctx, Host h, int len, const WordQuery& query = {});

// --- block grammar -------------------------------------------------------

enum class BlockKind : std::uint8_t { a, b, c };

struct Block {
    BlockKind kind = BlockKind::c;
    Word letters;
    bool proper = false;  // neither first nor last block
};

/// Blocks in word order. A c-block sits between every two consecutive
/// a/b-blocks (it is empty when the two touch, which only happens in
/// T'-words); leading and trailing c-blocks appear only when nonempty.
struct BlockSeq {
    std::vector<Block> blocks;

    int proper_c_count() const;
    Word concat(std::size_t first, std::size_t last) const;
};

/// Throws std::invalid_argument on an empty word.
BlockSeq block_decompose(std::span<const Letter> word);

enum class WordType { t0, t11, t12, t21, t22 };

std::string_view to_string(WordType t);

/// Throws std::invalid_argument on an empty word.
WordType classify(std::span<const Letter> word);

/// Type from the parity of the proper c-block count and whether the first
/// a precedes the first b; agrees with classify on every nonempty word.
WordType classify_by_parity(std::span<const Letter> word);

/// Per-block membership rules for host words (first/last/proper blocks
/// constrained to start or end at p_0 or p_k).
bool satisfies_block_rules(const PathContext& ctx, std::span<const Letter> word, Host h);

// --- letter maps ---------------------------------------------------------

/// c_i -> c_{k+1-i}; other letters unchanged.
Word conjugate(std::span<const Letter> word, int k);
inline Word conjugate(const PathContext& ctx, std::span<const Letter> word) { return conjugate(word, ctx.k()); }

Word reverse(std::span<const Letter> word);

enum class SplitMode { last_visit_p0, last_visit_pk, first_visit_pk, first_visit_mid };

/// Splits a P-word at the stated visit of its walk. The walk starts at p_k
/// for last_visit_pk and at p_0 otherwise. Throws std::invalid_argument if
/// the block is not such a P-walk or the visit never happens.
std::pair<Word, Word> split_c_block(const PathContext& ctx, std::span<const Letter> cblock, SplitMode mode);

// --- injections ----------------------------------------------------------

/// Type-preserving, length-preserving map from T-words to T'-words. Types
/// 0, 1.1 and 1.2 are mapped for arbitrary words; types 2.1 and 2.2 only for
/// closed words (std::invalid_argument otherwise).
Word f_map(const PathContext& ctx, std::span<const Letter> word);

/// Left inverse of f_map on its image. Throws std::invalid_argument on a
/// T'-word outside the image.
Word f_inverse(const PathContext& ctx, std::span<const Letter> word);

/// Even k. Maps words of T[B u P] from p_0 that use a b-letter to words from
/// p_k by conjugating the prefix up to the first visit to p_{k/2}; applied to
/// an image word it returns the preimage.
Word g_even(const PathContext& ctx, std::span<const Letter> word);

/// Odd k. Maps words of T[B u P] from p_1 that use a b-letter to words from
/// p_k by reflecting, on the path p_0..p_k u, the prefix up to the first visit
/// to p_{(k+1)/2}. `u` must be a neighbor of p_k in B. Self-inverse on the
/// union of domain and image.
Word g_odd(const PathContext& ctx, std::span<const Letter> word, Vertex u);

/// Injection from side words of T starting at the far path end into side
/// words of T' starting at p_0, same length:
///   Side::b: Omega(p_0, T[B u P]) \ Omega(P) -> Omega(p_0, T'[B u P]) \ Omega(P)
///   Side::a: Omega(p_k, T[A u P]) \ Omega(P) -> Omega(p_0, T'[A u P]) \ Omega(P)
/// For odd k the leading c-letter is stripped, the odd reflection applied,
/// and the word extended back to full length by repeating its last letter.
Word g_total(const PathContext& ctx, std::span<const Letter> word, Side side = Side::b);

/// Type-preserving, length-preserving injection from all T-words into
/// T'-words: f_map on types 0, 1.1, 1.2; on types 2.1/2.2 the word is cut
/// before its last proper c-block and mapped as f_map(head) g_total(tail).
Word h_map(const PathContext& ctx, std::span<const Letter> word);

}  // namespace treewalk
