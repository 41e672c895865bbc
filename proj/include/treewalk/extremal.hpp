#pragma once

#include <optional>
#include <vector>

#include "treewalk/report.hpp"
#include "treewalk/tree.hpp"
#include "treewalk/walk_count.hpp"

namespace treewalk {

// Exhaustive sweeps. `workers` = 0 uses every hardware thread; results do not
// depend on the worker count.

/// For each n <= max_n and even len <= max_len: the star attains the largest
/// closed-walk count over all free trees and the path the smallest, each
/// uniquely unless every tree has the same count.
VerificationReport verify_closed_extremal(int max_n, int max_len, int workers = 0);

enum class WalkKind { closed, all };

/// count(KC(T, x, y)) >= count(T) for every free tree n <= max_n, every bare
/// path in both orientations and every 1 <= len <= max_len.
VerificationReport verify_kc_monotone(int max_n, int max_len, WalkKind kind, int workers = 0);

struct InjectionLimits {
    int max_n = 7;    // g and h suites
    int max_len = 7;
    int f_max_n = 7;  // f on closed words
};

/// Injectivity, validity, length, type and closedness of f, g_even, g_odd,
/// g_total (both sides) and h on every context, plus the two side-walk
/// lemma inequalities and their corollaries by direct counting.
VerificationReport verify_injections(const InjectionLimits& limits, int workers = 0);

struct CounterexampleResult {
    Rational c;
    int k = 0;
    int len = 0;
    int path_length = 0;  // broom T1: path length (2-c)k, ck leaves
    int leaves = 0;
    WalkCount d1, d2;              // Wiener index
    WalkCount closed1, closed2;    // closed walks of length 2 len
    WalkCount total1, total2;      // all walks of length len
    WalkCount adjacent1, adjacent2;  // ordered pairs of adjacent edges
    bool verdict = false;        // d1 > d2 and closed1 > closed2
    bool verdict_total = false;  // d1 > d2 and total1 > total2
};

/// T1 = broom((2-c)k, ck), T2 = double_broom_walks(k). Throws
/// std::invalid_argument unless ck, (2-c)k and k/2 are integers, 0 < c < 2,
/// and len >= 1.
CounterexampleResult build_counterexample(Rational c, int k, int len);

/// Exact verdict checks plus the 2% leading-order checks on D and on the
/// adjacent-edge-pair counts.
VerificationReport counterexample_report(const CounterexampleResult& r);

// --- l-paths -------------------------------------------------------------

/// Maximum number of len-paths over trees on n vertices predicted by the
/// broom constructions: the star for len = 2, the best p-broom for even
/// len >= 4, the balanced double broom for odd len.
WalkCount predicted_path_maximum(int n, int len);

/// For every n <= max_n: the exhaustive maximum of count_ell_paths equals
/// predicted_path_maximum, and each maximizing tree with a positive count
/// reduces under dc_reduce to a broom without losing paths.
VerificationReport verify_path_extremal(int max_n, int len, int workers = 0);

/// count_ell_paths <= n(n-len+1)/4 for every tree n <= max_n, odd len <= n+1.
VerificationReport verify_odd_path_bound(int max_n, int workers = 0);

struct BroomRow {
    int p = 0;
    WalkCount f;  // len-paths of the balanced p-broom
    bool bounds_hold = false;
};

struct BroomProfile {
    int n = 0;
    int len = 0;
    std::vector<BroomRow> rows;  // every feasible p, ascending
    int argmax = 0;              // smallest maximizer
    WalkCount max;
    double p_opt = 0;
    bool within_one = false;  // |argmax - p_opt| <= 1, decided exactly
};

/// Leaf pairs from different brooms of the balanced p-broom, i.e. its number
/// of len-paths. Throws std::invalid_argument if the broom does not exist.
WalkCount p_broom_path_count(int n, int len, int p);

/// Largest p for which a p-broom on n vertices exists (0 if none).
int max_broom_count(int n, int len);

/// |p - (1/4 + sqrt(1/16 + (n-1)/(len-2)))| <= 1, in integer arithmetic.
bool within_one_of_p_opt(int n, int len, int p);

/// C(p,2) L'^2 - p/8 <= f <= C(p,2) L'^2 with L' = (n-1)/p - (len-2)/2.
bool broom_bounds_hold(int n, int len, int p, const WalkCount& f);

/// len even, len >= 4. Throws std::invalid_argument if no p is feasible.
BroomProfile broom_profile(int n, int len);

/// Argmax within one of p_opt and the two-sided bound for every feasible p,
/// over every n in [min feasible, max_n] and every len in `lens`.
VerificationReport verify_broom_grid(const std::vector<int>& lens, int max_n, int workers = 0);

// --- DC reduction --------------------------------------------------------

struct DcMove {
    int phase = 0;  // 1 valency, 2 diameter, 3 clone classes
    Vertex removed = 0;
    Vertex cloned = 0;
};

struct DcTrace {
    Tree tree;
    std::vector<DcMove> moves;
    std::vector<long long> path_counts;  // before the first move and after each
    bool converged = false;
};

/// Applies DC-transformations in three phases until every two leaves lie at
/// distance 2 or len and the diameter is at most len:
///   1. while leaves v, w with d(v,w) != len have r(v) < r(w), clone w for v;
///   2. while d(v,w) > len, replace the far side of v's len-th path vertex by
///      clones of v;
///   3. while 2 < d(v,w) < len, merge the two clone classes.
/// Phase 1 is re-established before every phase 2 or 3 move, so the path
/// count never decreases. Pairs are taken in lexicographic vertex order.
/// len >= 3; `max_moves` = 0 picks a bound from n.
DcTrace dc_reduce_trace(const Tree& t, int len, int max_moves = 0);
Tree dc_reduce(const Tree& t, int len);

/// p if the tree is a (possibly unbalanced) p-broom for len: for even len, p
/// legs of length (len-2)/2 from a center, each leg end carrying at least
/// one leaf; for odd len, p = 2 and a bare path of length len-2 with leaves
/// at both ends.
std::optional<int> broom_structure(const Tree& t, int len);

}  // namespace treewalk
