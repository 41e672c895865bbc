#include "treewalk/extremal.hpp"

#include <algorithm>
#include <cstdio>
#include <set>
#include <stdexcept>

#include "treewalk/kc.hpp"
#include "treewalk/parallel.hpp"
#include "treewalk/tree_gen.hpp"
#include "treewalk/words.hpp"

namespace treewalk {

namespace {

std::string pad(int v) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%02d", v);
    return buf;
}

std::string tree_instance(int n, const CanonicalCode& code) { return "n=" + pad(n) + " tree=" + code.code; }

Quantity to_quantity(const Rational& r) { return Quantity(r.numerator()) / Quantity(r.denominator()); }

Quantity relative_error(const WalkCount& value, const Quantity& target) {
    Quantity d = Quantity(value) / target - 1;
    return d < 0 ? Quantity(-d) : d;
}

struct PathJob {
    Tree tree;
    CanonicalCode code;
    Vertex x, y;
};

// Every free tree n <= max_n with every bare path in both orientations.
std::vector<PathJob> path_jobs(int max_n) {
    std::vector<PathJob> jobs;
    for (int n = 2; n <= max_n; ++n) {
        for (Tree& t : enumerate_free_trees(n)) {
            CanonicalCode code = canonical_code(t);
            for (const BarePath& p : bare_paths(t)) {
                jobs.push_back({t, code, p.front(), p.back()});
                jobs.push_back({t, code, p.back(), p.front()});
            }
        }
    }
    return jobs;
}

KindMask mask_of(LetterKind k) {
    switch (k) {
        case LetterKind::a: return kKindA;
        case LetterKind::b: return kKindB;
        case LetterKind::c: return kKindC;
    }
    return 0;
}

bool uses(std::span<const Letter> w, LetterKind k) {
    return std::any_of(w.begin(), w.end(), [k](const Letter& l) { return l.kind == k; });
}

// Walks of length len from `from` in the labelled subgraph of the host
// restricted to `mask`; counted by dynamic programming, not via words.
WalkCount side_walks(const PathContext& ctx, Host h, KindMask mask, Vertex from, int len) {
    int n = ctx.tree().order();
    std::vector<WalkCount> cur(n), next(n);
    cur[from] = 1;
    for (int step = 0; step < len; ++step) {
        std::fill(next.begin(), next.end(), 0);
        for (Vertex u = 0; u < n; ++u) {
            if (cur[u] == 0) continue;
            for (auto& [w, l] : ctx.labeled_neighbors(u, h)) {
                if (mask & mask_of(l.kind)) next[w] += cur[u];
            }
        }
        std::swap(cur, next);
    }
    WalkCount total = 0;
    for (auto& v : cur) total += v;
    return total;
}

struct MapTally {
    std::size_t domain = 0;
    std::set<Word> images;
    std::size_t failures = 0;
};

template <class Map, class Accept>
MapTally run_map(const std::set<Word>& domain, Map map, Accept accept) {
    MapTally t;
    t.domain = domain.size();
    for (const Word& w : domain) {
        try {
            Word y = map(w);
            if (y.size() != w.size() || !accept(w, y)) ++t.failures;
            t.images.insert(std::move(y));
        } catch (const std::exception&) {
            ++t.failures;
        }
    }
    return t;
}

void add_map_checks(VerificationReport& r, const std::string& inst, const std::string& name, const MapTally& t) {
    r.checks.push_back(make_check(inst, name + ": distinct images", Quantity(t.images.size()), Relation::eq,
                                  Quantity(t.domain)));
    r.checks.push_back(make_check(inst, name + ": failures", Quantity(t.failures), Relation::eq, 0));
}

std::set<Word> words_with(const std::set<Word>& words, LetterKind k) {
    std::set<Word> out;
    for (const Word& w : words) {
        if (uses(w, k)) out.insert(w);
    }
    return out;
}

VerificationReport injection_suite(const PathJob& job, const InjectionLimits& lim) {
    VerificationReport r;
    PathContext ctx(job.tree, job.x, job.y);
    int n = job.tree.order();
    int k = ctx.k();
    Vertex p0 = ctx.p(0), pk = ctx.p(k);
    const KindMask bc = kKindB | kKindC, ac = kKindA | kKindC;
    bool b_nonempty = ctx.letter_count(LetterKind::b) > 0;

    for (int len = 1; len <= lim.max_len; ++len) {
        std::string inst = tree_instance(n, job.code) + " x=" + std::to_string(job.x) + " y=" +
                           std::to_string(job.y) + " len=" + pad(len);

        if (n <= lim.f_max_n) {
            auto closed = collect_words(ctx, Host::original, len, {kAllKinds, std::nullopt, true});
            auto t = run_map(closed, [&](const Word& w) { return f_map(ctx, w); },
                             [&](const Word& w, const Word& y) {
                                 return is_closed_word(ctx, y, Host::transformed) && classify(y) == classify(w) &&
                                        f_inverse(ctx, y) == w;
                             });
            add_map_checks(r, inst, "f closed", t);
            auto closed_after = collect_words(ctx, Host::transformed, len, {kAllKinds, std::nullopt, true});
            r.checks.push_back(make_check(inst, "closed words T vs T'", Quantity(closed.size()), Relation::le,
                                          Quantity(closed_after.size())));
        }
        if (n > lim.max_n) continue;

        auto all = collect_words(ctx, Host::original, len);
        add_map_checks(r, inst, "h", run_map(all, [&](const Word& w) { return h_map(ctx, w); },
                                             [&](const Word& w, const Word& y) {
                                                 return is_valid_word(ctx, y, Host::transformed) &&
                                                        classify(y) == classify(w);
                                             }));

        WalkCount p_from_p0 = side_walks(ctx, Host::original, kKindC, p0, len);
        WalkCount p_from_pk = side_walks(ctx, Host::original, kKindC, pk, len);
        WalkCount b_from_p0 = side_walks(ctx, Host::original, bc, p0, len);

        auto b_words_p0 = words_with(collect_words(ctx, Host::original, len, {bc, p0, false}), LetterKind::b);
        r.checks.push_back(make_check(inst, "b-side words from p0 vs walk count", Quantity(b_words_p0.size()),
                                      Relation::eq, Quantity(b_from_p0 - p_from_p0)));

        if (k % 2 == 0) {
            auto t = run_map(b_words_p0, [&](const Word& w) { return g_even(ctx, w); },
                             [&](const Word& w, const Word& y) {
                                 return uses(y, LetterKind::b) && word_in(ctx, y, Host::original, bc, pk) &&
                                        g_even(ctx, y) == w;
                             });
            add_map_checks(r, inst, "g_even", t);
            r.checks.push_back(make_check(inst, "even-path side lemma", Quantity(b_from_p0 - p_from_p0),
                                          Relation::le,
                                          Quantity(side_walks(ctx, Host::original, bc, pk, len) - p_from_pk)));
        } else if (b_nonempty) {
            auto from_p1 =
                words_with(collect_words(ctx, Host::original, len, {bc, ctx.p(1), false}), LetterKind::b);
            for (auto& [u, l] : ctx.labeled_neighbors(pk, Host::original)) {
                if (l.kind != LetterKind::b) continue;
                auto t = run_map(from_p1, [&](const Word& w) { return g_odd(ctx, w, u); },
                                 [&](const Word& w, const Word& y) {
                                     return uses(y, LetterKind::b) && word_in(ctx, y, Host::original, bc, pk) &&
                                            g_odd(ctx, y, u) == w;
                                 });
                add_map_checks(r, inst, "g_odd u=" + std::to_string(u), t);
            }
            Quantity rhs = Quantity(side_walks(ctx, Host::original, bc, pk, len - 1) -
                                    side_walks(ctx, Host::original, kKindC, pk, len - 1));
            r.checks.push_back(make_check(inst, "odd-path side lemma", Quantity(b_from_p0 - p_from_p0),
                                          Relation::le, rhs));
        }

        auto tb = run_map(b_words_p0, [&](const Word& w) { return g_total(ctx, w, Side::b); },
                          [&](const Word&, const Word& y) {
                              return uses(y, LetterKind::b) && word_in(ctx, y, Host::transformed, bc, p0);
                          });
        add_map_checks(r, inst, "g_total b", tb);
        r.checks.push_back(make_check(inst, "b-side corollary", Quantity(b_from_p0 - p_from_p0), Relation::le,
                                      Quantity(side_walks(ctx, Host::transformed, bc, p0, len) - p_from_p0)));

        WalkCount a_from_pk = side_walks(ctx, Host::original, ac, pk, len);
        auto a_words_pk = words_with(collect_words(ctx, Host::original, len, {ac, pk, false}), LetterKind::a);
        auto ta = run_map(a_words_pk, [&](const Word& w) { return g_total(ctx, w, Side::a); },
                          [&](const Word&, const Word& y) {
                              return uses(y, LetterKind::a) && word_in(ctx, y, Host::transformed, ac, p0);
                          });
        add_map_checks(r, inst, "g_total a", ta);
        r.checks.push_back(make_check(inst, "a-side corollary", Quantity(a_from_pk - p_from_pk), Relation::le,
                                      Quantity(side_walks(ctx, Host::transformed, ac, p0, len) - p_from_p0)));
    }
    return r;
}

}  // namespace

VerificationReport verify_closed_extremal(int max_n, int max_len, int workers) {
    if (max_n < 1 || max_n > kMaxEnumerationOrder) throw std::invalid_argument("max_n out of range");
    VerificationReport report;
    report.name = "closed-extremal";
    report.scope = {{"max_n", std::to_string(max_n)}, {"max_len", std::to_string(max_len)}};

    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    auto parts = parallel_map(orders, [&](int n) {
        VerificationReport r;
        auto trees = enumerate_free_trees(n);
        CanonicalCode star = canonical_code(star_tree(n)), path = canonical_code(path_tree(n));
        for (int len = 2; len <= max_len; len += 2) {
            std::string inst = "n=" + pad(n) + " len=" + pad(len);
            std::vector<WalkCount> counts;
            for (const Tree& t : trees) counts.push_back(count_closed_walks(t, len));
            WalkCount hi = *std::max_element(counts.begin(), counts.end());
            WalkCount lo = *std::min_element(counts.begin(), counts.end());
            WalkCount star_count, path_count;
            int at_hi = 0, at_lo = 0;
            for (std::size_t i = 0; i < trees.size(); ++i) {
                CanonicalCode code = canonical_code(trees[i]);
                if (code == star) star_count = counts[i];
                if (code == path) path_count = counts[i];
                if (counts[i] == hi) {
                    ++at_hi;
                    r.witnesses.push_back({inst, "max", code});
                }
                if (counts[i] == lo) {
                    ++at_lo;
                    r.witnesses.push_back({inst, "min", code});
                }
            }
            r.checks.push_back(make_check(inst, "star closed walks vs max", Quantity(star_count), Relation::eq,
                                          Quantity(hi)));
            r.checks.push_back(make_check(inst, "path closed walks vs min", Quantity(path_count), Relation::eq,
                                          Quantity(lo)));
            if (hi != lo) {
                r.checks.push_back(make_check(inst, "trees attaining max", at_hi, Relation::eq, 1));
                r.checks.push_back(make_check(inst, "trees attaining min", at_lo, Relation::eq, 1));
            }
        }
        return r;
    }, workers);
    for (auto& p : parts) report.append(std::move(p));
    report.sort();
    return report;
}

VerificationReport verify_kc_monotone(int max_n, int max_len, WalkKind kind, int workers) {
    if (max_n < 1 || max_n > kMaxEnumerationOrder) throw std::invalid_argument("max_n out of range");
    if (max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    VerificationReport report;
    report.name = kind == WalkKind::closed ? "kc-monotone closed" : "kc-monotone all";
    report.scope = {{"max_n", std::to_string(max_n)},
                    {"max_len", std::to_string(max_len)},
                    {"kind", kind == WalkKind::closed ? "closed" : "all"}};
    auto count = [kind](const Tree& t, int len) {
        return kind == WalkKind::closed ? count_closed_walks(t, len) : count_walks(t, len);
    };
    std::string quantity = kind == WalkKind::closed ? "closed walks T' vs T" : "walks T' vs T";

    auto parts = parallel_map(path_jobs(max_n), [&](const PathJob& job) {
        VerificationReport r;
        Tree after = kc_transform(job.tree, job.x, job.y);
        for (int len = 1; len <= max_len; ++len) {
            std::string inst = tree_instance(job.tree.order(), job.code) + " x=" + std::to_string(job.x) +
                               " y=" + std::to_string(job.y) + " len=" + pad(len);
            r.checks.push_back(make_check(inst, quantity, Quantity(count(after, len)), Relation::ge,
                                          Quantity(count(job.tree, len))));
        }
        return r;
    }, workers);
    for (auto& p : parts) report.append(std::move(p));
    report.sort();
    return report;
}

VerificationReport verify_injections(const InjectionLimits& limits, int workers) {
    if (limits.max_len < 1) throw std::invalid_argument("max_len must be >= 1");
    int top = std::max(limits.max_n, limits.f_max_n);
    if (top > kMaxEnumerationOrder) throw std::invalid_argument("max_n out of range");
    VerificationReport report;
    report.name = "injections";
    report.scope = {{"max_n", std::to_string(limits.max_n)},
                    {"max_len", std::to_string(limits.max_len)},
                    {"f_max_n", std::to_string(limits.f_max_n)}};
    auto parts = parallel_map(path_jobs(top), [&](const PathJob& job) { return injection_suite(job, limits); },
                              workers);
    for (auto& p : parts) report.append(std::move(p));
    report.sort();
    return report;
}

CounterexampleResult build_counterexample(Rational c, int k, int len) {
    if (len < 2) throw std::invalid_argument("counterexample needs len >= 2");
    if (k < 2 || k % 2 != 0) throw std::invalid_argument("k must be a positive even integer");
    if (c <= 0 || c >= 2) throw std::invalid_argument("c must lie strictly between 0 and 2");
    Rational ck = c * Rational(k);
    if (ck.denominator() != 1) {
        throw std::invalid_argument("ck = " + format_rational(ck) + " is not an integer");
    }
    CounterexampleResult r;
    r.c = c;
    r.k = k;
    r.len = len;
    r.leaves = static_cast<int>(ck.numerator());
    r.path_length = 2 * k - r.leaves;
    Tree t1 = broom(r.path_length, r.leaves);
    Tree t2 = double_broom_walks(k);

    r.d1 = wiener(t1);
    r.d2 = wiener(t2);
    r.closed1 = count_closed_walks(t1, 2 * len);
    r.closed2 = count_closed_walks(t2, 2 * len);
    r.total1 = count_walks(t1, len);
    r.total2 = count_walks(t2, len);
    auto adjacent = [](const Tree& t) {
        WalkCount s = 0;
        for (Vertex v = 0; v < t.order(); ++v) s += WalkCount(t.degree(v)) * (t.degree(v) - 1);
        return s;
    };
    r.adjacent1 = adjacent(t1);
    r.adjacent2 = adjacent(t2);
    r.verdict = r.d1 > r.d2 && r.closed1 > r.closed2;
    r.verdict_total = r.d1 > r.d2 && r.total1 > r.total2;
    return r;
}

VerificationReport counterexample_report(const CounterexampleResult& r) {
    VerificationReport report;
    report.name = "counterexample";
    report.scope = {{"c", format_rational(r.c)}, {"k", std::to_string(r.k)}, {"len", std::to_string(r.len)}};
    std::string inst = "c=" + format_rational(r.c) + " k=" + std::to_string(r.k) + " len=" + pad(r.len);
    auto& ch = report.checks;
    ch.push_back(make_check(inst, "D(T1) vs D(T2)", Quantity(r.d1), Relation::gt, Quantity(r.d2)));
    ch.push_back(make_check(inst, "closed walks (length 2 len) T1 vs T2", Quantity(r.closed1), Relation::gt,
                            Quantity(r.closed2)));
    ch.push_back(make_check(inst, "walks (length len) T1 vs T2", Quantity(r.total1), Relation::gt,
                            Quantity(r.total2)));

    Quantity c = to_quantity(r.c);
    Quantity k = r.k;
    Quantity tol(1, 50);
    ch.push_back(make_check(inst, "relative error D(T1) vs k^3 (2-c)^2 (1+c)/3",
                            relative_error(r.d1, k * k * k * (2 - c) * (2 - c) * (1 + c) / 3), Relation::le, tol));
    ch.push_back(make_check(inst, "relative error D(T2) vs 11 k^3/12",
                            relative_error(r.d2, k * k * k * 11 / 12), Relation::le, tol));
    ch.push_back(make_check(inst, "relative error adjacent edge pairs T1 vs c^2 k^2",
                            relative_error(r.adjacent1, c * c * k * k), Relation::le, tol));
    ch.push_back(make_check(inst, "relative error adjacent edge pairs T2 vs k^2/2",
                            relative_error(r.adjacent2, k * k / 2), Relation::le, tol));
    return report;
}

}  // namespace treewalk
