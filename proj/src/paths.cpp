#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "treewalk/extremal.hpp"
#include "treewalk/kc.hpp"
#include "treewalk/parallel.hpp"
#include "treewalk/tree_gen.hpp"

namespace treewalk {

namespace {

std::string pad(int v, int width = 2) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%0*d", width, v);
    return buf;
}

void require_broom_len(int len) {
    if (len < 4 || len % 2 != 0) throw std::invalid_argument("p-brooms need an even len >= 4");
}

// Leaf pairs across brooms of the balanced p-broom.
long long broom_paths(long long n, long long len, long long p) {
    long long leaves = n - 1 - p * (len - 2) / 2;
    long long q = leaves / p, r = leaves % p;
    long long squares = r * (q + 1) * (q + 1) + (p - r) * q * q;
    return (leaves * leaves - squares) / 2;
}

long long path_count(const Tree& t, int len) { return static_cast<long long>(count_ell_paths(t, len)); }

// All-pairs distances and leaf valencies of a tree.
struct Metric {
    std::vector<std::vector<int>> dist;
    std::vector<Vertex> leaves;
    std::vector<int> r;

    Metric(const Tree& t, int len) : r(t.order(), 0) {
        for (Vertex v = 0; v < t.order(); ++v) {
            dist.push_back(distances_from(t, v));
            r[v] = static_cast<int>(std::count(dist[v].begin(), dist[v].end(), len));
        }
        leaves = t.leaves();
    }
};

}  // namespace

WalkCount predicted_path_maximum(int n, int len) {
    if (n < 1 || len < 1) throw std::invalid_argument("predicted_path_maximum needs n >= 1 and len >= 1");
    if (len == 1) return n - 1;
    if (len == 2) return WalkCount(n - 1) * (n - 2) / 2;
    if (len % 2 != 0) {
        int m = std::max(0, n - len + 1);
        return WalkCount(m / 2) * ((m + 1) / 2);
    }
    WalkCount best = 0;
    for (int p = 1; p <= max_broom_count(n, len); ++p) best = std::max(best, p_broom_path_count(n, len, p));
    return best;
}

int max_broom_count(int n, int len) {
    require_broom_len(len);
    // p_broom_min_order = 1 + p * len / 2
    return std::max(0, (n - 1) / (len / 2));
}

WalkCount p_broom_path_count(int n, int len, int p) {
    require_broom_len(len);
    if (p < 1 || n < p_broom_min_order(len, p)) {
        throw std::invalid_argument("no " + std::to_string(p) + "-broom on " + std::to_string(n) + " vertices");
    }
    return broom_paths(n, len, p);
}

bool within_one_of_p_opt(int n, int len, int p) {
    // p_opt = 1/4 + sqrt(1/16 + (n-1)/m), m = len - 2; scaled by 16 m.
    long long m = len - 2;
    long long a = m + 16LL * (n - 1);
    long long up = 4LL * p + 3, down = 4LL * p - 5;
    bool below = a <= m * up * up;
    bool above = down <= 0 || m * down * down <= a;
    return below && above;
}

bool broom_bounds_hold(int n, int len, int p, const WalkCount& f) {
    WalkCount leaves = WalkCount(n - 1) - WalkCount(p) * (len - 2) / 2;
    WalkCount scaled = WalkCount(8) * p * f;
    WalkCount top = WalkCount(4) * (p - 1) * leaves * leaves;
    return scaled <= top && scaled >= top - WalkCount(p) * p;
}

BroomProfile broom_profile(int n, int len) {
    require_broom_len(len);
    int top = max_broom_count(n, len);
    if (top < 1) throw std::invalid_argument("no p-broom on " + std::to_string(n) + " vertices for len " +
                                             std::to_string(len));
    BroomProfile out;
    out.n = n;
    out.len = len;
    for (int p = 1; p <= top; ++p) {
        BroomRow row{p, p_broom_path_count(n, len, p), false};
        row.bounds_hold = broom_bounds_hold(n, len, p, row.f);
        if (out.rows.empty() || row.f > out.max) {
            out.max = row.f;
            out.argmax = p;
        }
        out.rows.push_back(std::move(row));
    }
    out.p_opt = 0.25 + std::sqrt(1.0 / 16 + double(n - 1) / (len - 2));
    out.within_one = within_one_of_p_opt(n, len, out.argmax);
    return out;
}

VerificationReport verify_broom_grid(const std::vector<int>& lens, int max_n, int workers) {
    VerificationReport report;
    report.name = "broom-grid";
    std::string lens_text;
    for (int len : lens) {
        require_broom_len(len);
        lens_text += (lens_text.empty() ? "" : " ") + std::to_string(len);
    }
    report.scope = {{"lens", lens_text}, {"max_n", std::to_string(max_n)}};

    std::vector<std::pair<int, int>> cells;
    for (int len : lens) {
        for (int n = p_broom_min_order(len, 1); n <= max_n; ++n) cells.emplace_back(len, n);
    }
    auto parts = parallel_map(cells, [](const std::pair<int, int>& cell) {
        auto [len, n] = cell;
        VerificationReport r;
        std::string inst = "len=" + pad(len) + " n=" + pad(n, 5);
        int top = max_broom_count(n, len);
        std::vector<long long> f(top + 1);
        long long best = -1;
        int bound_failures = 0;
        for (int p = 1; p <= top; ++p) {
            f[p] = broom_paths(n, len, p);
            best = std::max(best, f[p]);
            if (!broom_bounds_hold(n, len, p, f[p])) ++bound_failures;
        }
        int far = 0;
        for (int p = 1; p <= top; ++p) {
            if (f[p] == best && !within_one_of_p_opt(n, len, p)) ++far;
        }
        r.checks.push_back(make_check(inst, "maximizers farther than 1 from p_opt", far, Relation::eq, 0));
        r.checks.push_back(make_check(inst, "p violating the f(p) bounds", bound_failures, Relation::eq, 0));
        return r;
    }, workers);
    for (auto& p : parts) report.append(std::move(p));
    report.sort();
    return report;
}

VerificationReport verify_path_extremal(int max_n, int len, int workers) {
    if (len < 1) throw std::invalid_argument("len must be >= 1");
    if (max_n < 1 || max_n > kMaxEnumerationOrder) throw std::invalid_argument("max_n out of range");
    VerificationReport report;
    report.name = "path-extremal";
    report.scope = {{"max_n", std::to_string(max_n)}, {"len", std::to_string(len)}};

    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    auto parts = parallel_map(orders, [len](int n) {
        VerificationReport r;
        std::string inst = "len=" + pad(len) + " n=" + pad(n);
        auto trees = enumerate_free_trees(n);
        std::vector<long long> counts;
        for (const Tree& t : trees) counts.push_back(path_count(t, len));
        long long best = *std::max_element(counts.begin(), counts.end());
        r.checks.push_back(make_check(inst, "max paths vs broom construction", best, Relation::eq,
                                      Quantity(predicted_path_maximum(n, len))));
        if (len == 3) {
            r.checks.push_back(make_check(inst, "max paths vs floor((n-2)^2/4)", best, Relation::eq,
                                          (n - 2) * (n - 2) / 4));
        }
        for (std::size_t i = 0; i < trees.size(); ++i) {
            if (counts[i] != best) continue;
            CanonicalCode code = canonical_code(trees[i]);
            r.witnesses.push_back({inst, "max", code});
            if (best == 0 || len < 3) continue;
            DcTrace trace = dc_reduce_trace(trees[i], len);
            std::string winst = inst + " tree=" + code.code;
            r.checks.push_back(make_check(winst, "dc_reduce converged", trace.converged ? 1 : 0, Relation::eq, 1));
            r.checks.push_back(
                make_check(winst, "paths after dc_reduce", trace.path_counts.back(), Relation::eq, best));
            r.checks.push_back(make_check(winst, "dc_reduce output is a broom",
                                          broom_structure(trace.tree, len).has_value() ? 1 : 0, Relation::eq, 1));
        }
        return r;
    }, workers);
    for (auto& p : parts) report.append(std::move(p));
    report.sort();
    return report;
}

VerificationReport verify_odd_path_bound(int max_n, int workers) {
    if (max_n < 1 || max_n > kMaxEnumerationOrder) throw std::invalid_argument("max_n out of range");
    VerificationReport report;
    report.name = "odd-path-bound";
    report.scope = {{"max_n", std::to_string(max_n)}};
    std::vector<int> orders;
    for (int n = 1; n <= max_n; ++n) orders.push_back(n);
    auto parts = parallel_map(orders, [](int n) {
        VerificationReport r;
        for (const Tree& t : enumerate_free_trees(n)) {
            CanonicalCode code = canonical_code(t);
            // Beyond len = n + 1 the right-hand side is negative and the bound is void.
            for (int len = 1; len <= n + 1; len += 2) {
                std::string inst = "n=" + pad(n) + " tree=" + code.code + " len=" + pad(len);
                r.checks.push_back(make_check(inst, "paths vs n(n-len+1)/4", path_count(t, len), Relation::le,
                                              Quantity(n * (n - len + 1), 4)));
            }
        }
        return r;
    }, workers);
    for (auto& p : parts) report.append(std::move(p));
    report.sort();
    return report;
}

// --- DC reduction --------------------------------------------------------

DcTrace dc_reduce_trace(const Tree& input, int len, int max_moves) {
    if (len < 3) throw std::invalid_argument("dc_reduce needs len >= 3");
    int n = input.order();
    if (max_moves <= 0) max_moves = 50 * n * n + 100;

    DcTrace trace{input, {}, {path_count(input, len)}, false};
    auto apply = [&](int phase, Vertex v, Vertex w) {
        trace.tree = dc_transform(trace.tree, v, w);
        trace.moves.push_back({phase, v, w});
        trace.path_counts.push_back(path_count(trace.tree, len));
    };
    if (n < 3) {
        trace.converged = true;
        return trace;
    }

    while (static_cast<int>(trace.moves.size()) < max_moves) {
        const Tree& t = trace.tree;
        Metric m(t, len);
        const auto& d = m.dist;
        auto anchor = [&](Vertex v) { return t.neighbors(v)[0]; };

        // Phase 1: clone the leaf of larger valency over the smaller one.
        bool moved = false;
        for (Vertex v : m.leaves) {
            for (Vertex w : m.leaves) {
                if (v == w || d[v][w] == len || m.r[v] >= m.r[w] || anchor(w) == v) continue;
                apply(1, v, w);
                moved = true;
                break;
            }
            if (moved) break;
        }
        if (moved) continue;

        // Phase 2: the part of the tree beyond distance len from v becomes clones of v.
        for (Vertex v : m.leaves) {
            for (Vertex w : m.leaves) {
                if (d[v][w] <= len) continue;
                auto path = path_between(t, v, w);
                Vertex cut = path[len];
                std::vector<char> far(n, 0);
                std::vector<Vertex> stack{path[len + 1]};
                far[path[len + 1]] = 1;
                while (!stack.empty()) {
                    Vertex u = stack.back();
                    stack.pop_back();
                    for (Vertex x : t.neighbors(u)) {
                        if (x == cut || far[x]) continue;
                        far[x] = 1;
                        stack.push_back(x);
                    }
                }
                Vertex x = *std::find_if(m.leaves.begin(), m.leaves.end(), [&](Vertex u) { return far[u]; });
                apply(2, x, v);
                moved = true;
                break;
            }
            if (moved) break;
        }
        if (moved) continue;

        // Phase 3: merge the clone classes of leaves at distance strictly
        // between 2 and len, always moving away from the smaller anchor.
        for (Vertex v : m.leaves) {
            for (Vertex w : m.leaves) {
                if (w <= v || d[v][w] <= 2 || d[v][w] >= len) continue;
                if (anchor(v) < anchor(w)) {
                    apply(3, v, w);
                } else {
                    apply(3, w, v);
                }
                moved = true;
                break;
            }
            if (moved) break;
        }
        if (!moved) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

Tree dc_reduce(const Tree& t, int len) {
    DcTrace trace = dc_reduce_trace(t, len);
    if (!trace.converged) throw std::runtime_error("dc_reduce did not converge within its move bound");
    return trace.tree;
}

std::optional<int> broom_structure(const Tree& t, int len) {
    if (len < 3 || t.order() < 3) return std::nullopt;
    auto leaves = t.leaves();
    std::vector<Vertex> anchors;
    for (Vertex v : leaves) anchors.push_back(t.neighbors(v)[0]);
    std::sort(anchors.begin(), anchors.end());
    anchors.erase(std::unique(anchors.begin(), anchors.end()), anchors.end());
    int p = static_cast<int>(anchors.size());
    if (p < 2) return std::nullopt;
    if (len % 2 != 0 && p != 2) return std::nullopt;

    auto from_first = distances_from(t, anchors[0]);
    if (len % 2 != 0) {
        if (from_first[anchors[1]] != len - 2) return std::nullopt;
        if (t.order() != len - 1 + static_cast<int>(leaves.size())) return std::nullopt;
        return 2;
    }
    int h = (len - 2) / 2;
    if (from_first[anchors[1]] != 2 * h) return std::nullopt;
    Vertex c = path_between(t, anchors[0], anchors[1])[h];
    auto from_center = distances_from(t, c);
    for (Vertex a : anchors) {
        if (from_center[a] != h) return std::nullopt;
    }
    for (std::size_t i = 0; i < anchors.size(); ++i) {
        auto di = distances_from(t, anchors[i]);
        for (std::size_t j = i + 1; j < anchors.size(); ++j) {
            if (di[anchors[j]] != 2 * h) return std::nullopt;
        }
    }
    if (t.order() != 1 + p * h + static_cast<int>(leaves.size())) return std::nullopt;
    return p;
}

}  // namespace treewalk
