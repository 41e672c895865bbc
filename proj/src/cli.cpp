#include "treewalk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "treewalk/extremal.hpp"
#include "treewalk/kc.hpp"
#include "treewalk/tree_gen.hpp"
#include "treewalk/walk_count.hpp"

namespace treewalk {

namespace {

using nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<Tree> load_trees(const std::string& path) {
    if (path == "-") return read_trees(std::cin);
    std::ifstream in(path);
    if (!in) throw InputError("cannot read '" + path + "'");
    try {
        return read_trees(in);
    } catch (const ParseError& e) {
        throw InputError(path + ": " + e.what());
    }
}

Tree load_tree(const std::string& path) {
    auto trees = load_trees(path);
    if (trees.size() != 1) {
        throw InputError(path + ": expected exactly one tree, found " + std::to_string(trees.size()));
    }
    return trees.front();
}

std::pair<Vertex, Vertex> parse_pair(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw std::invalid_argument("expected 'x,y', got '" + text + "'");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

int report_exit(const VerificationReport& r) { return r.passed() ? kExitPass : kExitViolation; }

void emit_report(std::ostream& out, const VerificationReport& r, const std::string& format) {
    out << (format == "json" ? report_json(r) : report_csv(r));
}

// instance ids are `key=value` tokens separated by spaces
std::map<std::string, std::string> instance_fields(const std::string& instance) {
    std::map<std::string, std::string> out;
    std::istringstream in(instance);
    std::string tok;
    while (in >> tok) {
        auto eq = tok.find('=');
        if (eq != std::string::npos) out[tok.substr(0, eq)] = tok.substr(eq + 1);
    }
    return out;
}

// One row per (context, length, map) in the layout
// tree,path,len,map,domain,images,violations; counting inequalities appear
// with their two sides in the domain/images columns.
void emit_injection_table(std::ostream& out, const VerificationReport& r) {
    out << "tree,path,len,map,domain,images,violations\n";
    const std::string images = ": distinct images", failures = ": failures";
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        const Check& c = r.checks[i];
        auto f = instance_fields(c.instance);
        std::string prefix = f["tree"] + "," + f["x"] + "-" + f["y"] + "," + std::to_string(std::stoi(f["len"])) + ",";
        if (c.quantity.ends_with(images) && i + 1 < r.checks.size() &&
            r.checks[i + 1].quantity.ends_with(failures) && r.checks[i + 1].instance == c.instance) {
            const Check& fail = r.checks[i + 1];
            Quantity violations = fail.lhs + (c.pass ? 0 : 1);
            out << prefix << c.quantity.substr(0, c.quantity.size() - images.size()) << ','
                << format_quantity(c.rhs) << ',' << format_quantity(c.lhs) << ',' << format_quantity(violations)
                << '\n';
            ++i;
            continue;
        }
        out << prefix << c.quantity << ',' << format_quantity(c.lhs) << ',' << format_quantity(c.rhs) << ','
            << (c.pass ? 0 : 1) << '\n';
    }
}

std::string json_count(const WalkCount& v) { return v.str(); }

}  // namespace

std::string format_dot(const Tree& t, const PathContext* ctx, Host host, const std::string& name) {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (Vertex v = 0; v < t.order(); ++v) out << "  " << v << ";\n";
    for (auto [u, v] : t.edges()) {
        out << "  " << u << " -- " << v;
        if (ctx) {
            Letter l = ctx->label(u, v, host);
            const char* color = l.kind == LetterKind::a ? "blue" : l.kind == LetterKind::b ? "red" : "black";
            out << " [label=\"" << format_word(std::span(&l, 1)) << "\", color=" << color
                << (l.kind == LetterKind::c ? ", penwidth=2" : "") << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact walk and path counting on trees: KC/DC transformations, walk words, extremal sweeps", "treewalk"};
    app.require_subcommand(1);

    int workers = 0;
    app.add_option("--workers", workers, "Worker threads for sweeps (0 = all cores)")->check(CLI::NonNegativeNumber);

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "All free trees on n vertices, sorted by canonical code");
    int enum_n = 0;
    std::string enum_format = "edgelist", enum_method = "levels";
    enumerate->add_option("--n", enum_n, "Order")->required()->check(CLI::Range(1, kMaxEnumerationOrder));
    enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"edgelist", "pruefer", "dot"}));
    enumerate->add_option("--method", enum_method, "levels, or pruefer for the exhaustive route")
        ->check(CLI::IsMember({"levels", "pruefer"}));

    // count
    auto* count = app.add_subcommand("count", "Walk, path and distance counts");
    std::string count_tree, count_kind;
    int count_len = 0;
    count->add_option("--tree", count_tree, "Tree file ('-' for stdin); several records give CSV")->required();
    count->add_option("--kind", count_kind)->required()->check(CLI::IsMember({"closed", "all", "paths", "wiener"}));
    count->add_option("--len", count_len)->check(CLI::PositiveNumber);

    // kc
    auto* kc = app.add_subcommand("kc", "KC-transformation along a bare path");
    std::string kc_tree, kc_format = "edgelist";
    Vertex kc_x = -1, kc_y = -1;
    bool kc_list = false;
    kc->add_option("--tree", kc_tree)->required();
    kc->add_option("--x", kc_x);
    kc->add_option("--y", kc_y);
    kc->add_flag("--list-moves", kc_list, "Canonical codes of all one-move results");
    kc->add_option("--format", kc_format)->check(CLI::IsMember({"edgelist", "dot"}));

    // dot
    auto* dot = app.add_subcommand("dot", "DOT export, optionally with word labels");
    std::string dot_tree, dot_context, dot_host = "original";
    dot->add_option("--tree", dot_tree)->required();
    dot->add_option("--context", dot_context, "Bare path x,y whose labelling to show");
    dot->add_option("--host", dot_host)->check(CLI::IsMember({"original", "transformed"}));

    // words
    auto* words = app.add_subcommand("words", "Walk words");
    words->require_subcommand(1);
    auto* words_verify = words->add_subcommand("verify", "Injection suites over all small contexts");
    InjectionLimits wv_limits;
    wv_limits.f_max_n = -1;
    std::string wv_format = "table";
    words_verify->add_option("--max-n", wv_limits.max_n)->check(CLI::Range(2, kMaxEnumerationOrder));
    words_verify->add_option("--max-len", wv_limits.max_len)->check(CLI::PositiveNumber);
    words_verify->add_option("--f-max-n", wv_limits.f_max_n, "Order limit for f (default: --max-n)");
    words_verify->add_option("--format", wv_format)->check(CLI::IsMember({"table", "csv", "json"}));

    auto* words_map = words->add_subcommand("map", "Apply one word map");
    std::string wm_tree, wm_context, wm_map, wm_word, wm_side = "b";
    Vertex wm_u = -1;
    words_map->add_option("--tree", wm_tree)->required();
    words_map->add_option("--context", wm_context, "Bare path x,y")->required();
    words_map->add_option("--map", wm_map)
        ->required()
        ->check(CLI::IsMember({"f", "f-inverse", "g-even", "g-odd", "g-total", "h", "conjugate", "classify"}));
    words_map->add_option("--word", wm_word, "Letters such as 'a1 c1 b1'")->required();
    words_map->add_option("--u", wm_u, "Neighbour of p_k in B for g-odd");
    words_map->add_option("--side", wm_side)->check(CLI::IsMember({"a", "b"}));

    auto* words_decode = words->add_subcommand("decode", "Walks spelling a word");
    std::string wd_tree, wd_context, wd_word, wd_host = "original";
    words_decode->add_option("--tree", wd_tree)->required();
    words_decode->add_option("--context", wd_context)->required();
    words_decode->add_option("--word", wd_word)->required();
    words_decode->add_option("--host", wd_host)->check(CLI::IsMember({"original", "transformed"}));

    // verify
    auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
    verify->require_subcommand(1);
    std::string v_format = "csv";
    int v_max_n = 9, v_max_len = 10, v_len = 4, v_f_max_n = -1;
    std::string v_kind = "both";
    std::vector<int> v_lens{4, 6, 8};
    auto* v_closed = verify->add_subcommand("closed-extremal", "Star maximizes, path minimizes closed walks");
    auto* v_kc = verify->add_subcommand("kc-monotone", "Walk counts never drop under KC moves");
    auto* v_inj = verify->add_subcommand("injections", "Word map suites and side-walk inequalities");
    auto* v_path = verify->add_subcommand("path-extremal", "Maximum len-path counts vs brooms");
    auto* v_odd = verify->add_subcommand("odd-path-bound", "len-paths <= n(n-len+1)/4 for odd len");
    auto* v_grid = verify->add_subcommand("broom-grid", "p_opt and f(p) bounds over a grid of orders");
    for (auto* sub : {v_closed, v_kc, v_inj, v_path, v_odd, v_grid}) {
        sub->add_option("--format", v_format)->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--max-n", v_max_n)->check(CLI::PositiveNumber);
    }
    for (auto* sub : {v_closed, v_kc, v_inj}) sub->add_option("--max-len", v_max_len)->check(CLI::PositiveNumber);
    v_kc->add_option("--kind", v_kind)->check(CLI::IsMember({"closed", "all", "both"}));
    v_inj->add_option("--f-max-n", v_f_max_n, "Order limit for f (default: --max-n)");
    v_path->add_option("--len", v_len)->check(CLI::PositiveNumber);
    v_grid->add_option("--lens", v_lens)->delimiter(',');

    // counterexample
    auto* cex = app.add_subcommand("counterexample", "Broom vs double broom: distance sum against walk counts");
    std::string cex_c;
    int cex_k = 0, cex_len = 2;
    std::string cex_format = "json";
    cex->add_option("--c", cex_c, "Rational, e.g. 18/25 or 0.72")->required();
    cex->add_option("--k", cex_k)->required();
    cex->add_option("--len", cex_len);
    cex->add_option("--format", cex_format)->check(CLI::IsMember({"json", "csv"}));

    // broom-profile
    auto* bp = app.add_subcommand("broom-profile", "len-paths of the balanced p-broom for every feasible p");
    int bp_n = 0, bp_len = 0;
    std::string bp_format = "json";
    bp->add_option("--n", bp_n)->required();
    bp->add_option("--len", bp_len)->required();
    bp->add_option("--format", bp_format)->check(CLI::IsMember({"json", "csv"}));

    // dc-reduce
    auto* dc = app.add_subcommand("dc-reduce", "Reduce a tree towards a broom by DC-transformations");
    std::string dc_tree, dc_format = "edgelist";
    int dc_len = 0;
    dc->add_option("--tree", dc_tree)->required();
    dc->add_option("--len", dc_len)->required();
    dc->add_option("--format", dc_format)->check(CLI::IsMember({"edgelist", "dot", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*enumerate) {
            auto trees = enum_method == "pruefer" ? enumerate_free_trees_pruefer(enum_n) : enumerate_free_trees(enum_n);
            for (std::size_t i = 0; i < trees.size(); ++i) {
                if (enum_format == "edgelist") {
                    if (i > 0) out << '\n';
                    out << format_tree(trees[i]);
                } else if (enum_format == "pruefer") {
                    auto seq = to_pruefer(trees[i]);
                    for (std::size_t j = 0; j < seq.size(); ++j) out << (j ? " " : "") << seq[j];
                    out << '\n';
                } else {
                    out << format_dot(trees[i], nullptr, Host::original, "T" + std::to_string(i));
                }
            }
            return kExitPass;
        }

        if (*count) {
            if (count_kind != "wiener" && count_len < 1) throw std::invalid_argument("--len is required for this kind");
            auto value = [&](const Tree& t) -> WalkCount {
                if (count_kind == "closed") return count_closed_walks(t, count_len);
                if (count_kind == "all") return count_walks(t, count_len);
                if (count_kind == "paths") return count_ell_paths(t, count_len);
                return wiener(t);
            };
            auto trees = load_trees(count_tree);
            if (trees.size() == 1) {
                out << value(trees[0]) << '\n';
            } else {
                out << "index,kind,len,value\n";
                for (std::size_t i = 0; i < trees.size(); ++i) {
                    out << i << ',' << count_kind << ',' << (count_kind == "wiener" ? "" : std::to_string(count_len))
                        << ',' << value(trees[i]) << '\n';
                }
            }
            return kExitPass;
        }

        if (*kc) {
            Tree t = load_tree(kc_tree);
            if (kc_list) {
                for (const auto& code : kc_moves(t)) out << code.code << '\n';
                return kExitPass;
            }
            if (kc_x < 0 || kc_y < 0) throw std::invalid_argument("--x and --y are required unless --list-moves");
            if (kc_format == "dot") {
                PathContext ctx(t, kc_x, kc_y);
                out << format_dot(ctx.transformed(), &ctx, Host::transformed, "KC");
            } else {
                out << format_tree(kc_transform(t, kc_x, kc_y));
            }
            return kExitPass;
        }

        if (*dot) {
            Tree t = load_tree(dot_tree);
            if (dot_context.empty()) {
                out << format_dot(t);
            } else {
                auto [x, y] = parse_pair(dot_context);
                PathContext ctx(t, x, y);
                Host h = dot_host == "original" ? Host::original : Host::transformed;
                out << format_dot(ctx.host(h), &ctx, h);
            }
            return kExitPass;
        }

        if (*words_verify) {
            if (wv_limits.f_max_n < 0) wv_limits.f_max_n = wv_limits.max_n;
            auto r = verify_injections(wv_limits, workers);
            if (wv_format == "table") {
                emit_injection_table(out, r);
            } else {
                emit_report(out, r, wv_format);
            }
            return report_exit(r);
        }

        if (*words_map) {
            auto [x, y] = parse_pair(wm_context);
            PathContext ctx(load_tree(wm_tree), x, y);
            Word w = parse_word(wm_word);
            if (wm_map == "classify") {
                out << to_string(classify(w)) << '\n';
                return kExitPass;
            }
            Word result;
            if (wm_map == "f") result = f_map(ctx, w);
            else if (wm_map == "f-inverse") result = f_inverse(ctx, w);
            else if (wm_map == "g-even") result = g_even(ctx, w);
            else if (wm_map == "g-odd") {
                if (wm_u < 0) throw std::invalid_argument("g-odd needs --u");
                result = g_odd(ctx, w, wm_u);
            } else if (wm_map == "g-total") result = g_total(ctx, w, wm_side == "a" ? Side::a : Side::b);
            else if (wm_map == "h") result = h_map(ctx, w);
            else result = conjugate(ctx, w);
            out << format_word(result) << '\n';
            return kExitPass;
        }

        if (*words_decode) {
            auto [x, y] = parse_pair(wd_context);
            PathContext ctx(load_tree(wd_tree), x, y);
            auto walks = decode_word(ctx, parse_word(wd_word), wd_host == "original" ? Host::original : Host::transformed);
            for (const Walk& walk : walks) {
                for (std::size_t i = 0; i < walk.vertices.size(); ++i) out << (i ? " " : "") << walk.vertices[i];
                out << '\n';
            }
            return walks.empty() ? kExitViolation : kExitPass;
        }

        if (*verify) {
            VerificationReport r;
            if (*v_closed) {
                r = verify_closed_extremal(v_max_n, v_max_len, workers);
            } else if (*v_kc) {
                if (v_kind != "all") r = verify_kc_monotone(v_max_n, v_max_len, WalkKind::closed, workers);
                if (v_kind != "closed") {
                    auto all = verify_kc_monotone(v_max_n, v_max_len, WalkKind::all, workers);
                    if (v_kind == "all") {
                        r = std::move(all);
                    } else {
                        r.name = "kc-monotone";
                        r.scope.back().second = "both";
                        r.append(std::move(all));
                    }
                }
            } else if (*v_inj) {
                r = verify_injections({v_max_n, v_max_len, v_f_max_n < 0 ? v_max_n : v_f_max_n}, workers);
            } else if (*v_path) {
                r = verify_path_extremal(v_max_n, v_len, workers);
            } else if (*v_odd) {
                r = verify_odd_path_bound(v_max_n, workers);
            } else {
                r = verify_broom_grid(v_lens, v_max_n, workers);
            }
            emit_report(out, r, v_format);
            return report_exit(r);
        }

        if (*cex) {
            auto r = build_counterexample(parse_rational(cex_c), cex_k, cex_len);
            auto report = counterexample_report(r);
            if (cex_format == "csv") {
                out << report_csv(report);
            } else {
                ordered_json j;
                j["c"] = format_rational(r.c);
                j["k"] = r.k;
                j["len"] = r.len;
                j["T1"] = {{"family", "broom"}, {"path_length", r.path_length}, {"leaves", r.leaves},
                           {"n", r.path_length + 1 + r.leaves}};
                j["T2"] = {{"family", "double_broom_walks"}, {"k", r.k}, {"n", r.k + 1 + r.k}};
                j["D1"] = json_count(r.d1);
                j["D2"] = json_count(r.d2);
                j["closed_length"] = 2 * r.len;
                j["Wc1"] = json_count(r.closed1);
                j["Wc2"] = json_count(r.closed2);
                j["total_length"] = r.len;
                j["Wt1"] = json_count(r.total1);
                j["Wt2"] = json_count(r.total2);
                j["adjacent_edge_pairs1"] = json_count(r.adjacent1);
                j["adjacent_edge_pairs2"] = json_count(r.adjacent2);
                j["verdict"] = r.verdict;
                j["verdict_total"] = r.verdict_total;
                j["leading_order_checks_pass"] = report.passed();
                out << j.dump(2) << '\n';
            }
            return r.verdict ? kExitPass : kExitViolation;
        }

        if (*bp) {
            auto profile = broom_profile(bp_n, bp_len);
            bool ok = profile.within_one;
            for (const auto& row : profile.rows) ok = ok && row.bounds_hold;
            if (bp_format == "csv") {
                out << "p,f,bounds_hold\n";
                for (const auto& row : profile.rows) out << row.p << ',' << row.f << ',' << (row.bounds_hold ? 1 : 0) << '\n';
            } else {
                ordered_json j;
                j["n"] = profile.n;
                j["len"] = profile.len;
                ordered_json rows = ordered_json::array();
                for (const auto& row : profile.rows) {
                    rows.push_back({{"p", row.p}, {"f", json_count(row.f)}, {"bounds_hold", row.bounds_hold}});
                }
                j["rows"] = rows;
                j["argmax"] = profile.argmax;
                j["max"] = json_count(profile.max);
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.6f", profile.p_opt);
                j["p_opt"] = buf;
                j["within_one"] = profile.within_one;
                out << j.dump(2) << '\n';
            }
            return ok ? kExitPass : kExitViolation;
        }

        if (*dc) {
            Tree t = load_tree(dc_tree);
            DcTrace trace = dc_reduce_trace(t, dc_len);
            if (dc_format == "json") {
                ordered_json j;
                j["len"] = dc_len;
                j["converged"] = trace.converged;
                ordered_json moves = ordered_json::array();
                for (std::size_t i = 0; i < trace.moves.size(); ++i) {
                    const auto& m = trace.moves[i];
                    moves.push_back({{"phase", m.phase}, {"removed", m.removed}, {"cloned", m.cloned},
                                     {"paths_after", trace.path_counts[i + 1]}});
                }
                j["paths_before"] = trace.path_counts.front();
                j["moves"] = moves;
                j["paths_after"] = trace.path_counts.back();
                auto p = broom_structure(trace.tree, dc_len);
                j["broom_p"] = p ? ordered_json(*p) : ordered_json(nullptr);
                j["tree"] = format_tree(trace.tree);
                out << j.dump(2) << '\n';
            } else if (dc_format == "dot") {
                out << format_dot(trace.tree);
            } else {
                out << format_tree(trace.tree);
            }
            return trace.converged ? kExitPass : kExitViolation;
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace treewalk
