#include "treewalk/words.hpp"

#include <algorithm>
#include <charconv>
#include <queue>
#include <stdexcept>

namespace treewalk {

namespace {

char kind_char(LetterKind k) {
    switch (k) {
        case LetterKind::a: return 'a';
        case LetterKind::b: return 'b';
        case LetterKind::c: return 'c';
    }
    return '?';
}

KindMask mask_of(LetterKind k) {
    switch (k) {
        case LetterKind::a: return kKindA;
        case LetterKind::b: return kKindB;
        case LetterKind::c: return kKindC;
    }
    return 0;
}

void append(Word& out, std::span<const Letter> part) { out.insert(out.end(), part.begin(), part.end()); }

bool contains_kind(std::span<const Letter> w, LetterKind k) {
    return std::any_of(w.begin(), w.end(), [k](const Letter& l) { return l.kind == k; });
}

}  // namespace

std::string format_word(std::span<const Letter> w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out += ' ';
        out += kind_char(w[i].kind);
        out += std::to_string(w[i].index);
    }
    return out;
}

Word parse_word(std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t') {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && text[j] != ' ' && text[j] != '\t') ++j;
        std::string_view tok = text.substr(i, j - i);
        Letter l;
        switch (tok[0]) {
            case 'a': l.kind = LetterKind::a; break;
            case 'b': l.kind = LetterKind::b; break;
            case 'c': l.kind = LetterKind::c; break;
            default: throw std::invalid_argument("bad letter '" + std::string(tok) + "'");
        }
        auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), l.index);
        if (ec != std::errc() || ptr != tok.data() + tok.size() || l.index < 1) {
            throw std::invalid_argument("bad letter '" + std::string(tok) + "'");
        }
        out.push_back(l);
        i = j;
    }
    return out;
}

// --- context -------------------------------------------------------------

PathContext::PathContext(Tree tree, Vertex x, Vertex y)
    : tree_(std::move(tree)), path_(bare_path(tree_, x, y)), transformed_(kc_transform(tree_, x, y)) {
    int k = path_.length();
    for (int i = 1; i <= k; ++i) c_edges_.emplace_back(path_.vertices[i - 1], path_.vertices[i]);

    std::vector<char> on_path(tree_.order(), 0);
    for (Vertex v : path_.vertices) on_path[v] = 1;

    // Side components in BFS order; edges stored as (parent, child).
    auto side = [&](Vertex root, std::vector<Edge>& edges, std::vector<Vertex>& verts) {
        std::vector<char> seen(tree_.order(), 0);
        std::queue<Vertex> q;
        q.push(root);
        seen[root] = 1;
        verts.push_back(root);
        while (!q.empty()) {
            Vertex u = q.front();
            q.pop();
            for (Vertex w : tree_.neighbors(u)) {
                if (seen[w] || on_path[w]) continue;
                seen[w] = 1;
                edges.emplace_back(u, w);
                verts.push_back(w);
                q.push(w);
            }
        }
    };
    side(p(0), a_edges_, a_vertices_);
    side(p(k), b_edges_, b_vertices_);
    for (auto [u, w] : b_edges_) b_edges_moved_.emplace_back(u == p(k) ? p(0) : u, w);

    for (int h = 0; h < 2; ++h) {
        auto& adj = adj_[h];
        adj.assign(tree_.order(), {});
        auto add = [&](Edge e, Letter l) {
            adj[e.first].emplace_back(e.second, l);
            adj[e.second].emplace_back(e.first, l);
        };
        for (std::size_t i = 0; i < a_edges_.size(); ++i) add(a_edges_[i], {LetterKind::a, int(i) + 1});
        const auto& bs = h == 0 ? b_edges_ : b_edges_moved_;
        for (std::size_t i = 0; i < bs.size(); ++i) add(bs[i], {LetterKind::b, int(i) + 1});
        for (std::size_t i = 0; i < c_edges_.size(); ++i) add(c_edges_[i], {LetterKind::c, int(i) + 1});
        for (auto& nb : adj) std::sort(nb.begin(), nb.end(), [](auto& l, auto& r) { return l.second < r.second; });
    }

    if (a_edges_.size() + b_edges_.size() + c_edges_.size() != tree_.edges().size()) {
        throw std::logic_error("edge labelling does not cover the tree");
    }
}

int PathContext::letter_count(LetterKind kind) const {
    switch (kind) {
        case LetterKind::a: return static_cast<int>(a_edges_.size());
        case LetterKind::b: return static_cast<int>(b_edges_.size());
        case LetterKind::c: return static_cast<int>(c_edges_.size());
    }
    return 0;
}

Edge PathContext::endpoints(Letter l, Host h) const {
    const std::vector<Edge>* edges = nullptr;
    switch (l.kind) {
        case LetterKind::a: edges = &a_edges_; break;
        case LetterKind::b: edges = h == Host::original ? &b_edges_ : &b_edges_moved_; break;
        case LetterKind::c: edges = &c_edges_; break;
    }
    if (l.index < 1 || l.index > static_cast<int>(edges->size())) {
        throw std::invalid_argument("no edge labelled " + format_word(std::span(&l, 1)));
    }
    return (*edges)[l.index - 1];
}

Letter PathContext::label(Vertex u, Vertex v, Host h) const {
    tree_.check_vertex(u);
    tree_.check_vertex(v);
    for (auto& [w, l] : adj_[h == Host::original ? 0 : 1][u]) {
        if (w == v) return l;
    }
    throw std::invalid_argument(std::to_string(u) + "-" + std::to_string(v) + " is not an edge of the host");
}

std::span<const std::pair<Vertex, Letter>> PathContext::labeled_neighbors(Vertex v, Host h) const {
    tree_.check_vertex(v);
    return adj_[h == Host::original ? 0 : 1][v];
}

std::optional<Letter> PathContext::designated_letter(Side s) const {
    Vertex end = s == Side::a ? p(0) : p(k());
    LetterKind kind = s == Side::a ? LetterKind::a : LetterKind::b;
    for (auto& [w, l] : labeled_neighbors(end, Host::original)) {
        if (l.kind == kind) return l;  // neighbor lists are sorted by letter
    }
    return std::nullopt;
}

PathContext build_context(const Tree& t, Vertex x, Vertex y) { return PathContext(t, x, y); }

// --- walks and words -----------------------------------------------------

Word encode_walk(const PathContext& ctx, const Walk& walk, Host h) {
    if (walk.vertices.empty()) throw std::invalid_argument("empty walk");
    Word out;
    out.reserve(walk.vertices.size() - 1);
    for (std::size_t i = 0; i + 1 < walk.vertices.size(); ++i) {
        out.push_back(ctx.label(walk.vertices[i], walk.vertices[i + 1], h));
    }
    return out;
}

std::vector<Walk> decode_word(const PathContext& ctx, std::span<const Letter> word, Host h, KindMask mask) {
    if (word.empty()) return {};
    for (const Letter& l : word) {
        if (!(mask & mask_of(l.kind))) return {};
        if (l.index < 1 || l.index > ctx.letter_count(l.kind)) return {};
    }
    auto [u0, v0] = ctx.endpoints(word[0], h);
    std::vector<Walk> out;
    for (Vertex start : {u0, v0}) {
        Walk walk;
        walk.vertices.reserve(word.size() + 1);
        walk.vertices.push_back(start);
        bool ok = true;
        for (const Letter& l : word) {
            auto [x, y] = ctx.endpoints(l, h);
            Vertex at = walk.vertices.back();
            if (at == x) {
                walk.vertices.push_back(y);
            } else if (at == y) {
                walk.vertices.push_back(x);
            } else {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(std::move(walk));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid_word(const PathContext& ctx, std::span<const Letter> word, Host h, KindMask mask) {
    return !decode_word(ctx, word, h, mask).empty();
}

bool is_closed_word(const PathContext& ctx, std::span<const Letter> word, Host h) {
    auto walks = decode_word(ctx, word, h);
    return std::any_of(walks.begin(), walks.end(), [](const Walk& w) { return w.closed(); });
}

bool word_in(const PathContext& ctx, std::span<const Letter> word, Host h, KindMask mask,
             std::optional<Vertex> from, std::optional<Vertex> to) {
    if (word.empty()) return !(from && to) || *from == *to;
    for (const Walk& w : decode_word(ctx, word, h, mask)) {
        if ((!from || w.start() == *from) && (!to || w.end() == *to)) return true;
    }
    return false;
}

std::set<Word> collect_words(const PathContext& ctx, Host h, int len, const WordQuery& query) {
    if (len < 0) throw std::invalid_argument("word length must be >= 0");
    std::set<Word> out;
    if (len == 0) {
        out.insert(Word{});
        return out;
    }
    Word current;
    current.reserve(len);
    Vertex origin = 0;
    auto extend = [&](auto&& self, Vertex at, int remaining) -> void {
        if (remaining == 0) {
            if (!query.closed_only || at == origin) out.insert(current);
            return;
        }
        for (auto& [w, l] : ctx.labeled_neighbors(at, h)) {
            if (!(query.mask & mask_of(l.kind))) continue;
            current.push_back(l);
            self(self, w, remaining - 1);
            current.pop_back();
        }
    };
    for (Vertex s = 0; s < ctx.tree().order(); ++s) {
        if (query.start && s != *query.start) continue;
        origin = s;
        extend(extend, s, len);
    }
    return out;
}

// --- blocks --------------------------------------------------------------

int BlockSeq::proper_c_count() const {
    return static_cast<int>(std::count_if(blocks.begin(), blocks.end(),
                                          [](const Block& b) { return b.kind == BlockKind::c && b.proper; }));
}

Word BlockSeq::concat(std::size_t first, std::size_t last) const {
    Word out;
    for (std::size_t i = first; i < last && i < blocks.size(); ++i) append(out, blocks[i].letters);
    return out;
}

BlockSeq block_decompose(std::span<const Letter> word) {
    if (word.empty()) throw std::invalid_argument("block decomposition of the empty word");
    struct Run {
        LetterKind kind;
        std::size_t first, last;
    };
    std::vector<Run> runs;
    for (std::size_t i = 0; i < word.size(); ++i) {
        LetterKind k = word[i].kind;
        if (k == LetterKind::c) continue;
        if (!runs.empty() && runs.back().kind == k) {
            runs.back().last = i;
        } else {
            runs.push_back({k, i, i});
        }
    }

    BlockSeq seq;
    auto push = [&](BlockKind kind, std::size_t from, std::size_t to) {
        seq.blocks.push_back(Block{kind, Word(word.begin() + from, word.begin() + to), false});
    };
    if (runs.empty()) {
        push(BlockKind::c, 0, word.size());
    } else {
        if (runs.front().first > 0) push(BlockKind::c, 0, runs.front().first);
        for (std::size_t j = 0; j < runs.size(); ++j) {
            push(runs[j].kind == LetterKind::a ? BlockKind::a : BlockKind::b, runs[j].first, runs[j].last + 1);
            if (j + 1 < runs.size()) push(BlockKind::c, runs[j].last + 1, runs[j + 1].first);
        }
        if (runs.back().last + 1 < word.size()) push(BlockKind::c, runs.back().last + 1, word.size());
    }
    for (std::size_t i = 1; i + 1 < seq.blocks.size(); ++i) seq.blocks[i].proper = true;
    return seq;
}

std::string_view to_string(WordType t) {
    switch (t) {
        case WordType::t0: return "0";
        case WordType::t11: return "1.1";
        case WordType::t12: return "1.2";
        case WordType::t21: return "2.1";
        case WordType::t22: return "2.2";
    }
    return "?";
}

WordType classify(std::span<const Letter> word) {
    auto seq = block_decompose(word);
    std::optional<BlockKind> first, last;
    for (const Block& b : seq.blocks) {
        if (b.kind == BlockKind::c) continue;
        if (!first) first = b.kind;
        last = b.kind;
    }
    if (!first) return WordType::t0;
    if (*first == BlockKind::a) return *last == BlockKind::a ? WordType::t11 : WordType::t21;
    return *last == BlockKind::b ? WordType::t12 : WordType::t22;
}

WordType classify_by_parity(std::span<const Letter> word) {
    auto seq = block_decompose(word);
    auto first = std::find_if(word.begin(), word.end(), [](const Letter& l) { return l.kind != LetterKind::c; });
    if (first == word.end()) return WordType::t0;
    bool a_first = first->kind == LetterKind::a;
    bool even = seq.proper_c_count() % 2 == 0;
    if (even) return a_first ? WordType::t11 : WordType::t12;
    return a_first ? WordType::t21 : WordType::t22;
}

bool satisfies_block_rules(const PathContext& ctx, std::span<const Letter> word, Host h) {
    if (word.empty()) return false;
    auto seq = block_decompose(word);
    const auto& bl = seq.blocks;
    Vertex p0 = ctx.p(0), pk = ctx.p(ctx.k());
    // In T both sides keep their own attachment; in T' everything meets at p_0.
    Vertex a_end = p0;
    Vertex b_end = h == Host::original ? pk : p0;
    auto end_of = [&](BlockKind k) { return k == BlockKind::a ? a_end : b_end; };

    for (std::size_t i = 0; i < bl.size(); ++i) {
        const Block& b = bl[i];
        bool first = i == 0, last = i + 1 == bl.size();
        std::optional<Vertex> from, to;
        KindMask mask = kKindC;
        if (b.kind == BlockKind::c) {
            if (!first) from = end_of(bl[i - 1].kind);
            if (!last) to = end_of(bl[i + 1].kind);
        } else {
            mask |= b.kind == BlockKind::a ? kKindA : kKindB;
            if (!first) from = end_of(b.kind);
            if (!last) to = end_of(b.kind);
        }
        if (!word_in(ctx, b.letters, h, mask, from, to)) return false;
    }
    return true;
}

// --- letter maps ---------------------------------------------------------

Word conjugate(std::span<const Letter> word, int k) {
    Word out(word.begin(), word.end());
    for (Letter& l : out) {
        if (l.kind == LetterKind::c) l.index = k + 1 - l.index;
    }
    return out;
}

Word reverse(std::span<const Letter> word) { return Word(word.rbegin(), word.rend()); }

namespace {

// Prefix length of `w` up to the first moment its walk stands at path
// position `target`, walking from position `start` on p_0..p_k, optionally
// extended by the edge `ext` from p_k to an extra position k+1.
std::size_t first_visit(std::span<const Letter> w, int start, int target, int k, std::optional<Letter> ext) {
    int pos = start;
    for (std::size_t t = 0;; ++t) {
        if (pos == target) return t;
        if (t == w.size()) throw std::invalid_argument("walk never visits the split vertex");
        const Letter& l = w[t];
        if (l.kind == LetterKind::c) {
            if (pos == l.index - 1) {
                pos = l.index;
            } else if (pos == l.index) {
                pos = l.index - 1;
            } else {
                throw std::invalid_argument("not a path walk from the expected start");
            }
        } else if (ext && l == *ext) {
            if (pos == k) {
                pos = k + 1;
            } else if (pos == k + 1) {
                pos = k;
            } else {
                throw std::invalid_argument("not a path walk from the expected start");
            }
        } else {
            throw std::invalid_argument("walk leaves the path before the split vertex");
        }
    }
}

// Path positions of a P-word walked from `start`.
std::vector<int> path_positions(std::span<const Letter> w, int start, int k) {
    std::vector<int> pos{start};
    for (const Letter& l : w) {
        int at = pos.back();
        if (l.kind != LetterKind::c || l.index < 1 || l.index > k) {
            throw std::invalid_argument("c-block contains a non-path letter");
        }
        if (at == l.index - 1) {
            pos.push_back(l.index);
        } else if (at == l.index) {
            pos.push_back(l.index - 1);
        } else {
            throw std::invalid_argument("c-block is not a path walk from the expected start");
        }
    }
    return pos;
}

Word g_even_core(std::span<const Letter> w, int start, int k) {
    std::size_t t = first_visit(w, start, k / 2, k, std::nullopt);
    Word out = conjugate(w.first(t), k);
    append(out, w.subspan(t));
    return out;
}

// Reflection of the extended path p_0..p_k,u about its midpoint p_{(k+1)/2}.
Letter reflect(const Letter& l, int k, const Letter& ext) {
    if (l == ext) return Letter{LetterKind::c, 1};
    if (l.kind == LetterKind::c) {
        if (l.index == 1) return ext;
        return Letter{LetterKind::c, k + 2 - l.index};
    }
    throw std::invalid_argument("letter is not on the extended path");
}

Word g_odd_core(std::span<const Letter> w, int start, int k, const Letter& ext) {
    std::size_t t = first_visit(w, start, (k + 1) / 2, k, ext);
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w.first(t)) out.push_back(reflect(l, k, ext));
    append(out, w.subspan(t));
    return out;
}

void require_valid(const PathContext& ctx, std::span<const Letter> word, Host h) {
    if (!is_valid_word(ctx, word, h)) {
        throw std::invalid_argument("'" + format_word(word) + "' is not a word of " +
                                    (h == Host::original ? "T" : "T'"));
    }
}

}  // namespace

std::pair<Word, Word> split_c_block(const PathContext& ctx, std::span<const Letter> cblock, SplitMode mode) {
    int k = ctx.k();
    int start = mode == SplitMode::last_visit_pk ? k : 0;
    int target = 0;
    bool last = false;
    switch (mode) {
        case SplitMode::last_visit_p0: target = 0; last = true; break;
        case SplitMode::last_visit_pk: target = k; last = true; break;
        case SplitMode::first_visit_pk: target = k; break;
        case SplitMode::first_visit_mid:
            if (k % 2 != 0) throw std::invalid_argument("midpoint split needs an even path length");
            target = k / 2;
            break;
    }
    auto pos = path_positions(cblock, start, k);
    std::optional<std::size_t> t;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        if (pos[i] == target) {
            t = i;
            if (!last) break;
        }
    }
    if (!t) throw std::invalid_argument("the walk of the c-block never makes the requested visit");
    return {Word(cblock.begin(), cblock.begin() + *t), Word(cblock.begin() + *t, cblock.end())};
}

Word f_map(const PathContext& ctx, std::span<const Letter> word) {
    require_valid(ctx, word, Host::original);
    WordType type = classify(word);
    if (type == WordType::t0) return Word(word.begin(), word.end());
    if ((type == WordType::t21 || type == WordType::t22) && !is_closed_word(ctx, word, Host::original)) {
        throw std::invalid_argument("f is defined on type " + std::string(to_string(type)) + " for closed words only");
    }
    const auto bl = block_decompose(word).blocks;
    auto between = [&](std::size_t i, BlockKind before, BlockKind after) {
        return i > 0 && i + 1 < bl.size() && bl[i - 1].kind == before && bl[i + 1].kind == after;
    };

    Word out;
    out.reserve(word.size());
    Word pending;
    if (type == WordType::t11 || type == WordType::t21) {
        // A C B  ->  A C' conj(B) conj(rev(C''))  with C = C' C'' split at the last visit to p_0.
        for (std::size_t i = 0; i < bl.size(); ++i) {
            const Block& b = bl[i];
            if (b.kind == BlockKind::c && between(i, BlockKind::a, BlockKind::b)) {
                auto [head, tail] = split_c_block(ctx, b.letters, SplitMode::last_visit_p0);
                append(out, head);
                pending = conjugate(ctx, reverse(tail));
            } else if (b.kind == BlockKind::b) {
                append(out, conjugate(ctx, b.letters));
                append(out, pending);
                pending.clear();
            } else {
                append(out, b.letters);
            }
        }
    } else {
        // B C A  ->  conj(B C') A rev(C'')  with C = C' C'' split at the last visit to p_k;
        // everything outside the a-blocks is conjugated.
        for (std::size_t i = 0; i < bl.size(); ++i) {
            const Block& b = bl[i];
            if (b.kind == BlockKind::c && between(i, BlockKind::b, BlockKind::a)) {
                auto [head, tail] = split_c_block(ctx, b.letters, SplitMode::last_visit_pk);
                append(out, conjugate(ctx, head));
                pending = reverse(tail);
            } else if (b.kind == BlockKind::a) {
                append(out, b.letters);
                append(out, pending);
                pending.clear();
            } else {
                append(out, conjugate(ctx, b.letters));
            }
        }
    }
    return out;
}

Word f_inverse(const PathContext& ctx, std::span<const Letter> word) {
    require_valid(ctx, word, Host::transformed);
    WordType type = classify(word);
    if (type == WordType::t0) return Word(word.begin(), word.end());
    const auto bl = block_decompose(word).blocks;

    // The c-block after each moved block starts at p_0 and its first visit to
    // p_k separates the relocated path segment from the original c-block.
    auto split_after = [&](std::size_t i) {
        if (i + 1 >= bl.size() || bl[i + 1].kind != BlockKind::c) {
            throw std::invalid_argument("'" + format_word(word) + "' is not in the image of f");
        }
        return split_c_block(ctx, bl[i + 1].letters, SplitMode::first_visit_pk);
    };

    Word out;
    out.reserve(word.size());
    if (type == WordType::t11 || type == WordType::t21) {
        for (std::size_t i = 0; i < bl.size(); ++i) {
            const Block& b = bl[i];
            if (b.kind == BlockKind::b) {
                auto [moved, rest] = split_after(i);
                append(out, conjugate(ctx, reverse(moved)));
                append(out, conjugate(ctx, b.letters));
                append(out, rest);
                ++i;
            } else {
                append(out, b.letters);
            }
        }
    } else {
        for (std::size_t i = 0; i < bl.size(); ++i) {
            const Block& b = bl[i];
            if (b.kind == BlockKind::a) {
                auto [moved, rest] = split_after(i);
                append(out, reverse(moved));
                append(out, b.letters);
                append(out, conjugate(ctx, rest));
                ++i;
            } else {
                append(out, conjugate(ctx, b.letters));
            }
        }
    }
    return out;
}

Word g_even(const PathContext& ctx, std::span<const Letter> word) {
    int k = ctx.k();
    if (k % 2 != 0) throw std::invalid_argument("g_even needs a path of even length");
    if (!contains_kind(word, LetterKind::b)) throw std::invalid_argument("g_even needs a word using a b-letter");
    KindMask mask = kKindB | kKindC;
    int start;
    if (word_in(ctx, word, Host::original, mask, ctx.p(0))) {
        start = 0;
    } else if (word_in(ctx, word, Host::original, mask, ctx.p(k))) {
        start = k;
    } else {
        throw std::invalid_argument("g_even needs a T[B u P]-word starting at p_0 or p_k");
    }
    return g_even_core(word, start, k);
}

Word g_odd(const PathContext& ctx, std::span<const Letter> word, Vertex u) {
    int k = ctx.k();
    if (k % 2 == 0) throw std::invalid_argument("g_odd needs a path of odd length");
    Vertex pk = ctx.p(k);
    if (!ctx.tree().has_edge(pk, u) || u == ctx.p(k - 1)) {
        throw std::invalid_argument("vertex " + std::to_string(u) + " is not a neighbor of p_k in B");
    }
    if (!contains_kind(word, LetterKind::b)) throw std::invalid_argument("g_odd needs a word using a b-letter");
    Letter ext = ctx.label(pk, u, Host::original);
    KindMask mask = kKindB | kKindC;
    int start;
    if (word_in(ctx, word, Host::original, mask, ctx.p(1))) {
        start = 1;
    } else if (word_in(ctx, word, Host::original, mask, pk)) {
        start = k;
    } else {
        throw std::invalid_argument("g_odd needs a T[B u P]-word starting at p_1 or p_k");
    }
    return g_odd_core(word, start, k, ext);
}

Word g_total(const PathContext& ctx, std::span<const Letter> word, Side side) {
    int k = ctx.k();
    LetterKind kind = side == Side::b ? LetterKind::b : LetterKind::a;
    KindMask mask = kKindC | (side == Side::b ? kKindB : kKindA);
    Vertex from = side == Side::b ? ctx.p(0) : ctx.p(k);
    if (!contains_kind(word, kind) || !word_in(ctx, word, Host::original, mask, from)) {
        throw std::invalid_argument("'" + format_word(word) + "' is not a side word from the far path end");
    }
    // Work in the frame where the side hangs at position k and the word
    // starts at position 0; for side A that frame is the conjugate one.
    Word framed = side == Side::b ? Word(word.begin(), word.end()) : conjugate(word, k);
    Word near;
    if (k % 2 == 0) {
        near = g_even_core(framed, 0, k);
    } else {
        Letter ext = *ctx.designated_letter(side);
        // From position 0 the only admissible first letter is c_1.
        near = g_odd_core(std::span<const Letter>(framed).subspan(1), 1, k, ext);
        near.push_back(near.back());
    }
    // Side B: T[B u P] read from p_k is T'[B u P] read from p_0 up to
    // conjugation. Side A: undo the framing.
    return conjugate(near, k);
}

Word h_map(const PathContext& ctx, std::span<const Letter> word) {
    WordType type = classify(word);
    if (type == WordType::t0 || type == WordType::t11 || type == WordType::t12) return f_map(ctx, word);
    require_valid(ctx, word, Host::original);
    auto seq = block_decompose(word);
    // The last a/b-block is preceded by the last proper c-block.
    std::size_t last = seq.blocks.size() - 1;
    while (seq.blocks[last].kind == BlockKind::c) --last;
    std::size_t cut = last - 1;
    Word out = f_map(ctx, seq.concat(0, cut));
    append(out, g_total(ctx, seq.concat(cut, seq.blocks.size()), type == WordType::t21 ? Side::b : Side::a));
    return out;
}

}  // namespace treewalk
