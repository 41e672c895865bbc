#include <doctest.h>

#include "treewalk/extremal.hpp"
#include "treewalk/tree_gen.hpp"
#include "treewalk/words.hpp"

using namespace treewalk;

namespace {

Word w(const char* text) { return parse_word(text); }

std::string s(const Word& word) { return format_word(word); }

// a - p0 - p1 - b
PathContext k1_context() { return PathContext(path_tree(4), 1, 2); }

std::vector<PathContext> contexts(int max_n) {
    std::vector<PathContext> out;
    for (int n = 2; n <= max_n; ++n) {
        for (const Tree& t : enumerate_free_trees(n)) {
            for (const auto& p : bare_paths(t)) {
                out.emplace_back(t, p.front(), p.back());
                out.emplace_back(t, p.back(), p.front());
            }
        }
    }
    return out;
}

// Every word of the given length over the context's alphabet.
std::vector<Word> all_words(const PathContext& ctx, int len) {
    Word alphabet;
    for (LetterKind k : {LetterKind::a, LetterKind::b, LetterKind::c}) {
        for (int i = 1; i <= ctx.letter_count(k); ++i) alphabet.push_back({k, i});
    }
    std::vector<Word> out{Word{}};
    for (int step = 0; step < len; ++step) {
        std::vector<Word> next;
        for (const Word& prefix : out) {
            for (const Letter& l : alphabet) {
                Word x = prefix;
                x.push_back(l);
                next.push_back(std::move(x));
            }
        }
        out = std::move(next);
    }
    return out;
}

bool uni_letter(const Word& word) {
    return std::all_of(word.begin(), word.end(), [&](const Letter& l) { return l == word.front(); });
}

}  // namespace

TEST_SUITE("word_lab") {
    TEST_CASE("letters") {
        CHECK(s(w("a1 c12 b3")) == "a1 c12 b3");
        CHECK_THROWS_AS(parse_word("d1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_word("a0"), std::invalid_argument);
        CHECK_THROWS_AS(parse_word("ax"), std::invalid_argument);
        CHECK(parse_word("  ").empty());
    }

    TEST_CASE("context labelling") {
        PathContext ctx = k1_context();
        CHECK(ctx.k() == 1);
        CHECK(ctx.letter_count(LetterKind::a) == 1);
        CHECK(ctx.letter_count(LetterKind::b) == 1);
        CHECK(ctx.letter_count(LetterKind::c) == 1);
        CHECK(ctx.label(0, 1, Host::original) == Letter{LetterKind::a, 1});
        CHECK(ctx.label(2, 3, Host::original) == Letter{LetterKind::b, 1});
        // T' is the star at p0 with the same labels
        CHECK(ctx.transformed().degree(1) == 3);
        CHECK(ctx.label(1, 3, Host::transformed) == Letter{LetterKind::b, 1});
        CHECK_THROWS_AS(ctx.label(2, 3, Host::transformed), std::invalid_argument);
        CHECK(conjugate(ctx, w("c1")) == w("c1"));

        // x a leaf: no a-letters
        PathContext leafy(star_tree(4), 1, 0);
        CHECK(leafy.letter_count(LetterKind::a) == 0);
        for (int len = 1; len <= 5; ++len) {
            for (const Word& word : collect_words(leafy, Host::original, len)) {
                WordType t = classify(word);
                CHECK((t == WordType::t0 || t == WordType::t12));
            }
        }
        CHECK_THROWS_AS(PathContext(star_tree(5), 1, 2), std::invalid_argument);
    }

    TEST_CASE("encode and decode") {
        PathContext ctx = k1_context();
        CHECK(s(encode_walk(ctx, Walk{{1, 2, 1}}, Host::original)) == "c1 c1");
        CHECK(s(encode_walk(ctx, Walk{{0, 1, 2, 3}}, Host::original)) == "a1 c1 b1");
        CHECK_THROWS_AS(encode_walk(ctx, Walk{{0, 2}}, Host::original), std::invalid_argument);

        CHECK(decode_word(ctx, w("a1"), Host::original).size() == 2);
        // a word repeating one letter is spelled by both directions of the edge
        auto cc = decode_word(ctx, w("c1 c1"), Host::original);
        REQUIRE(cc.size() == 2);
        CHECK(cc[0].vertices == std::vector<Vertex>{1, 2, 1});
        CHECK(cc[1].vertices == std::vector<Vertex>{2, 1, 2});
        CHECK(decode_word(ctx, w("a1 a1 b1"), Host::original).empty());
        CHECK(decode_word(ctx, w("a1 b1"), Host::transformed).size() == 1);
        CHECK(decode_word(ctx, w("a9"), Host::original).empty());
        CHECK(decode_word(ctx, Word{}, Host::original).empty());
    }

    TEST_CASE("decode inverts encode") {
        for (const PathContext& ctx : contexts(7)) {
            for (Host h : {Host::original, Host::transformed}) {
                for (int len = 1; len <= 5; ++len) {
                    for (const Walk& walk : enumerate_walks(ctx.host(h), len)) {
                        Word word = encode_walk(ctx, walk, h);
                        auto back = decode_word(ctx, word, h);
                        CHECK(back.size() == (uni_letter(word) ? 2u : 1u));
                        CHECK(std::find(back.begin(), back.end(), walk) != back.end());
                    }
                }
            }
        }
    }

    TEST_CASE("block decomposition") {
        auto seq = block_decompose(w("a1 c1 b1 b1 c1 a1"));
        REQUIRE(seq.blocks.size() == 5);
        CHECK(seq.blocks[0].kind == BlockKind::a);
        CHECK(s(seq.blocks[2].letters) == "b1 b1");
        CHECK(seq.proper_c_count() == 2);

        seq = block_decompose(w("c1 a1 c1"));
        REQUIRE(seq.blocks.size() == 3);
        CHECK(seq.proper_c_count() == 0);
        CHECK(block_decompose(w("c1 c1 c1")).blocks.size() == 1);

        // in T' an a-block may touch a b-block; the c-block between is empty
        seq = block_decompose(w("a1 b1 b1 c1 c1 a1"));
        REQUIRE(seq.blocks.size() == 5);
        CHECK(seq.blocks[1].kind == BlockKind::c);
        CHECK(seq.blocks[1].letters.empty());
        CHECK(s(seq.concat(0, 3)) == "a1 b1 b1");

        // runs of one side merge across c-letters
        seq = block_decompose(w("a1 c1 c1 a1"));
        CHECK(seq.blocks.size() == 1);
        CHECK_THROWS_AS(block_decompose(Word{}), std::invalid_argument);
    }

    TEST_CASE("types") {
        CHECK(classify(w("c1 c1")) == WordType::t0);
        CHECK(classify(w("a1 c1 b1 b1 c1 a1")) == WordType::t11);
        CHECK(classify(w("b1 c1 a1")) == WordType::t22);
        CHECK(classify(w("a1 c1 b1")) == WordType::t21);
        CHECK(classify(w("c1 b1 b1 c1")) == WordType::t12);
        for (const PathContext& ctx : contexts(7)) {
            for (int len = 1; len <= 5; ++len) {
                for (Host h : {Host::original, Host::transformed}) {
                    for (const Word& word : collect_words(ctx, h, len)) CHECK(classify(word) == classify_by_parity(word));
                }
            }
        }
    }

    TEST_CASE("block rules accept exactly the host words") {
        for (const PathContext& ctx : contexts(6)) {
            for (int len = 1; len <= 4; ++len) {
                for (const Word& word : all_words(ctx, len)) {
                    for (Host h : {Host::original, Host::transformed}) {
                        CHECK(satisfies_block_rules(ctx, word, h) == !decode_word(ctx, word, h).empty());
                    }
                }
            }
        }
    }

    TEST_CASE("A-side words agree in T and T', B-side words up to conjugation") {
        for (const PathContext& ctx : contexts(7)) {
            for (int len = 1; len <= 5; ++len) {
                KindMask ac = kKindA | kKindC, bc = kKindB | kKindC;
                CHECK(collect_words(ctx, Host::original, len, {ac}) == collect_words(ctx, Host::transformed, len, {ac}));
                std::set<Word> conj;
                for (const Word& word : collect_words(ctx, Host::original, len, {bc})) conj.insert(conjugate(ctx, word));
                CHECK(conj == collect_words(ctx, Host::transformed, len, {bc}));
            }
        }
    }

    TEST_CASE("conjugate and reverse") {
        CHECK(s(conjugate(w("c1 c2 b1"), 2)) == "c2 c1 b1");
        for (const PathContext& ctx : contexts(6)) {
            for (const Word& word : collect_words(ctx, Host::original, 4)) {
                CHECK(conjugate(ctx, conjugate(ctx, word)) == word);
                CHECK(reverse(reverse(word)) == word);
                CHECK(conjugate(ctx, reverse(word)) == reverse(conjugate(ctx, word)));
            }
        }
    }

    TEST_CASE("c-block splits") {
        PathContext k1 = k1_context();
        auto [h1, t1] = split_c_block(k1, w("c1"), SplitMode::last_visit_p0);
        CHECK(h1.empty());
        CHECK(s(t1) == "c1");

        PathContext k2(path_tree(3), 0, 2);
        auto [h2, t2] = split_c_block(k2, w("c1 c1 c1 c2"), SplitMode::last_visit_p0);
        CHECK(s(h2) == "c1 c1");
        CHECK(s(t2) == "c1 c2");
        auto [m1, m2] = split_c_block(k2, w("c1 c2 c2 c1"), SplitMode::first_visit_mid);
        CHECK(s(m1) == "c1");
        CHECK_THROWS_AS(split_c_block(k2, w("c1 c1"), SplitMode::first_visit_pk), std::invalid_argument);
        CHECK_THROWS_AS(split_c_block(k1, w("c1"), SplitMode::first_visit_mid), std::invalid_argument);

        for (const PathContext& ctx : contexts(7)) {
            for (int len = 1; len <= 8; ++len) {
                for (const Word& word : collect_words(ctx, Host::original, len, {kKindC, ctx.p(0)})) {
                    auto [a, b] = split_c_block(ctx, word, SplitMode::last_visit_p0);
                    Word joined = a;
                    joined.insert(joined.end(), b.begin(), b.end());
                    CHECK(joined == word);
                }
            }
        }
    }

    TEST_CASE("f examples") {
        PathContext ctx = k1_context();
        CHECK(s(f_map(ctx, w("c1 c1"))) == "c1 c1");
        Word y = f_map(ctx, w("c1 b1 b1 c1"));
        CHECK(s(y) == "c1 b1 b1 c1");
        CHECK(is_closed_word(ctx, y, Host::transformed));
        y = f_map(ctx, w("a1 c1 b1 b1 c1 a1"));
        CHECK(s(y) == "a1 b1 b1 c1 c1 a1");
        CHECK(is_closed_word(ctx, y, Host::transformed));
        CHECK(f_inverse(ctx, y) == w("a1 c1 b1 b1 c1 a1"));
        // open words of type 2.x are outside the domain
        CHECK_THROWS_AS(f_map(ctx, w("a1 c1 b1")), std::invalid_argument);
        CHECK_THROWS_AS(f_map(ctx, w("a1 b1")), std::invalid_argument);
    }

    TEST_CASE("f fixes single letters and keeps one-letter words one-letter") {
        for (const PathContext& ctx : contexts(7)) {
            for (const Word& word : collect_words(ctx, Host::original, 1)) CHECK(f_map(ctx, word) == word);
            for (int len = 2; len <= 6; ++len) {
                for (const Word& word : collect_words(ctx, Host::original, len)) {
                    if (!uni_letter(word)) continue;
                    CHECK(uni_letter(f_map(ctx, word)));
                    CHECK(uni_letter(h_map(ctx, word)));
                }
            }
        }
    }

    TEST_CASE("f inverse undoes f") {
        for (const PathContext& ctx : contexts(6)) {
            for (int len = 1; len <= 6; ++len) {
                for (const Word& word : collect_words(ctx, Host::original, len)) {
                    WordType t = classify(word);
                    bool in_domain = t == WordType::t0 || t == WordType::t11 || t == WordType::t12 ||
                                     is_closed_word(ctx, word, Host::original);
                    if (!in_domain) continue;
                    Word y = f_map(ctx, word);
                    CHECK(classify(y) == t);
                    CHECK(is_valid_word(ctx, y, Host::transformed));
                    CHECK(f_inverse(ctx, y) == word);
                }
            }
        }
    }

    TEST_CASE("g examples") {
        // p0 - p1 - p2 with a leaf at p2
        PathContext even(path_tree(4), 0, 2);
        Word y = g_even(even, w("c1 c2 b1"));
        CHECK(s(y) == "c2 c2 b1");
        CHECK(word_in(even, y, Host::original, kKindB | kKindC, even.p(2)));
        CHECK(g_even(even, y) == w("c1 c2 b1"));
        CHECK_THROWS_AS(g_even(even, w("c1 c2")), std::invalid_argument);
        CHECK_THROWS_AS(g_even(k1_context(), w("c1 b1")), std::invalid_argument);

        // k = 1: p1 = pk and the midpoint is p1 itself
        PathContext k1(path_tree(3), 0, 1);
        CHECK(s(g_odd(k1, w("b1"), 2)) == "b1");
        CHECK(s(g_total(k1, w("c1 b1"))) == "b1 b1");

        // p0 .. p3 with u at p3
        PathContext odd(path_tree(5), 0, 3);
        y = g_odd(odd, w("c2 c3 b1"), 4);
        CHECK(s(y) == "c3 c3 b1");
        CHECK(word_in(odd, y, Host::original, kKindB | kKindC, odd.p(3)));
        CHECK(g_odd(odd, y, 4) == w("c2 c3 b1"));
        CHECK_THROWS_AS(g_odd(odd, w("c2 c3 b1"), 2), std::invalid_argument);
    }

    TEST_CASE("h example") {
        PathContext ctx = k1_context();
        Word y = h_map(ctx, w("a1 c1 b1"));
        CHECK(s(y) == "a1 b1 b1");
        CHECK(classify(y) == WordType::t21);
        auto walks = decode_word(ctx, y, Host::transformed);
        REQUIRE(walks.size() == 1);
        CHECK(walks[0].vertices == std::vector<Vertex>{0, 1, 3, 1});
        y = h_map(ctx, w("b1 c1 a1"));
        CHECK(classify(y) == WordType::t22);
        CHECK(is_valid_word(ctx, y, Host::transformed));
        CHECK_THROWS_AS(h_map(ctx, w("a1 b1")), std::invalid_argument);
    }

    TEST_CASE("injection suites on small contexts") {
        auto r = verify_injections({6, 6, 6}, 1);
        CHECK(r.checks.size() > 1000);
        CHECK(r.violation_count() == 0);
    }
}
