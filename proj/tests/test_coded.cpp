#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "soficheck/builtin.hpp"
#include "soficheck/coded.hpp"
#include "soficheck/probe.hpp"
#include "soficheck/sofic.hpp"
#include "systems.hpp"

using namespace soficheck;

TEST_CASE("from_sofic predicates") {
    auto sys = coded::from_sofic(builtin::golden_mean(), "c");
    CHECK(sys.full_alphabet.letters() == std::vector<Letter>{"0", "1", "c"});
    CHECK(sys.is_in_W(Word::of_chars("01")));
    CHECK_FALSE(sys.is_in_W(Word::of_chars("11")));
    CHECK(sys.is_in_W(Word{}));
    CHECK(sys.is_W_prefix(Word::of_chars("10")));
    CHECK(sys.is_W_suffix(Word::of_chars("10")));
    CHECK(sys.is_cfree_factor(Word::of_chars("010")));

    CHECK_THROWS_AS(coded::from_sofic(builtin::golden_mean(), "0"), ValidationError);
}

TEST_CASE("membership splits at separators") {
    auto sys = coded::from_sofic(builtin::golden_mean(), "c");
    CHECK(coded::membership(sys, Word{}));
    CHECK(coded::membership(sys, Word::of_chars("c")));
    CHECK(coded::membership(sys, Word::of_chars("01c10c0")));
    CHECK(coded::membership(sys, Word::of_chars("1c1")));
    CHECK_FALSE(coded::membership(sys, Word::of_chars("11")));
    CHECK_FALSE(coded::membership(sys, Word::of_chars("0c11c0")));
    CHECK_FALSE(coded::membership(sys, Word::of_chars("1c11")));
    CHECK_THROWS_AS(coded::membership(sys, Word::of_chars("x")), ValidationError);
}

TEST_CASE("base language embeds in the coded language") {
    auto gm = builtin::golden_mean();
    auto sys = coded::from_sofic(gm, "c");
    auto base = graph_oracle(gm);
    for (std::size_t n = 0; n <= 8; ++n) {
        for (const auto& w : enumerate_language(base, n)) {
            CHECK(coded::membership(sys, w));
        }
    }
}

TEST_CASE("sgap membership from explicit gap list") {
    auto s12 = coded::sgap(coded::sgap_from_list({1, 2}));
    CHECK(s12.base_alphabet.letters() == std::vector<Letter>{"0"});
    CHECK(s12.separator == "1");
    CHECK(coded::membership(s12, Word::of_chars("010010")));
    CHECK(coded::membership(s12, Word::of_chars("00")));
    CHECK_FALSE(coded::membership(s12, Word::of_chars("000")));
    CHECK_FALSE(coded::membership(s12, Word::of_chars("10001")));
    CHECK_FALSE(coded::membership(s12, Word::of_chars("11")));

    auto s2 = coded::sgap(coded::sgap_from_list({2}));
    CHECK_FALSE(coded::membership(s2, Word::of_chars("11")));
    auto s02 = coded::sgap(coded::sgap_from_list({0, 2}));
    CHECK(coded::membership(s02, Word::of_chars("11")));
    CHECK(coded::membership(s02, Word::of_chars("1001")));
    CHECK_FALSE(coded::membership(s02, Word::of_chars("101")));
}

TEST_CASE("sgap cutoff behavior for rule-defined gap sets") {
    auto spec = coded::sgap_rule("powers-of-2", 16);
    CHECK_FALSE(spec.complete);
    auto sys = coded::sgap(spec);
    CHECK(coded::membership(sys, Word::of_chars("100101")));
    CHECK_FALSE(coded::membership(sys, Word::of_chars("1000001")));
    // a bounded interior segment can be decided within the cutoff
    Word w = Word::of_chars("1");
    for (int i = 0; i < 8; ++i) w = w + Letter("0");
    w = w + Letter("1");
    CHECK(coded::membership(sys, w));
    // 17 zeros after a separator: answer depends on gaps beyond the cutoff
    Word long_tail = Word::of_chars("1");
    for (int i = 0; i < 17; ++i) long_tail = long_tail + Letter("0");
    CHECK_THROWS_AS(coded::membership(sys, long_tail), CutoffError);
    // but a complete list never raises
    auto finite = coded::sgap(coded::sgap_from_list({1, 2}));
    Word many = Word::of_chars("1");
    for (int i = 0; i < 40; ++i) many = many + Letter("0");
    CHECK_FALSE(coded::membership(finite, many));

    CHECK_THROWS_AS(coded::sgap_rule("no-such-rule", 16), ValidationError);
}

TEST_CASE("normalize_after_separator") {
    auto sys = coded::from_sofic(builtin::golden_mean(), "c");
    CHECK(coded::normalize_after_separator(sys, Word::of_chars("01c10c0")) ==
          Word::of_chars("c0"));
    CHECK(coded::normalize_after_separator(sys, Word::of_chars("0c")) == Word::of_chars("c"));
    CHECK_THROWS_AS(coded::normalize_after_separator(sys, Word::of_chars("010")),
                    ValidationError);
}

TEST_CASE("normalized suffix has the same extension profiles") {
    auto sys = coded::from_sofic(builtin::golden_mean(), "c");
    auto o = coded::oracle(sys);
    for (std::size_t n = 1; n <= 5; ++n) {
        for (const auto& w : enumerate_language(o, n)) {
            bool has_sep = std::find(w.letters.begin(), w.letters.end(), sys.separator) !=
                           w.letters.end();
            if (!has_sep) continue;
            Word tail = coded::normalize_after_separator(sys, w);
            for (std::size_t d = 1; d <= 3; ++d) {
                auto pw = probe::profile(o, w, probe::ProfileSide::follower, d);
                auto pt = probe::profile(o, tail, probe::ProfileSide::follower, d);
                CHECK(pw.extensions == pt.extensions);
            }
        }
    }
}

TEST_CASE("coded oracles produce factorial biextendable languages") {
    std::vector<LanguageOracle> oracles{
        coded::oracle(coded::sgap(coded::sgap_from_list({1, 2}))),
        coded::oracle(coded::from_sofic(builtin::even_shift(), "c")),
    };
    for (const auto& o : oracles) {
        for (std::size_t n = 0; n <= 6; ++n) {
            auto shorter = enumerate_language(o, n);
            for (const auto& w : enumerate_language(o, n + 1)) {
                CHECK(std::binary_search(shorter.begin(), shorter.end(), w.prefix(n)));
                CHECK(std::binary_search(shorter.begin(), shorter.end(), w.suffix(n)));
            }
        }
    }
}
