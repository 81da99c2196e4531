#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "soficheck/updown.hpp"

using namespace soficheck;
using namespace soficheck::updown;

namespace {

bool in_language(const Word& w) { return !terminal_set(w).is_empty(); }

} // namespace

TEST_CASE("vertex set canonicalization") {
    CHECK(VertexSet::interval(3, 3).is_empty());
    CHECK(VertexSet::interval(4, 3).is_empty());
    CHECK(VertexSet::interval(2, 3).contains(2));
    CHECK_FALSE(VertexSet::interval(2, 3).contains(3));
    CHECK(VertexSet::ray(5).contains(1000));
    CHECK(VertexSet::interval(0, 4).str() == "[0,4)");
    CHECK(VertexSet::ray(2).str() == "[2,inf)");
    CHECK(VertexSet::make_empty().str() == "empty");
}

TEST_CASE("forward step") {
    CHECK(forward_step(VertexSet::interval(17, 18), D) == VertexSet::interval(8, 9));
    CHECK(forward_step(VertexSet::ray(0), U) == VertexSet::ray(1));
    CHECK(forward_step(VertexSet::interval(1, 2), E).is_empty());
    CHECK(forward_step(VertexSet::interval(0, 1), E) == VertexSet::interval(0, 1));
    CHECK(forward_step(VertexSet::ray(3), E).is_empty());
    // vertex 0 has no D edge
    CHECK(forward_step(VertexSet::interval(0, 1), D).is_empty());
    CHECK(forward_step(VertexSet::interval(0, 2), D) == VertexSet::interval(0, 1));
    CHECK(forward_step(VertexSet::ray(0), D) == VertexSet::ray(0));
    CHECK(forward_step(VertexSet::make_empty(), U).is_empty());
    CHECK_THROWS_AS(forward_step(VertexSet::ray(0), "X"), ValidationError);
}

TEST_CASE("backward step") {
    CHECK(backward_step(VertexSet::interval(4, 8), D) == VertexSet::interval(8, 16));
    CHECK(backward_step(VertexSet::interval(8, 16), U) == VertexSet::interval(7, 15));
    CHECK(backward_step(VertexSet::ray(0), E) == VertexSet::interval(0, 1));
    // nothing reaches vertex 0 via U, and vertex 0 reaches nothing via D
    CHECK(backward_step(VertexSet::interval(0, 1), U).is_empty());
    CHECK(backward_step(VertexSet::interval(0, 1), D) == VertexSet::interval(1, 2));
    CHECK(backward_step(VertexSet::ray(0), D) == VertexSet::ray(1));
    CHECK(backward_step(VertexSet::ray(3), U) == VertexSet::ray(2));
    CHECK_THROWS_AS(backward_step(VertexSet::ray(0), "X"), ValidationError);
}

TEST_CASE("forward step agrees with pointwise image on a finite window") {
    // Independent oracle: apply the edge relation vertex by vertex.
    const long long window = 64;
    std::vector<VertexSet> samples;
    for (long long lo = 0; lo <= 12; ++lo) {
        for (long long hi = lo + 1; hi <= 14; ++hi) samples.push_back(VertexSet::interval(lo, hi));
        samples.push_back(VertexSet::ray(lo));
    }
    for (const auto& s : samples) {
        for (const Letter& a : {U, D, E}) {
            auto img = forward_step(s, a);
            std::set<long long> expected;
            for (long long v = 0; v <= window; ++v) {
                if (!s.contains(v)) continue;
                if (a == U) expected.insert(v + 1);
                if (a == D && v >= 1) expected.insert(v / 2);
                if (a == E && v == 0) expected.insert(0);
            }
            for (long long v = 0; v <= window / 2; ++v) {
                INFO("set ", s.str(), " letter ", a, " vertex ", v);
                CHECK(img.contains(v) == (expected.count(v) > 0));
            }
        }
    }
}

TEST_CASE("backward step agrees with pointwise preimage on a finite window") {
    const long long window = 64;
    std::vector<VertexSet> samples;
    for (long long lo = 0; lo <= 12; ++lo) {
        for (long long hi = lo + 1; hi <= 14; ++hi) samples.push_back(VertexSet::interval(lo, hi));
        samples.push_back(VertexSet::ray(lo));
    }
    for (const auto& s : samples) {
        for (const Letter& a : {U, D, E}) {
            auto pre = backward_step(s, a);
            for (long long v = 0; v <= window; ++v) {
                bool leads = false;
                if (a == U) leads = s.contains(v + 1);
                if (a == D) leads = v >= 1 && s.contains(v / 2);
                if (a == E) leads = v == 0 && s.contains(0);
                INFO("set ", s.str(), " letter ", a, " vertex ", v);
                CHECK(pre.contains(v) == leads);
            }
        }
    }
}

TEST_CASE("terminal set membership examples") {
    CHECK(terminal_set(Word::of_chars("DDUUDDDE")) == VertexSet::interval(0, 1));
    CHECK(terminal_set(Word::of_chars("EUUDDD")).is_empty());
    CHECK(terminal_set(Word::of_chars("EEU")) == VertexSet::interval(1, 2));
    // E^(n-k) U^k pins the terminal vertex at k
    for (long long n = 1; n <= 8; ++n) {
        for (long long k = 0; k <= n; ++k) {
            Word w;
            for (long long i = 0; i < n - k; ++i) w = w + E;
            for (long long i = 0; i < k; ++i) w = w + U;
            if (n - k == 0) continue; // no E: ray case instead
            CHECK(terminal_set(w) == VertexSet::interval(k, k + 1));
        }
    }
}

TEST_CASE("initial set examples") {
    CHECK(initial_set(Word::of_chars("DDDE")) == VertexSet::interval(4, 8));
    CHECK(initial_set(Word::of_chars("UDUDDDDE")) == VertexSet::interval(13, 29));
    CHECK(initial_set(Word::of_chars("EUUDDD")).is_empty());
}

TEST_CASE("duality: terminal empty iff initial empty") {
    // All words over {U,D,E}, not only language members.
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; len <= 10; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            for (const Letter& a : {D, E, U}) next.push_back(w + a);
        }
        frontier = std::move(next);
        for (const auto& w : frontier) {
            CHECK(terminal_set(w).is_empty() == initial_set(w).is_empty());
        }
    }
}

TEST_CASE("terminal-set shape follows the two-case analysis") {
    for (std::size_t n = 1; n <= 10; ++n) {
        for_each_word(n, [&](const Word& w, const VertexSet& t) {
            bool has_e = std::find(w.letters.begin(), w.letters.end(), E) != w.letters.end();
            if (has_e) {
                CHECK(t.kind == VertexSet::Kind::interval);
                CHECK(t.hi == t.lo + 1);
                CHECK(t.lo >= 0);
                CHECK(t.lo <= static_cast<long long>(n) - 1);
            } else {
                CHECK(t.kind == VertexSet::Kind::ray);
                CHECK(t.lo >= 0);
                CHECK(t.lo <= static_cast<long long>(n));
            }
        });
    }
}

TEST_CASE("closed form") {
    auto cf = closed_form(Word::of_chars("UDDDUD"), 16, 32);
    CHECK(cf.lo == 247);
    CHECK(cf == VertexSet::interval(247, 503));

    CHECK(closed_form(Word{}, 5, 9) == VertexSet::interval(5, 9));
    CHECK(closed_form(Word::of_chars("UDUD"), 4, 8) == VertexSet::interval(13, 29));

    CHECK(closed_form(Word::of_chars("UD"), 2, 4) == VertexSet::interval(3, 7));

    CHECK_THROWS_AS(closed_form(Word::of_chars("UU"), 16, 32), ValidationError);
    CHECK_THROWS_AS(closed_form(Word::of_chars("UDE"), 16, 32), ValidationError);
    CHECK_THROWS_AS(closed_form(Word::of_chars("UD"), 1, 3), ValidationError);
}

TEST_CASE("closed form equals backward iteration") {
    for (std::size_t n = 7; n <= 12; ++n) {
        std::size_t v_len = n / 2;
        for (const auto& w : witness_set(n)) {
            Word v = w.prefix(v_len);
            Word tail = w.suffix(w.size() - v_len);
            auto seed = initial_set(tail);
            REQUIRE(seed.kind == VertexSet::Kind::interval);
            // Every prefix of v is also consecutive-U-free; check them all.
            for (std::size_t len = 0; len <= v_len; ++len) {
                Word vp = v.suffix(len); // rightmost part acts first
                CHECK(closed_form(vp, seed.lo, seed.hi) == initial_set(vp + tail));
            }
        }
    }
}

TEST_CASE("follower table") {
    auto t1 = follower_table(1);
    CHECK(t1.count == 3);
    std::set<std::string> values;
    for (const auto& [v, w] : t1.classes) values.insert(v.str());
    CHECK(values == std::set<std::string>{"[1,inf)", "[0,inf)", "[0,1)"});

    CHECK(follower_table(5).count == 11);

    auto t3 = follower_table(3);
    CHECK(t3.count == 7);
    std::set<std::string> v3;
    for (const auto& [v, w] : t3.classes) v3.insert(v.str());
    CHECK(v3 == std::set<std::string>{"[0,1)", "[1,2)", "[2,3)", "[0,inf)", "[1,inf)",
                                      "[2,inf)", "[3,inf)"});

    CHECK_THROWS_AS(follower_table(13), BudgetError);
}

TEST_CASE("predecessor table lower bounds") {
    CHECK(predecessor_table(7).count >= 2);
    CHECK(predecessor_table(8).count >= 4);
    CHECK(predecessor_table(8).count == 78); // recorded exact value
    CHECK(predecessor_table(12, {.cap = 12}).count >= 8);
    CHECK_THROWS_AS(predecessor_table(13), BudgetError);
}

TEST_CASE("witness set") {
    auto w8 = witness_set(8);
    CHECK(w8.size() == 8);
    std::set<std::string> prefixes;
    for (const auto& w : w8) {
        CHECK(w.size() == 8);
        CHECK(in_language(w));
        prefixes.insert(w.prefix(4).str());
    }
    CHECK(prefixes == std::set<std::string>{"D D D D", "D D D U", "D D U D", "D U D D",
                                            "U D D D", "D U D U", "U D D U", "U D U D"});
    std::set<VertexSet> initials;
    for (const auto& w : w8) initials.insert(initial_set(w));
    CHECK(initials.size() == w8.size());

    CHECK(witness_set(7).size() == 5);
    for (std::size_t n = 7; n <= 12; ++n) {
        auto ws = witness_set(n);
        CHECK(ws.size() >= (std::size_t{1} << (n / 4)));
        std::set<VertexSet> vals;
        for (const auto& w : ws) {
            CHECK(in_language(w));
            vals.insert(initial_set(w));
        }
        CHECK(vals.size() == ws.size());
    }
    CHECK_THROWS_AS(witness_set(6), ValidationError);
}

TEST_CASE("follower witness words") {
    CHECK(follower_witness(0) == Word::of_chars("E"));
    CHECK(follower_witness(1) == Word::of_chars("DE"));
    CHECK(follower_witness(2) == Word::of_chars("UDDE"));
    // DE follows terminal {1} but not {2}
    CHECK(in_language(Word::of_chars("EU") + follower_witness(1)));
    CHECK_FALSE(in_language(Word::of_chars("EUU") + follower_witness(1)));
    CHECK(in_language(Word::of_chars("EUU") + follower_witness(2)));
}

TEST_CASE("witness soundness: distinct terminal values are separated") {
    // Fold a witness word from a given start set.
    auto accepts = [](const VertexSet& start, const Word& w) {
        VertexSet s = start;
        for (const auto& a : w.letters) s = forward_step(s, a);
        return !s.is_empty();
    };
    for (std::size_t n = 1; n <= 8; ++n) {
        auto table = follower_table(n);
        for (std::size_t i = 0; i < table.classes.size(); ++i) {
            for (std::size_t j = i + 1; j < table.classes.size(); ++j) {
                const auto& a = table.classes[i].first;
                const auto& b = table.classes[j].first;
                Word sep = separating_word(a, b);
                CHECK(accepts(a, sep) != accepts(b, sep));
            }
        }
    }
}

TEST_CASE("predecessor witness soundness: E U^k w probes initial sets") {
    auto probe_word = [](long long k, const Word& w) {
        Word p = Word{} + E;
        for (long long i = 0; i < k; ++i) p = p + U;
        return p + w;
    };
    for (std::size_t n = 1; n <= 8; ++n) {
        auto table = predecessor_table(n, {.cap = 12, .with_assignments = false});
        long long max_k = 2;
        for (const auto& [value, word] : table.classes) {
            if (value.kind == VertexSet::Kind::interval) max_k = std::max(max_k, value.hi + 1);
            else max_k = std::max(max_k, value.lo + 2);
        }
        max_k = std::min(max_k, 80LL);
        for (const auto& [value, w] : table.classes) {
            for (long long k = 0; k <= max_k; ++k) {
                INFO("n ", n, " word ", w.str(), " k ", k);
                CHECK(in_language(probe_word(k, w)) == value.contains(k));
            }
        }
    }
}

TEST_CASE("language oracle") {
    auto o = oracle();
    CHECK(o.contains(Word{}));
    CHECK(o.contains(Word::of_chars("DDUUDDDE")));
    CHECK_FALSE(o.contains(Word::of_chars("EUUDDD")));
    CHECK(o.alphabet.letters() == std::vector<Letter>{"D", "E", "U"});
}
