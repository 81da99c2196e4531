#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "soficheck/errors.hpp"

namespace soficheck {

/// Letters are tokens, not single characters, so that separator letters for
/// coded systems never collide with a base alphabet.
using Letter = std::string;

/// Finite ordered alphabet. The lexicographic order on tokens is the
/// canonical total order used for all sorting in the toolkit.
class Alphabet {
public:
    Alphabet() = default;

    /// Sorts the letters canonically; rejects empty alphabets and duplicates.
    static Alphabet of(std::vector<Letter> letters);

    const std::vector<Letter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool contains(const Letter& a) const;
    std::size_t index_of(const Letter& a) const; // throws ValidationError

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Letter> letters_;
};

/// Finite word over some alphabet. The empty word is a first-class value;
/// ordering is shortlex (length, then token-lexicographic).
struct Word {
    std::vector<Letter> letters;

    Word() = default;
    explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

    /// One letter per character, e.g. of_chars("DDUE").
    static Word of_chars(std::string_view chars);

    std::size_t size() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word prefix(std::size_t len) const;
    Word suffix(std::size_t len) const;
    Word reversed() const;

    /// Tokens joined with spaces; the empty word renders as "".
    std::string str() const;

    friend Word operator+(const Word& u, const Word& v);
    friend Word operator+(const Word& u, const Letter& a);
    friend bool operator==(const Word&, const Word&) = default;
    friend std::strong_ordering operator<=>(const Word& u, const Word& v);
};

struct Edge {
    std::string src;
    Letter label;
    std::string dst;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite labeled graph presenting a sofic shift. States, alphabet and edges
/// are kept canonically sorted; duplicate edges are rejected.
class LabeledGraph {
public:
    LabeledGraph() = default;
    LabeledGraph(std::vector<std::string> states, Alphabet alphabet, std::vector<Edge> edges);

    const std::vector<std::string>& states() const { return states_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::size_t state_count() const { return states_.size(); }
    bool has_state(const std::string& s) const;
    std::size_t state_index(const std::string& s) const; // throws ValidationError

    friend bool operator==(const LabeledGraph&, const LabeledGraph&) = default;

private:
    std::vector<std::string> states_;
    Alphabet alphabet_;
    std::vector<Edge> edges_;
};

/// Membership contract for a factorial, biextendable language. Everything
/// downstream (enumeration, profiles, coded systems) runs through this.
struct LanguageOracle {
    Alphabet alphabet;
    std::function<bool(const Word&)> contains;
};

/// Parses the graph file format:
///   alphabet: tok1 tok2 ...
///   states: s1 s2 ...
///   edge: src label dst
/// '#' begins a comment, blank lines are ignored.
LabeledGraph parse_presentation(const std::string& text);

/// Canonical serialization; parse followed by serialize is the identity on
/// canonicalized files.
std::string serialize_presentation(const LabeledGraph& g);

/// Maximal subgraph in which every state has at least one outgoing and one
/// incoming edge, computed by iterated removal. Idempotent. Throws
/// ValidationError when nothing remains (the graph presents the empty
/// subshift).
LabeledGraph essentialize(const LabeledGraph& g);

/// Exactly { w : |w| = n, o.contains(w) }, in canonical order. Implemented
/// as a prefix-tree walk pruning at non-members, which is valid because the
/// language is factorial.
std::vector<Word> enumerate_language(const LanguageOracle& o, std::size_t n);

} // namespace soficheck
