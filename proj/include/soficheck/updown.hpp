#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "soficheck/core.hpp"

namespace soficheck::updown {

/// Engine for the infinite up/down graph on vertex set {0,1,2,...}: from
/// vertex k, a U-edge to k+1 and a D-edge to floor(k/2), except that the
/// vertex-0 self-loop is labeled E instead of D. Subsets of vertices that
/// arise from words are always empty, a half-open interval, or a ray, so the
/// whole analysis runs on a closed three-case calculus.

/// Symbolic subset of the vertex set: empty, [lo,hi), or [lo,inf).
struct VertexSet {
    enum class Kind : std::uint8_t { empty, interval, ray };

    Kind kind = Kind::empty;
    long long lo = 0;
    long long hi = 0; // unused (0) for empty and ray

    static VertexSet make_empty() { return VertexSet{}; }
    /// Canonicalizes: a half-open interval with hi <= lo is empty.
    static VertexSet interval(long long lo, long long hi);
    static VertexSet ray(long long lo);

    bool is_empty() const { return kind == Kind::empty; }
    bool contains(long long v) const;

    /// "empty", "[a,b)" or "[a,inf)".
    std::string str() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;
};

extern const Letter U; // "U"
extern const Letter D; // "D"
extern const Letter E; // "E"

Alphabet alphabet(); // {D, E, U}

/// Image of s under one letter. Vertex 0 has no outgoing D edge (its
/// self-loop is the E edge), so D images clip vertex 0 out of s first.
VertexSet forward_step(const VertexSet& s, const Letter& a);

/// Preimage of s under one letter. The same vertex-0 exception applies: no
/// vertex reaches anything via D from 0, so D preimages never contain 0.
VertexSet backward_step(const VertexSet& s, const Letter& a);

/// Terminal-state set of paths labeled w: forward fold from the full ray.
/// w is in the language iff the result is nonempty.
VertexSet terminal_set(const Word& w);

/// Initial-state set of paths labeled w: right-to-left backward fold from
/// the full ray. Empty iff terminal_set(w) is empty.
VertexSet initial_set(const Word& w);

/// Closed form for the backward fold of a word v over {U,D} with no
/// consecutive U applied to the seed interval [a,b): with j the number of D
/// symbols in v and n_i the number of D symbols left of the i-th U (U
/// symbols counted from the right),
///   result = [2^j * a - sum 2^{n_i}, 2^j * b - sum 2^{n_i}).
/// Requires a > |v| so no endpoint is ever clamped at 0.
VertexSet closed_form(const Word& v, long long a, long long b);

struct Table {
    std::size_t n = 0;
    std::size_t count = 0;
    /// class id -> (set value, canonically least word); ids in order of first
    /// appearance over the lexicographic enumeration of L_n.
    std::vector<std::pair<VertexSet, Word>> classes;
    std::map<Word, std::size_t> assignments; // filled only when requested
};

struct TableOptions {
    std::size_t cap = 12;
    bool with_assignments = false;
};

/// Exact |F_X(n)| via the structural terminal-set value of every word of
/// L_n. Distinct values present distinct follower sets (see
/// follower_witness), so count is exact.
Table follower_table(std::size_t n, const TableOptions& opts = {});

/// Exact |P_X(n)| via the structural initial-set value of every word of L_n.
Table predecessor_table(std::size_t n, const TableOptions& opts = {});

/// The witness family for the predecessor-count lower bound: all length-n
/// words v . D^(ceil(n/2)-1) . E with v over {U,D} of length floor(n/2) and
/// no consecutive U. Requires n > 6. Members are pairwise distinguished by
/// their initial sets; |result| >= 2^floor(n/4).
std::vector<Word> witness_set(std::size_t n);

/// Finite separating word U^(2^m-k-1) D^m E, with 2^m the least power of two
/// strictly greater than k. Appended to a word whose terminal set is {k} (or
/// [k,inf)) it stays in the language; appended to one with terminal set {k'}
/// (or [k',inf)) for k' > k it leaves the language.
Word follower_witness(long long k);

/// A word in the follower language of a but not of b (or vice versa), for
/// any two distinct nonempty terminal-set values (singletons and rays).
Word separating_word(const VertexSet& a, const VertexSet& b);

/// Enumerates L_n in canonical order.
std::vector<Word> language(std::size_t n);

/// Streaming enumeration of L_n; visit(word, terminal value) per word.
void for_each_word(std::size_t n,
                   const std::function<void(const Word&, const VertexSet&)>& visit);

LanguageOracle oracle();

} // namespace soficheck::updown
