#pragma once

#include <functional>
#include <vector>

#include "soficheck/core.hpp"

namespace soficheck::coded {

/// A coded subshift built from code words {wc}, where W is a set of base
/// words closed enough that every base-language word is a suffix of some
/// code word, and c is a fresh separator letter. Membership of finite words
/// decomposes at separator occurrences, so the system is carried entirely by
/// four predicates on separator-free words.
struct CodedSystem {
    Alphabet base_alphabet;
    Letter separator;
    Alphabet full_alphabet; // base + separator

    std::function<bool(const Word&)> is_in_W;
    std::function<bool(const Word&)> is_W_prefix;
    std::function<bool(const Word&)> is_W_suffix;
    std::function<bool(const Word&)> is_cfree_factor;
};

/// Gap-length spec for an S-gap shift. `complete` asserts that the predicate
/// is false for every value above the cutoff (true for explicit finite
/// lists); when it is not, queries whose answer depends on values beyond the
/// cutoff raise CutoffError instead of guessing.
struct SGapSpec {
    std::function<bool(long long)> gap_predicate;
    long long cutoff = 64;
    bool complete = false;
};

SGapSpec sgap_from_list(std::vector<long long> gaps);

/// Named rules for the CLI; currently "powers-of-2".
SGapSpec sgap_rule(const std::string& name, long long cutoff);

/// Instantiates the construction with W = L(X) for an essential presentation
/// of X: every base word is a suffix of itself, and factoriality of L(X)
/// collapses all four predicates to graph-language membership. The separator
/// must not occur in the base alphabet.
CodedSystem from_sofic(const LabeledGraph& g, const Letter& separator);

/// S-gap shifts as coded systems over base {0} with separator 1.
CodedSystem sgap(const SGapSpec& spec);

/// Exact membership in L(Y) for finite words: split u at separators into
/// segments s_0 ... s_m; with no separator this is is_cfree_factor(u), else
/// is_W_suffix(s_0), is_in_W(s_i) for the interior segments, and
/// is_W_prefix(s_m).
bool membership(const CodedSystem& sys, const Word& u);

/// Suffix of u starting at its last separator. For u in L(Y) the result has
/// the same extension profiles as u at every depth. Requires a separator.
Word normalize_after_separator(const CodedSystem& sys, const Word& u);

LanguageOracle oracle(const CodedSystem& sys);

} // namespace soficheck::coded
