#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "soficheck/core.hpp"
#include "soficheck/sofic.hpp"

namespace soficheck::criteria {

enum class Verdict { certified_sofic, hypothesis_not_met, not_applicable };

std::string to_string(Verdict v);

/// Outcome of one soficity (or periodicity) checker. A certified-sofic
/// verdict is only ever produced from exact data; depth-limited lower bounds
/// can refute a hypothesis but never certify one.
struct CriterionReport {
    std::string criterion;
    long long n = 0;
    nlohmann::ordered_json quantities;
    Verdict verdict = Verdict::not_applicable;
    std::string citation;

    /// Fixed key order: criterion, n, quantities, verdict, citation.
    nlohmann::ordered_json to_json() const;
};

/// Exact follower classification per word length, with a stable class key
/// usable across lengths. The follower-automaton node identity provides the
/// keys for finite graphs; the structural terminal value does for the
/// up/down system.
struct ExactClassView {
    std::string system;
    std::vector<std::vector<std::string>> keys_by_length; // index = word length
    std::string empty_word_key;

    std::size_t count_at(std::size_t n) const;
    std::size_t cumulative_count(std::size_t n) const;
};

ExactClassView view_from_graph(const LabeledGraph& g, std::size_t n_max,
                               const std::string& system_name);
ExactClassView view_from_updown(std::size_t n_max, std::size_t cap = 12);

/// Marker for systems known only through depth-limited profiles; containment
/// checkers return not-applicable for these.
struct DepthLimitedView {
    std::string system;
};

/// Certified-sofic iff every follower class at length n already occurs at
/// some length < n.
CriterionReport check_unions(const ExactClassView& view, std::size_t n);
CriterionReport check_unions(const DepthLimitedView& view, std::size_t n);

/// Certified-sofic iff the number of distinct classes over all lengths <= n
/// is at most n. Also notes any nonempty word length whose classes include
/// the class of the empty word.
CriterionReport check_cumulative(const ExactClassView& view, std::size_t n);
CriterionReport check_cumulative(const DepthLimitedView& view, std::size_t n);

/// Certified-sofic iff 2^count <= n+1 (pure integer arithmetic).
CriterionReport check_log(std::size_t count, std::size_t n);

/// Certified iff the exact class count at n is 1; verified by testing that
/// every two-letter word over the alphabet is in the language (full shift).
CriterionReport check_full_shift(const LanguageOracle& o, std::size_t count_at_n,
                                 std::size_t n);

/// Morse-Hedlund: if p(n) <= n for some n <= n_max the language comes from a
/// finite set of periodic points; verified by unique right extension of
/// every word from that n out to the horizon.
CriterionReport word_complexity_check(const LanguageOracle& o, std::size_t n_max);

/// Scans exact counts (counts[i] = |F_X(i+1)|) for the least n with
/// count <= n. A count <= n at n <= 3 certifies soficity outright; a least n
/// together with certified nonsoficity would be flagged as a violation of
/// the slow-growth conjecture (none of the built-in systems may produce
/// one).
CriterionReport conjecture_probe(const std::vector<std::size_t>& counts,
                                 std::optional<bool> sofic_known);

} // namespace soficheck::criteria
