#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "soficheck/core.hpp"

namespace soficheck {

/// Canonically sorted subset of a graph's states (by state index).
using StateSet = std::vector<std::size_t>;

enum class Side { follower, predecessor };

StateSet full_state_set(const LabeledGraph& g);

/// Subset image: { q : exists p in s with an a-labeled edge p -> q }.
StateSet transition(const LabeledGraph& g, const StateSet& s, const Letter& a);

StateSet run(const LabeledGraph& g, const StateSet& start, const Word& w);

/// Same states, every edge reversed. Preserves essentiality.
LabeledGraph reverse_graph(const LabeledGraph& g);

/// Maps every w in L_n of the presented shift to the set of terminal states
/// of paths labeled w. Requires an essential graph.
std::map<Word, StateSet> terminal_sets(const LabeledGraph& g, std::size_t n);

/// True iff the finite path-label languages from s1 and s2 coincide. Decided
/// by subset construction on both sides (every nonempty subset accepting, the
/// empty subset a rejecting sink) and breadth-first search for a
/// distinguishing pair. For essential graphs this equals equality of the
/// corresponding follower sets of infinite sequences.
bool languages_equal(const LabeledGraph& g, const StateSet& s1, const StateSet& s2);

/// Partition of L_n into exact follower (or predecessor) classes.
struct ClassTable {
    std::size_t n = 0;
    Side side = Side::follower;
    std::map<Word, std::size_t> assignments;                 // word -> class id
    std::vector<std::pair<Word, StateSet>> representatives;  // class id -> (least word, set)

    std::size_t count() const { return representatives.size(); }
};

/// Partitions L_n by languages_equal over terminal sets (follower side) or
/// over initial sets in the edge-reversed graph (predecessor side). Counts
/// are exact; representatives are the canonically least word per class.
ClassTable class_table(const LabeledGraph& g, std::size_t n, Side side);

/// Deterministic machine whose nodes are the distinct follower sets of
/// finite words (the soficity certificate: node count is that total).
struct FollowerAutomaton {
    std::vector<StateSet> nodes;  // representative subset per node
    std::map<std::pair<std::size_t, Letter>, std::size_t> transitions;
    std::size_t initial = 0;      // node of the empty word

    std::size_t size() const { return nodes.size(); }

    /// Node reached from the initial node by w, if w is in the language.
    std::optional<std::size_t> node_of(const Word& w) const;
};

/// Explores the subsets reachable from the full state set, merging
/// languages_equal subsets into one node. Throws BudgetError if exploration
/// exceeds node_budget (cannot happen for finite graphs; guards pathology).
FollowerAutomaton follower_automaton(const LabeledGraph& g, std::size_t node_budget = 1 << 14);

/// Number of distinct follower classes among all words of length <= n,
/// cross-length identity decided by languages_equal.
std::size_t cumulative_follower_count(const LabeledGraph& g, std::size_t n);

/// True iff every follower class of a length-n word already occurs as the
/// class of some strictly shorter word.
bool unions_criterion(const LabeledGraph& g, std::size_t n);

/// Distinct follower classes per word length 0..n_max, as automaton node ids.
std::vector<std::vector<std::size_t>> classes_by_length(const FollowerAutomaton& fa,
                                                        const LabeledGraph& g,
                                                        std::size_t n_max);

/// Membership oracle of the shift presented by an essential graph.
LanguageOracle graph_oracle(const LabeledGraph& g);

} // namespace soficheck
