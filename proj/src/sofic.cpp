#include "soficheck/sofic.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace soficheck {

StateSet full_state_set(const LabeledGraph& g) {
    StateSet s(g.state_count());
    for (std::size_t i = 0; i < s.size(); ++i) s[i] = i;
    return s;
}

StateSet transition(const LabeledGraph& g, const StateSet& s, const Letter& a) {
    std::set<std::size_t> image;
    for (const auto& e : g.edges()) {
        if (e.label != a) continue;
        if (std::binary_search(s.begin(), s.end(), g.state_index(e.src))) {
            image.insert(g.state_index(e.dst));
        }
    }
    return {image.begin(), image.end()};
}

StateSet run(const LabeledGraph& g, const StateSet& start, const Word& w) {
    StateSet s = start;
    for (const auto& a : w.letters) {
        if (s.empty()) break;
        s = transition(g, s, a);
    }
    return s;
}

LabeledGraph reverse_graph(const LabeledGraph& g) {
    std::vector<Edge> rev;
    rev.reserve(g.edges().size());
    for (const auto& e : g.edges()) {
        rev.push_back(Edge{e.dst, e.label, e.src});
    }
    return LabeledGraph(g.states(), g.alphabet(), std::move(rev));
}

namespace {

void terminal_rec(const LabeledGraph& g, std::size_t n, Word& cur, const StateSet& s,
                  std::map<Word, StateSet>& out) {
    if (cur.size() == n) {
        out.emplace(cur, s);
        return;
    }
    for (const auto& a : g.alphabet().letters()) {
        StateSet next = transition(g, s, a);
        if (next.empty()) continue;
        cur.letters.push_back(a);
        terminal_rec(g, n, cur, next, out);
        cur.letters.pop_back();
    }
}

} // namespace

std::map<Word, StateSet> terminal_sets(const LabeledGraph& g, std::size_t n) {
    std::map<Word, StateSet> out;
    Word cur;
    terminal_rec(g, n, cur, full_state_set(g), out);
    return out;
}

bool languages_equal(const LabeledGraph& g, const StateSet& s1, const StateSet& s2) {
    // Product search over pairs of determinized subsets. A pair with exactly
    // one empty side is a distinguishing pair: some word labels a path from
    // one set but not the other.
    std::set<std::pair<StateSet, StateSet>> seen;
    std::deque<std::pair<StateSet, StateSet>> queue;
    queue.emplace_back(s1, s2);
    seen.insert(queue.front());

    while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        if (a.empty() != b.empty()) return false;
        if (a.empty()) continue; // both at the rejecting sink
        for (const auto& letter : g.alphabet().letters()) {
            auto next = std::make_pair(transition(g, a, letter), transition(g, b, letter));
            if (seen.insert(next).second) {
                queue.push_back(std::move(next));
            }
        }
    }
    return true;
}

ClassTable class_table(const LabeledGraph& g, std::size_t n, Side side) {
    const LabeledGraph work = side == Side::follower ? g : reverse_graph(g);

    ClassTable table;
    table.n = n;
    table.side = side;

    // L_n enumerated in canonical order via the forward graph; for the
    // predecessor side the classified set is the initial-state set, i.e. the
    // terminal set of the reversed word in the reversed graph.
    for (const auto& [w, tset] : terminal_sets(g, n)) {
        StateSet key = side == Side::follower ? tset : run(work, full_state_set(work), w.reversed());
        std::size_t id = table.representatives.size();
        for (std::size_t i = 0; i < table.representatives.size(); ++i) {
            if (languages_equal(work, key, table.representatives[i].second)) {
                id = i;
                break;
            }
        }
        if (id == table.representatives.size()) {
            table.representatives.emplace_back(w, key);
        }
        table.assignments.emplace(w, id);
    }
    return table;
}

std::optional<std::size_t> FollowerAutomaton::node_of(const Word& w) const {
    std::size_t node = initial;
    for (const auto& a : w.letters) {
        auto it = transitions.find({node, a});
        if (it == transitions.end()) return std::nullopt;
        node = it->second;
    }
    return node;
}

FollowerAutomaton follower_automaton(const LabeledGraph& g, std::size_t node_budget) {
    FollowerAutomaton fa;
    std::map<StateSet, std::size_t> node_of_subset; // exact-subset cache

    auto node_for = [&](const StateSet& s) -> std::size_t {
        if (auto it = node_of_subset.find(s); it != node_of_subset.end()) return it->second;
        for (std::size_t i = 0; i < fa.nodes.size(); ++i) {
            if (languages_equal(g, s, fa.nodes[i])) {
                node_of_subset.emplace(s, i);
                return i;
            }
        }
        if (fa.nodes.size() >= node_budget) {
            throw BudgetError("follower automaton exceeded node budget of " +
                              std::to_string(node_budget));
        }
        fa.nodes.push_back(s);
        node_of_subset.emplace(s, fa.nodes.size() - 1);
        return fa.nodes.size() - 1;
    };

    fa.initial = node_for(full_state_set(g));
    std::deque<std::size_t> queue{fa.initial};
    std::set<std::size_t> expanded;

    while (!queue.empty()) {
        std::size_t node = queue.front();
        queue.pop_front();
        if (!expanded.insert(node).second) continue;
        for (const auto& a : g.alphabet().letters()) {
            StateSet image = transition(g, fa.nodes[node], a);
            if (image.empty()) continue; // no transition; empty set is the sink
            std::size_t target = node_for(image);
            fa.transitions.emplace(std::make_pair(node, a), target);
            if (!expanded.count(target)) queue.push_back(target);
        }
    }
    return fa;
}

std::vector<std::vector<std::size_t>> classes_by_length(const FollowerAutomaton& fa,
                                                        const LabeledGraph& g,
                                                        std::size_t n_max) {
    std::vector<std::vector<std::size_t>> out;
    std::set<std::size_t> frontier{fa.initial};
    for (std::size_t len = 0; len <= n_max; ++len) {
        out.emplace_back(frontier.begin(), frontier.end());
        std::set<std::size_t> next;
        for (std::size_t node : frontier) {
            for (const auto& a : g.alphabet().letters()) {
                auto it = fa.transitions.find({node, a});
                if (it != fa.transitions.end()) next.insert(it->second);
            }
        }
        frontier = std::move(next);
    }
    return out;
}

std::size_t cumulative_follower_count(const LabeledGraph& g, std::size_t n) {
    auto fa = follower_automaton(g);
    auto layers = classes_by_length(fa, g, n);
    std::set<std::size_t> all;
    for (const auto& layer : layers) all.insert(layer.begin(), layer.end());
    return all.size();
}

bool unions_criterion(const LabeledGraph& g, std::size_t n) {
    if (n < 1) throw ValidationError("unions criterion requires n >= 1");
    auto fa = follower_automaton(g);
    auto layers = classes_by_length(fa, g, n);
    std::set<std::size_t> earlier;
    for (std::size_t len = 0; len < n; ++len) {
        earlier.insert(layers[len].begin(), layers[len].end());
    }
    return std::all_of(layers[n].begin(), layers[n].end(),
                       [&](std::size_t node) { return earlier.count(node) > 0; });
}

LanguageOracle graph_oracle(const LabeledGraph& g) {
    return LanguageOracle{
        g.alphabet(),
        [g](const Word& w) { return !run(g, full_state_set(g), w).empty(); },
    };
}

} // namespace soficheck
