#include "soficheck/core.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace soficheck {

Alphabet Alphabet::of(std::vector<Letter> letters) {
    if (letters.empty()) {
        throw ValidationError("alphabet must be nonempty");
    }
    std::sort(letters.begin(), letters.end());
    auto dup = std::adjacent_find(letters.begin(), letters.end());
    if (dup != letters.end()) {
        throw ValidationError("duplicate letter in alphabet: " + *dup);
    }
    for (const auto& l : letters) {
        if (l.empty()) {
            throw ValidationError("empty token in alphabet");
        }
    }
    Alphabet a;
    a.letters_ = std::move(letters);
    return a;
}

bool Alphabet::contains(const Letter& a) const {
    return std::binary_search(letters_.begin(), letters_.end(), a);
}

std::size_t Alphabet::index_of(const Letter& a) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a) {
        throw ValidationError("letter not in alphabet: " + a);
    }
    return static_cast<std::size_t>(it - letters_.begin());
}

Word Word::of_chars(std::string_view chars) {
    std::vector<Letter> ls;
    ls.reserve(chars.size());
    for (char c : chars) {
        ls.emplace_back(1, c);
    }
    return Word(std::move(ls));
}

Word Word::prefix(std::size_t len) const {
    return Word({letters.begin(), letters.begin() + static_cast<std::ptrdiff_t>(len)});
}

Word Word::suffix(std::size_t len) const {
    return Word({letters.end() - static_cast<std::ptrdiff_t>(len), letters.end()});
}

Word Word::reversed() const {
    return Word({letters.rbegin(), letters.rend()});
}

std::string Word::str() const {
    std::string out;
    for (std::size_t i = 0; i < letters.size(); ++i) {
        if (i > 0) out += ' ';
        out += letters[i];
    }
    return out;
}

Word operator+(const Word& u, const Word& v) {
    Word w = u;
    w.letters.insert(w.letters.end(), v.letters.begin(), v.letters.end());
    return w;
}

Word operator+(const Word& u, const Letter& a) {
    Word w = u;
    w.letters.push_back(a);
    return w;
}

std::strong_ordering operator<=>(const Word& u, const Word& v) {
    if (auto c = u.letters.size() <=> v.letters.size(); c != 0) return c;
    return std::lexicographical_compare_three_way(u.letters.begin(), u.letters.end(),
                                                  v.letters.begin(), v.letters.end());
}

LabeledGraph::LabeledGraph(std::vector<std::string> states, Alphabet alphabet,
                           std::vector<Edge> edges)
    : states_(std::move(states)), alphabet_(std::move(alphabet)), edges_(std::move(edges)) {
    std::sort(states_.begin(), states_.end());
    if (auto dup = std::adjacent_find(states_.begin(), states_.end()); dup != states_.end()) {
        throw ValidationError("duplicate state: " + *dup);
    }
    std::sort(edges_.begin(), edges_.end());
    if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
        throw ValidationError("duplicate edge: " + dup->src + " " + dup->label + " " + dup->dst);
    }
    for (const auto& e : edges_) {
        if (!has_state(e.src)) throw ValidationError("edge references unknown state: " + e.src);
        if (!has_state(e.dst)) throw ValidationError("edge references unknown state: " + e.dst);
        if (!alphabet_.contains(e.label)) {
            throw ValidationError("edge label not in alphabet: " + e.label);
        }
    }
}

bool LabeledGraph::has_state(const std::string& s) const {
    return std::binary_search(states_.begin(), states_.end(), s);
}

std::size_t LabeledGraph::state_index(const std::string& s) const {
    auto it = std::lower_bound(states_.begin(), states_.end(), s);
    if (it == states_.end() || *it != s) {
        throw ValidationError("unknown state: " + s);
    }
    return static_cast<std::size_t>(it - states_.begin());
}

namespace {

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

} // namespace

LabeledGraph parse_presentation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;

    std::vector<Letter> letters;
    std::vector<std::string> states;
    std::vector<Edge> edges;
    bool saw_alphabet = false;
    bool saw_states = false;

    while (std::getline(in, raw)) {
        ++lineno;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        auto toks = split_ws(raw);
        if (toks.empty()) continue;

        const std::string& key = toks[0];
        if (key == "alphabet:") {
            if (saw_alphabet) throw ParseError("repeated alphabet line", lineno);
            letters.assign(toks.begin() + 1, toks.end());
            saw_alphabet = true;
        } else if (key == "states:") {
            if (saw_states) throw ParseError("repeated states line", lineno);
            states.assign(toks.begin() + 1, toks.end());
            saw_states = true;
        } else if (key == "edge:") {
            if (toks.size() != 4) {
                throw ParseError("edge line must be 'edge: src label dst'", lineno);
            }
            edges.push_back(Edge{toks[1], toks[2], toks[3]});
        } else {
            throw ParseError("unrecognized record '" + key + "'", lineno);
        }
    }
    if (!saw_alphabet) throw ParseError("missing alphabet line", lineno);
    if (!saw_states) throw ParseError("missing states line", lineno);

    return LabeledGraph(std::move(states), Alphabet::of(std::move(letters)), std::move(edges));
}

std::string serialize_presentation(const LabeledGraph& g) {
    std::string out = "alphabet:";
    for (const auto& l : g.alphabet().letters()) out += " " + l;
    out += "\nstates:";
    for (const auto& s : g.states()) out += " " + s;
    out += "\n";
    for (const auto& e : g.edges()) {
        out += "edge: " + e.src + " " + e.label + " " + e.dst + "\n";
    }
    return out;
}

LabeledGraph essentialize(const LabeledGraph& g) {
    std::set<std::string> alive(g.states().begin(), g.states().end());
    std::vector<Edge> edges = g.edges();

    for (;;) {
        std::set<std::string> has_out, has_in;
        for (const auto& e : edges) {
            has_out.insert(e.src);
            has_in.insert(e.dst);
        }
        std::set<std::string> keep;
        for (const auto& s : alive) {
            if (has_out.count(s) && has_in.count(s)) keep.insert(s);
        }
        if (keep == alive) break;
        alive = std::move(keep);
        std::erase_if(edges, [&](const Edge& e) {
            return !alive.count(e.src) || !alive.count(e.dst);
        });
    }

    if (alive.empty()) {
        throw ValidationError("presents the empty subshift");
    }
    return LabeledGraph({alive.begin(), alive.end()}, g.alphabet(), std::move(edges));
}

namespace {

void enumerate_rec(const LanguageOracle& o, std::size_t n, Word& cur,
                   std::vector<Word>& out) {
    if (cur.size() == n) {
        out.push_back(cur);
        return;
    }
    for (const auto& a : o.alphabet.letters()) {
        cur.letters.push_back(a);
        if (o.contains(cur)) {
            enumerate_rec(o, n, cur, out);
        }
        cur.letters.pop_back();
    }
}

} // namespace

std::vector<Word> enumerate_language(const LanguageOracle& o, std::size_t n) {
    std::vector<Word> out;
    Word cur;
    if (!o.contains(cur)) {
        return out; // empty subshift
    }
    enumerate_rec(o, n, cur, out);
    return out;
}

} // namespace soficheck
