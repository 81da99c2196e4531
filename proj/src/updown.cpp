#include "soficheck/updown.hpp"

#include <algorithm>

namespace soficheck::updown {

const Letter U = "U";
const Letter D = "D";
const Letter E = "E";

Alphabet alphabet() { return Alphabet::of({U, D, E}); }

VertexSet VertexSet::interval(long long lo, long long hi) {
    if (hi <= lo) return make_empty();
    VertexSet s;
    s.kind = Kind::interval;
    s.lo = lo;
    s.hi = hi;
    return s;
}

VertexSet VertexSet::ray(long long lo) {
    VertexSet s;
    s.kind = Kind::ray;
    s.lo = lo;
    return s;
}

bool VertexSet::contains(long long v) const {
    switch (kind) {
        case Kind::empty: return false;
        case Kind::interval: return lo <= v && v < hi;
        case Kind::ray: return lo <= v;
    }
    return false;
}

std::string VertexSet::str() const {
    switch (kind) {
        case Kind::empty: return "empty";
        case Kind::interval:
            return "[" + std::to_string(lo) + "," + std::to_string(hi) + ")";
        case Kind::ray: return "[" + std::to_string(lo) + ",inf)";
    }
    return "empty";
}

VertexSet forward_step(const VertexSet& s, const Letter& a) {
    if (s.is_empty()) return VertexSet::make_empty();
    if (a == U) {
        if (s.kind == VertexSet::Kind::ray) return VertexSet::ray(s.lo + 1);
        return VertexSet::interval(s.lo + 1, s.hi + 1);
    }
    if (a == D) {
        // Only vertices >= 1 carry a D edge; clip 0 out before halving.
        if (s.kind == VertexSet::Kind::ray) {
            return VertexSet::ray(std::max(s.lo, 1LL) / 2);
        }
        long long lo = std::max(s.lo, 1LL);
        if (s.hi <= lo) return VertexSet::make_empty();
        return VertexSet::interval(lo / 2, (s.hi - 1) / 2 + 1);
    }
    if (a == E) {
        // The E edge exists only at vertex 0 and terminates at 0.
        return s.contains(0) ? VertexSet::interval(0, 1) : VertexSet::make_empty();
    }
    throw ValidationError("letter outside {U,D,E}: " + a);
}

VertexSet backward_step(const VertexSet& s, const Letter& a) {
    if (s.is_empty()) return VertexSet::make_empty();
    if (a == U) {
        if (s.kind == VertexSet::Kind::ray) return VertexSet::ray(std::max(s.lo - 1, 0LL));
        return VertexSet::interval(std::max(s.lo - 1, 0LL), s.hi - 1);
    }
    if (a == D) {
        // { n : floor(n/2) in s, n has a D edge }; vertex 0 has none.
        if (s.kind == VertexSet::Kind::ray) return VertexSet::ray(std::max(2 * s.lo, 1LL));
        return VertexSet::interval(std::max(2 * s.lo, 1LL), 2 * s.hi);
    }
    if (a == E) {
        return s.contains(0) ? VertexSet::interval(0, 1) : VertexSet::make_empty();
    }
    throw ValidationError("letter outside {U,D,E}: " + a);
}

VertexSet terminal_set(const Word& w) {
    VertexSet s = VertexSet::ray(0);
    for (const auto& a : w.letters) {
        s = forward_step(s, a);
        if (s.is_empty()) break;
    }
    return s;
}

VertexSet initial_set(const Word& w) {
    VertexSet s = VertexSet::ray(0);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        s = backward_step(s, *it);
        if (s.is_empty()) break;
    }
    return s;
}

VertexSet closed_form(const Word& v, long long a, long long b) {
    // Walk v right to left: each U contributes 2^(D count to its left). The
    // exponents are strictly decreasing because v has no consecutive U.
    long long correction = 0; // sum of 2^{n_i}
    bool prev_was_u = false;
    long long d_total = static_cast<long long>(
        std::count(v.letters.begin(), v.letters.end(), D));
    long long d_seen_right = 0;
    long long u_count = 0;
    for (auto it = v.letters.rbegin(); it != v.letters.rend(); ++it) {
        if (*it == D) {
            ++d_seen_right;
            prev_was_u = false;
        } else if (*it == U) {
            if (prev_was_u) {
                throw ValidationError("closed form requires no consecutive U symbols");
            }
            correction += 1LL << (d_total - d_seen_right);
            ++u_count;
            prev_was_u = true;
        } else {
            throw ValidationError("closed form input must be over {U,D}: " + *it);
        }
    }

    // The left endpoint drops by at most 1 per U and never at a D, so a > #U
    // keeps every intermediate set clear of vertex 0 and the fold clamp-free.
    if (u_count >= a) {
        throw ValidationError("closed form requires seed left endpoint a > U count of v");
    }
    long long lo = (a << d_total) - correction;
    long long hi = (b << d_total) - correction;
    if (lo < 0) {
        throw ValidationError("closed form produced a negative left endpoint");
    }
    return VertexSet::interval(lo, hi);
}

namespace {

void enumerate_rec(std::size_t n, Word& cur, const VertexSet& s,
                   const std::vector<Letter>& letters,
                   const std::function<void(const Word&, const VertexSet&)>& visit) {
    if (cur.size() == n) {
        visit(cur, s);
        return;
    }
    for (const auto& a : letters) {
        VertexSet next = forward_step(s, a);
        if (next.is_empty()) continue;
        cur.letters.push_back(a);
        enumerate_rec(n, cur, next, letters, visit);
        cur.letters.pop_back();
    }
}

Table build_table(std::size_t n, const TableOptions& opts,
                  const std::function<VertexSet(const Word&, const VertexSet&)>& value_of) {
    if (n < 1) throw ValidationError("table requires n >= 1");
    if (n > opts.cap) {
        throw BudgetError("word length " + std::to_string(n) + " above cap " +
                          std::to_string(opts.cap));
    }
    Table table;
    table.n = n;
    std::map<VertexSet, std::size_t> ids;
    for_each_word(n, [&](const Word& w, const VertexSet& terminal) {
        VertexSet value = value_of(w, terminal);
        auto [it, inserted] = ids.emplace(value, table.classes.size());
        if (inserted) {
            table.classes.emplace_back(value, w); // first word in lex order
        }
        if (opts.with_assignments) {
            table.assignments.emplace(w, it->second);
        }
    });
    table.count = table.classes.size();
    return table;
}

} // namespace

void for_each_word(std::size_t n,
                   const std::function<void(const Word&, const VertexSet&)>& visit) {
    Word cur;
    enumerate_rec(n, cur, VertexSet::ray(0), alphabet().letters(), visit);
}

std::vector<Word> language(std::size_t n) {
    std::vector<Word> out;
    for_each_word(n, [&](const Word& w, const VertexSet&) { out.push_back(w); });
    return out;
}

Table follower_table(std::size_t n, const TableOptions& opts) {
    return build_table(n, opts,
                       [](const Word&, const VertexSet& terminal) { return terminal; });
}

Table predecessor_table(std::size_t n, const TableOptions& opts) {
    return build_table(n, opts,
                       [](const Word& w, const VertexSet&) { return initial_set(w); });
}

namespace {

void prefix_free_rec(std::size_t len, Word& cur, bool last_was_u, std::vector<Word>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    cur.letters.push_back(D);
    prefix_free_rec(len, cur, false, out);
    cur.letters.pop_back();
    if (!last_was_u) {
        cur.letters.push_back(U);
        prefix_free_rec(len, cur, true, out);
        cur.letters.pop_back();
    }
}

} // namespace

std::vector<Word> witness_set(std::size_t n) {
    if (n <= 6) throw ValidationError("witness set requires n > 6");
    std::size_t v_len = n / 2;
    std::size_t d_run = (n + 1) / 2 - 1;

    std::vector<Word> prefixes;
    Word cur;
    prefix_free_rec(v_len, cur, false, prefixes);

    Word tail;
    for (std::size_t i = 0; i < d_run; ++i) tail = tail + D;
    tail = tail + E;

    std::vector<Word> out;
    out.reserve(prefixes.size());
    for (const auto& v : prefixes) out.push_back(v + tail);
    return out;
}

Word follower_witness(long long k) {
    if (k < 0) throw ValidationError("follower witness requires k >= 0");
    long long m = 0;
    while ((1LL << m) <= k) ++m;
    Word w;
    for (long long i = 0; i < (1LL << m) - k - 1; ++i) w = w + U;
    for (long long i = 0; i < m; ++i) w = w + D;
    return w + E;
}

Word separating_word(const VertexSet& a, const VertexSet& b) {
    if (a.is_empty() || b.is_empty() || a == b) {
        throw ValidationError("separating word requires two distinct nonempty sets");
    }
    if (a.kind == VertexSet::Kind::interval && a.hi != a.lo + 1) {
        throw ValidationError("terminal values are singletons or rays");
    }
    if (b.kind == VertexSet::Kind::interval && b.hi != b.lo + 1) {
        throw ValidationError("terminal values are singletons or rays");
    }
    if (a.lo != b.lo) {
        return follower_witness(std::min(a.lo, b.lo));
    }
    // Same minimum, different kinds: D^(m+1) E succeeds from vertex 2^m in
    // the ray but fails from the singleton {lo}.
    long long m = 0;
    while ((1LL << m) <= a.lo) ++m;
    Word w;
    for (long long i = 0; i < m + 1; ++i) w = w + D;
    return w + E;
}

LanguageOracle oracle() {
    return LanguageOracle{
        alphabet(),
        [](const Word& w) { return !terminal_set(w).is_empty(); },
    };
}

} // namespace soficheck::updown
