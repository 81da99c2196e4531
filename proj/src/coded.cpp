#include "soficheck/coded.hpp"

#include <algorithm>

#include "soficheck/sofic.hpp"

namespace soficheck::coded {

SGapSpec sgap_from_list(std::vector<long long> gaps) {
    if (gaps.empty()) throw ValidationError("gap list must be nonempty");
    for (long long g : gaps) {
        if (g < 0) throw ValidationError("gap lengths must be nonnegative");
    }
    std::sort(gaps.begin(), gaps.end());
    SGapSpec spec;
    spec.cutoff = gaps.back();
    spec.complete = true;
    spec.gap_predicate = [gaps](long long j) {
        return std::binary_search(gaps.begin(), gaps.end(), j);
    };
    return spec;
}

SGapSpec sgap_rule(const std::string& name, long long cutoff) {
    SGapSpec spec;
    spec.cutoff = cutoff;
    spec.complete = false;
    if (name == "powers-of-2") {
        spec.gap_predicate = [](long long j) { return j > 0 && (j & (j - 1)) == 0; };
    } else {
        throw ValidationError("unknown gap rule: " + name);
    }
    bool any = false;
    for (long long j = 0; j <= cutoff; ++j) {
        if (spec.gap_predicate(j)) { any = true; break; }
    }
    if (!any) throw ValidationError("no gap value within cutoff; empty system");
    return spec;
}

CodedSystem from_sofic(const LabeledGraph& g, const Letter& separator) {
    if (g.alphabet().contains(separator)) {
        throw ValidationError("separator collides with base alphabet: " + separator);
    }
    CodedSystem sys;
    sys.base_alphabet = g.alphabet();
    sys.separator = separator;
    auto full = g.alphabet().letters();
    full.push_back(separator);
    sys.full_alphabet = Alphabet::of(std::move(full));

    // W = L(X): prefix, suffix and factor closure of W are all L(X) itself.
    auto member = [g](const Word& w) { return !run(g, full_state_set(g), w).empty(); };
    sys.is_in_W = member;
    sys.is_W_prefix = member;
    sys.is_W_suffix = member;
    sys.is_cfree_factor = member;
    return sys;
}

namespace {

const Letter kZero = "0";
const Letter kOne = "1";

// Length of a run of "0" letters, or -1 when some other letter occurs.
long long run_length(const Word& w) {
    for (const auto& a : w.letters) {
        if (a != kZero) return -1;
    }
    return static_cast<long long>(w.size());
}

} // namespace

CodedSystem sgap(const SGapSpec& spec) {
    {
        bool any = false;
        for (long long j = 0; j <= spec.cutoff; ++j) {
            if (spec.gap_predicate(j)) { any = true; break; }
        }
        if (!any) throw ValidationError("no gap value within cutoff; empty system");
    }

    CodedSystem sys;
    sys.base_alphabet = Alphabet::of({kZero});
    sys.separator = kOne;
    sys.full_alphabet = Alphabet::of({kZero, kOne});

    sys.is_in_W = [spec](const Word& w) {
        long long j = run_length(w);
        if (j < 0) return false;
        if (j > spec.cutoff && !spec.complete) {
            throw CutoffError("gap query " + std::to_string(j) + " beyond cutoff " +
                              std::to_string(spec.cutoff));
        }
        return j <= spec.cutoff && spec.gap_predicate(j);
    };
    auto extendable = [spec](const Word& w) {
        long long j = run_length(w);
        if (j < 0) return false;
        for (long long s = j; s <= spec.cutoff; ++s) {
            if (spec.gap_predicate(s)) return true;
        }
        if (!spec.complete) {
            throw CutoffError("gap search from " + std::to_string(j) +
                              " exhausted cutoff " + std::to_string(spec.cutoff));
        }
        return false;
    };
    sys.is_W_prefix = extendable;
    sys.is_W_suffix = extendable;
    sys.is_cfree_factor = extendable;
    return sys;
}

bool membership(const CodedSystem& sys, const Word& u) {
    for (const auto& a : u.letters) {
        if (!sys.full_alphabet.contains(a)) {
            throw ValidationError("letter outside the coded alphabet: " + a);
        }
    }
    std::vector<Word> segments{Word{}};
    for (const auto& a : u.letters) {
        if (a == sys.separator) {
            segments.emplace_back();
        } else {
            segments.back().letters.push_back(a);
        }
    }
    if (segments.size() == 1) {
        return sys.is_cfree_factor(segments[0]);
    }
    if (!sys.is_W_suffix(segments.front())) return false;
    for (std::size_t i = 1; i + 1 < segments.size(); ++i) {
        if (!sys.is_in_W(segments[i])) return false;
    }
    return sys.is_W_prefix(segments.back());
}

Word normalize_after_separator(const CodedSystem& sys, const Word& u) {
    auto it = std::find(u.letters.rbegin(), u.letters.rend(), sys.separator);
    if (it == u.letters.rend()) {
        throw ValidationError("word contains no separator");
    }
    auto pos = static_cast<std::size_t>(u.letters.rend() - it) - 1;
    return u.suffix(u.size() - pos);
}

LanguageOracle oracle(const CodedSystem& sys) {
    return LanguageOracle{
        sys.full_alphabet,
        [sys](const Word& w) { return membership(sys, w); },
    };
}

} // namespace soficheck::coded
