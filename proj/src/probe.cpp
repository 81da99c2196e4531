#include "soficheck/probe.hpp"

#include <algorithm>

namespace soficheck::probe {

namespace {

void check_budget(std::size_t alphabet, std::size_t depth, std::size_t budget) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < depth; ++i) {
        if (total > budget / alphabet) {
            throw BudgetError("profile would test more than " + std::to_string(budget) +
                              " extensions");
        }
        total *= alphabet;
    }
    if (total > budget) {
        throw BudgetError("profile would test more than " + std::to_string(budget) +
                          " extensions");
    }
}

// Right extensions u of length `depth` with base+u in the language, pruned
// prefix-wise (valid by factoriality).
void right_rec(const LanguageOracle& o, const Word& base, Word& ext, std::size_t depth,
               std::vector<Word>& out) {
    if (ext.size() == depth) {
        out.push_back(ext);
        return;
    }
    for (const auto& a : o.alphabet.letters()) {
        ext.letters.push_back(a);
        if (o.contains(base + ext)) {
            right_rec(o, base, ext, depth, out);
        }
        ext.letters.pop_back();
    }
}

// Left extensions u of length `depth` with u+base in the language, built
// right-to-left and pruned suffix-wise.
void left_rec(const LanguageOracle& o, const Word& base, Word& ext, std::size_t depth,
              std::vector<Word>& out) {
    if (ext.size() == depth) {
        out.push_back(ext);
        return;
    }
    for (const auto& a : o.alphabet.letters()) {
        Word candidate = (Word{} + a) + ext;
        if (o.contains(candidate + base)) {
            left_rec(o, base, candidate, depth, out);
        }
    }
}

} // namespace

std::string ExtensionProfile::canonical_key() const {
    std::string key;
    switch (side) {
        case ProfileSide::follower: key = "F"; break;
        case ProfileSide::predecessor: key = "P"; break;
        case ProfileSide::extender: key = "E"; break;
    }
    key += std::to_string(depth) + "|";
    for (const auto& w : extensions) key += w.str() + ";";
    for (const auto& [p, s] : pairs) key += p.str() + "/" + s.str() + ";";
    return key;
}

ExtensionProfile profile(const LanguageOracle& o, const Word& w, ProfileSide side,
                         std::size_t depth, std::size_t budget) {
    if (depth < 1) throw ValidationError("profile depth must be >= 1");
    if (!o.contains(w)) {
        throw ValidationError("word not in language: '" + w.str() + "'");
    }
    check_budget(o.alphabet.size(), side == ProfileSide::extender ? 2 * depth : depth,
                 budget);

    ExtensionProfile p;
    p.word = w;
    p.side = side;
    p.depth = depth;
    Word ext;

    switch (side) {
        case ProfileSide::follower:
            right_rec(o, w, ext, depth, p.extensions);
            break;
        case ProfileSide::predecessor:
            left_rec(o, w, ext, depth, p.extensions);
            break;
        case ProfileSide::extender: {
            std::vector<Word> lefts;
            left_rec(o, w, ext, depth, lefts);
            for (const auto& l : lefts) {
                std::vector<Word> rights;
                Word r;
                right_rec(o, l + w, r, depth, rights);
                for (auto& s : rights) p.pairs.emplace_back(l, std::move(s));
            }
            break;
        }
    }
    std::sort(p.extensions.begin(), p.extensions.end());
    std::sort(p.pairs.begin(), p.pairs.end());
    return p;
}

Classification classify(const LanguageOracle& o, std::size_t n, ProfileSide side,
                        std::size_t depth, std::size_t budget) {
    Classification result;
    std::map<std::string, std::size_t> ids;
    for (const auto& w : enumerate_language(o, n)) {
        std::string key = profile(o, w, side, depth, budget).canonical_key();
        auto [it, inserted] = ids.emplace(std::move(key), result.count);
        if (inserted) ++result.count;
        result.assignments.emplace(w, it->second);
    }
    return result;
}

} // namespace soficheck::probe
