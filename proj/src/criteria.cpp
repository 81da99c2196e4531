#include "soficheck/criteria.hpp"

#include <algorithm>
#include <set>

#include "soficheck/updown.hpp"

namespace soficheck::criteria {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::certified_sofic: return "certified-sofic";
        case Verdict::hypothesis_not_met: return "hypothesis-not-met";
        case Verdict::not_applicable: return "not-applicable";
    }
    return "not-applicable";
}

nlohmann::ordered_json CriterionReport::to_json() const {
    nlohmann::ordered_json j;
    j["criterion"] = criterion;
    j["n"] = n;
    j["quantities"] = quantities;
    j["verdict"] = to_string(verdict);
    j["citation"] = citation;
    return j;
}

std::size_t ExactClassView::count_at(std::size_t n) const {
    return keys_by_length.at(n).size();
}

std::size_t ExactClassView::cumulative_count(std::size_t n) const {
    std::set<std::string> all;
    for (std::size_t len = 0; len <= n; ++len) {
        all.insert(keys_by_length.at(len).begin(), keys_by_length.at(len).end());
    }
    return all.size();
}

ExactClassView view_from_graph(const LabeledGraph& g, std::size_t n_max,
                               const std::string& system_name) {
    auto fa = follower_automaton(g);
    auto layers = classes_by_length(fa, g, n_max);
    ExactClassView view;
    view.system = system_name;
    view.empty_word_key = "node" + std::to_string(fa.initial);
    for (const auto& layer : layers) {
        std::vector<std::string> keys;
        keys.reserve(layer.size());
        for (std::size_t node : layer) keys.push_back("node" + std::to_string(node));
        view.keys_by_length.push_back(std::move(keys));
    }
    return view;
}

ExactClassView view_from_updown(std::size_t n_max, std::size_t cap) {
    ExactClassView view;
    view.system = "updown";
    view.empty_word_key = updown::VertexSet::ray(0).str();
    view.keys_by_length.push_back({view.empty_word_key});
    for (std::size_t n = 1; n <= n_max; ++n) {
        updown::TableOptions opts;
        opts.cap = cap;
        auto table = updown::follower_table(n, opts);
        std::set<std::string> keys;
        for (const auto& [value, word] : table.classes) keys.insert(value.str());
        view.keys_by_length.emplace_back(keys.begin(), keys.end());
    }
    return view;
}

namespace {

const char* kUnionsCitation =
    "if every follower class at length n occurs at a shorter length, the shift is sofic";
const char* kCumulativeCitation =
    "if the classes over all lengths <= n number at most n, the shift is sofic";
const char* kLogCitation =
    "if |F(n)| <= log2(n+1), i.e. 2^|F(n)| <= n+1, the shift is sofic";
const char* kFullShiftCitation =
    "a single follower class at some length forces a full shift";
const char* kComplexityCitation =
    "p(n) <= n for some n forces a finite set of periodic points";
const char* kConjectureCitation =
    "slow-growth conjecture: |F(n)| <= n would imply soficity; proven for n <= 3";

CriterionReport not_applicable(const std::string& criterion, std::size_t n,
                               const std::string& system, const char* citation) {
    CriterionReport r;
    r.criterion = criterion;
    r.n = static_cast<long long>(n);
    r.quantities["system"] = system;
    r.quantities["note"] = "depth-limited lower bounds cannot certify containment";
    r.verdict = Verdict::not_applicable;
    r.citation = citation;
    return r;
}

} // namespace

CriterionReport check_unions(const ExactClassView& view, std::size_t n) {
    if (n < 1) throw ValidationError("unions check requires n >= 1");
    CriterionReport r;
    r.criterion = "unions";
    r.n = static_cast<long long>(n);
    r.citation = kUnionsCitation;

    std::set<std::string> earlier;
    for (std::size_t len = 0; len < n; ++len) {
        earlier.insert(view.keys_by_length.at(len).begin(), view.keys_by_length.at(len).end());
    }
    std::vector<std::string> fresh;
    for (const auto& key : view.keys_by_length.at(n)) {
        if (!earlier.count(key)) fresh.push_back(key);
    }
    r.quantities["system"] = view.system;
    r.quantities["count_at_n"] = view.count_at(n);
    r.quantities["new_classes_at_n"] = fresh.size();
    r.verdict = fresh.empty() ? Verdict::certified_sofic : Verdict::hypothesis_not_met;
    return r;
}

CriterionReport check_unions(const DepthLimitedView& view, std::size_t n) {
    return not_applicable("unions", n, view.system, kUnionsCitation);
}

CriterionReport check_cumulative(const ExactClassView& view, std::size_t n) {
    CriterionReport r;
    r.criterion = "cumulative";
    r.n = static_cast<long long>(n);
    r.citation = kCumulativeCitation;

    std::size_t cumulative = view.cumulative_count(n);
    r.quantities["system"] = view.system;
    r.quantities["cumulative_count"] = cumulative;

    // Byproduct: lengths >= 1 whose classes include the empty word's class.
    std::vector<std::size_t> recurrences;
    for (std::size_t len = 1; len <= n; ++len) {
        const auto& keys = view.keys_by_length.at(len);
        if (std::find(keys.begin(), keys.end(), view.empty_word_key) != keys.end()) {
            recurrences.push_back(len);
        }
    }
    if (!recurrences.empty()) {
        r.quantities["empty_word_class_at_lengths"] = recurrences;
    }
    r.verdict = cumulative <= n ? Verdict::certified_sofic : Verdict::hypothesis_not_met;
    return r;
}

CriterionReport check_cumulative(const DepthLimitedView& view, std::size_t n) {
    return not_applicable("cumulative", n, view.system, kCumulativeCitation);
}

CriterionReport check_log(std::size_t count, std::size_t n) {
    CriterionReport r;
    r.criterion = "log";
    r.n = static_cast<long long>(n);
    r.citation = kLogCitation;
    r.quantities["count"] = count;

    // 2^count <= n+1, in integers only; counts past 63 bits always fail.
    bool certified = count < 64 && (static_cast<unsigned long long>(1) << count) <= n + 1;
    r.verdict = certified ? Verdict::certified_sofic : Verdict::hypothesis_not_met;
    return r;
}

CriterionReport check_full_shift(const LanguageOracle& o, std::size_t count_at_n,
                                 std::size_t n) {
    CriterionReport r;
    r.criterion = "full-shift";
    r.n = static_cast<long long>(n);
    r.citation = kFullShiftCitation;
    r.quantities["count"] = count_at_n;

    if (count_at_n != 1) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    bool all_pairs = true;
    for (const auto& a : o.alphabet.letters()) {
        for (const auto& b : o.alphabet.letters()) {
            if (!o.contains((Word{} + a) + b)) {
                all_pairs = false;
            }
        }
    }
    r.quantities["all_letter_pairs_present"] = all_pairs;
    if (all_pairs) {
        r.quantities["note"] = "full shift on active alphabet";
        r.verdict = Verdict::certified_sofic;
    } else {
        r.quantities["note"] = "class count 1 but some letter pair missing; oracle is not a subshift language";
        r.verdict = Verdict::not_applicable;
    }
    return r;
}

CriterionReport word_complexity_check(const LanguageOracle& o, std::size_t n_max) {
    CriterionReport r;
    r.criterion = "word-complexity";
    r.n = static_cast<long long>(n_max);
    r.citation = kComplexityCitation;

    std::vector<std::size_t> complexity;
    std::optional<std::size_t> certifying_n;
    for (std::size_t n = 1; n <= n_max; ++n) {
        complexity.push_back(enumerate_language(o, n).size());
        if (!certifying_n && complexity.back() <= n) certifying_n = n;
    }
    r.quantities["complexity"] = complexity;

    if (!certifying_n) {
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    r.quantities["certifying_n"] = *certifying_n;

    // Unique right extension from the certifying length to the horizon.
    bool unique = true;
    for (std::size_t len = *certifying_n; len < n_max && unique; ++len) {
        for (const auto& w : enumerate_language(o, len)) {
            std::size_t extensions = 0;
            for (const auto& a : o.alphabet.letters()) {
                if (o.contains(w + a)) ++extensions;
            }
            if (extensions != 1) {
                unique = false;
                break;
            }
        }
    }
    r.quantities["unique_extension_verified"] = unique;
    if (unique) {
        r.quantities["note"] = "finite set of periodic points";
        r.verdict = Verdict::certified_sofic;
    } else {
        r.quantities["note"] = "complexity bound met but extensions not unique; oracle is not a subshift language";
        r.verdict = Verdict::not_applicable;
    }
    return r;
}

CriterionReport conjecture_probe(const std::vector<std::size_t>& counts,
                                 std::optional<bool> sofic_known) {
    CriterionReport r;
    r.criterion = "conjecture-probe";
    r.n = static_cast<long long>(counts.size());
    r.citation = kConjectureCitation;
    r.quantities["counts"] = counts;

    std::optional<std::size_t> least_n;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        if (counts[i] <= i + 1) {
            least_n = i + 1;
            break;
        }
    }
    if (sofic_known.has_value()) {
        r.quantities["sofic_known"] = *sofic_known;
    } else {
        r.quantities["sofic_known"] = "unknown";
    }

    if (!least_n) {
        r.quantities["least_n"] = nullptr;
        r.quantities["violation"] = false;
        r.verdict = Verdict::hypothesis_not_met;
        return r;
    }
    r.quantities["least_n"] = *least_n;

    bool violation = sofic_known.has_value() && !*sofic_known;
    r.quantities["violation"] = violation;
    if (violation) {
        r.quantities["note"] = "count <= n on a certified-nonsofic system: conjecture violation";
        r.verdict = Verdict::not_applicable;
        return r;
    }
    if (*least_n <= 3) {
        // The n <= 3 cases are settled, so a hit there certifies on its own.
        r.quantities["note"] = "count <= n at n <= 3 certifies soficity";
        r.verdict = Verdict::certified_sofic;
    } else {
        r.quantities["note"] = "evidence only; the general conjecture is open";
        r.verdict = Verdict::not_applicable;
    }
    return r;
}

} // namespace soficheck::criteria
