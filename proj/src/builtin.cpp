#include "soficheck/builtin.hpp"

#include <set>

namespace soficheck::builtin {

LabeledGraph golden_mean() {
    return LabeledGraph({"q0", "q1"}, Alphabet::of({"0", "1"}),
                        {{"q0", "0", "q0"}, {"q0", "1", "q1"}, {"q1", "0", "q0"}});
}

LabeledGraph even_shift() {
    return LabeledGraph({"A", "B"}, Alphabet::of({"0", "1"}),
                        {{"A", "1", "A"}, {"A", "0", "B"}, {"B", "0", "A"}});
}

LabeledGraph full_shift(std::vector<Letter> letters) {
    std::vector<Edge> edges;
    for (const auto& a : letters) edges.push_back({"q", a, "q"});
    return LabeledGraph({"q"}, Alphabet::of(std::move(letters)), std::move(edges));
}

LanguageOracle periodic_orbit(const Word& period) {
    if (period.empty()) throw ValidationError("period must be nonempty");
    std::set<Letter> letters(period.letters.begin(), period.letters.end());
    auto alphabet = Alphabet::of({letters.begin(), letters.end()});
    return LanguageOracle{
        alphabet,
        [period](const Word& w) {
            if (w.empty()) return true;
            std::size_t p = period.size();
            for (std::size_t phase = 0; phase < p; ++phase) {
                bool match = true;
                for (std::size_t i = 0; i < w.size(); ++i) {
                    if (w.letters[i] != period.letters[(phase + i) % p]) {
                        match = false;
                        break;
                    }
                }
                if (match) return true;
            }
            return false;
        },
    };
}

} // namespace soficheck::builtin
