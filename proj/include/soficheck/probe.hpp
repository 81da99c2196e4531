#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "soficheck/core.hpp"

namespace soficheck::probe {

/// Deliberately naive depth-d classifier from any LanguageOracle; the
/// independent ground truth against which the exact engines are checked.

enum class ProfileSide { follower, predecessor, extender };

/// Finite surrogate of a follower/predecessor/extender set: all length-d
/// extensions (or extension pairs) of a word within the language.
struct ExtensionProfile {
    Word word;
    ProfileSide side = ProfileSide::follower;
    std::size_t depth = 1;
    std::vector<Word> extensions;                 // follower / predecessor
    std::vector<std::pair<Word, Word>> pairs;     // extender

    std::string canonical_key() const;

    friend bool operator==(const ExtensionProfile&, const ExtensionProfile&) = default;
};

inline constexpr std::size_t kDefaultBudget = std::size_t{1} << 20;

/// Exhaustive profile of w: all |A|^d candidate extensions tested by
/// membership (|A|^2d pairs for extender). Throws if w is not in the
/// language or the candidate count exceeds the budget.
ExtensionProfile profile(const LanguageOracle& o, const Word& w, ProfileSide side,
                         std::size_t depth, std::size_t budget = kDefaultBudget);

struct Classification {
    std::size_t count = 0;
    std::map<Word, std::size_t> assignments; // class ids in canonical word order
};

/// Partition of L_n by equality of depth-d profiles. The count is a lower
/// bound on the true number of distinct sets, nondecreasing in d; for a
/// finite presentation it is exact once d is at least the square of the
/// number of reachable subset states.
Classification classify(const LanguageOracle& o, std::size_t n, ProfileSide side,
                        std::size_t depth, std::size_t budget = kDefaultBudget);

} // namespace soficheck::probe
