#pragma once

#include "soficheck/core.hpp"

namespace soficheck::builtin {

/// Two states q0, q1; edges q0-0->q0, q0-1->q1, q1-0->q0. No two adjacent 1s.
LabeledGraph golden_mean();

/// Two states A, B; edges A-1->A, A-0->B, B-0->A. Runs of 0 between 1s even.
LabeledGraph even_shift();

/// Single state, one self-loop per letter.
LabeledGraph full_shift(std::vector<Letter> letters);

/// Language of the orbit closure of the periodic sequence with the given
/// period: all words occurring in the bi-infinite repetition at any phase.
LanguageOracle periodic_orbit(const Word& period);

} // namespace soficheck::builtin
