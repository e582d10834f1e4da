#pragma once

#include "lsb/runword.hpp"

namespace lsb {

class RunCountOverflow : public std::runtime_error {
public:
    explicit RunCountOverflow(const Count& count)
        : std::runtime_error("run count " + count.str() +
                             " exceeds 9; rule only defined for single-digit counts") {}
};

// Kid: every digit <= 3. Adult: every digit >= 4. Mixed: neither.
enum class WordType { Kid, Adult, Mixed };

const char* word_type_name(WordType t);

// Partial maxmap z: piece a^n -> decimal digits of max(a, n), then a.
std::vector<Run> z_piece(const Run& r);

// One LSB step: z applied to every piece, outputs concatenated and normalized.
RunWord lsb_step(const RunWord& w);

// Conway's look-and-say step: piece a^n -> n || a. Requires every count <= 9.
RunWord ls_step(const RunWord& w);

// Look-and-say-again step: piece a^n -> n || n || a || a. Requires counts <= 9.
RunWord lsa_step(const RunWord& w);

WordType classify(const RunWord& w);

Digit last_digit(const RunWord& w);

Count max_run(const RunWord& w);

}  // namespace lsb
