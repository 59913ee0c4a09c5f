// Pansiot encoding and decoding for ternary square-free words, the
// expansion f from S-words to binary words, and the square-witness
// decomposition characterizing squares in decoded words.
//
// Encoding: bit i of pi(v) is 0 exactly when v[i] = v[i+2].  Decoding is
// total: delta(u) is the unique word with prefix "ab" whose encoding is u;
// the decode rule never produces adjacent equal letters.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "csf/words.hpp"

namespace csf {

// |v| >= 2 and no adjacent equal letters required; |pi(v)| = |v| - 2.
std::string pi(std::string_view v);

// Total on binary words; |delta(u)| = |u| + 2, prefix "ab".
std::string delta(std::string_view u);

// Drop the last two letters; |w| >= 2 required.
std::string truncate2(std::string_view w);

// Circular code of the representative as given: bit i is 0 iff
// v[i] = v[(i+2) mod n].  Rotating the input rotates the output.
// Requires |v| >= 2 and no adjacent equal letters circularly.
std::string circular_code(std::string_view v);

// Circular code computed from the canonical rotation.
std::string encode_circular(const CircularWord& cw);

// 1 -> 01, 2 -> 011, 3 -> 0111.
std::string expand_f(std::string_view U);

// |expand_f(U)| = |U| + digit sum of U, without building the image.
std::size_t f_length(std::string_view U);

// Decomposition u = V x y V where V x y labels a closed walk on D1;
// exists iff delta(u) contains a square.  V may be empty.
struct DeltaSquareWitness {
    std::string v;
    char chi = 0;
    char upsilon = 0;
    bool operator==(const DeltaSquareWitness&) const = default;
};

// Smallest |V| preferred; closure checked from all six start vertices.
std::optional<DeltaSquareWitness> square_witness_delta(std::string_view u);

}  // namespace csf
