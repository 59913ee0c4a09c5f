// The block morphism h from ternary words to S-words,
//
//   h(a) = 123123   h(b) = 132132   h(c) = 131313,
//
// its decode table, the ambiguity analysis for factors of block images,
// and the level construction: for circular square-free [v], the decode of
// expand_f(h(v)) is a circular square-free word of length 18|v| containing
// each letter exactly 6|v| times.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csf/words.hpp"

namespace csf {

struct Block {
    char source = 0;      // a, b or c
    std::string image;    // h(source), 6 digits
    std::string decode;   // delta(expand_f(image)), 20 letters ending "ab"
};

std::string apply_h(std::string_view v);

// Rows computed through delta and expand_f, never stored as constants.
std::array<Block, 3> block_decode_table();

// q occurs in images of square-free words at two offsets incongruent mod 6:
// h(alpha) = p1 q s1 and h(beta) = p2 q s2 with |p1| != |p2| (mod 6).
struct AmbiguityWitness {
    std::string alpha, beta;
    std::string p1, p2;
    std::string s1, s2;
};

// Search bounded by |alpha|, |beta| <= ceil(|q|/6) + 2.  Empty q is a
// DomainError.
std::optional<AmbiguityWitness> is_ambiguous(std::string_view q);

// Exhaustive over even lengths 2..8; no ambiguous word of length 8 exists,
// which bounds all longer ones.
std::vector<std::string> ambiguous_words_of_even_length();

// The three length-2 suffixes of the block images are pairwise distinct,
// as are the three length-3 prefixes.
bool synchronization_check();
bool synchronization_check(const std::array<std::string, 3>& images);

struct NecklaceBuild {
    std::string w;         // h applied to the canonical rotation
    CircularWord decoded;  // [delta(expand_f(w)) minus last two letters]
};

// v must be circular square-free (DomainError otherwise).  The decode is
// verified square-free, of length 18|v|, with equal letter counts.
NecklaceBuild build_from_necklace(const CircularWord& v);

}  // namespace csf
