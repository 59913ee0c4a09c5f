// The walk graphs D1 and D2 on ordered pairs of distinct ternary letters,
// and the omega criterion for closed walks on D2.
//
// D1: edge labeled by a bit; xy --0--> yx and xy --1--> y(third letter).
// D2: edge labeled by an S-digit d; endpoint of the D1 walk labeled
// expand_f(d).  D2 is bipartite between {ab,bc,ca} and {ba,cb,ac}, and
// closure of an S-word's walk is independent of the start vertex:
// s labels a closed walk iff |s| is even and omega(s) = 0 (mod 3).
#pragma once

#include <array>
#include <string_view>

#include "csf/words.hpp"

namespace csf {

struct PairVertex {
    char first = 'a';
    char second = 'b';

    PairVertex() = default;
    PairVertex(char f, char s);  // DomainError unless a valid distinct pair

    static const std::array<PairVertex, 6>& all();
    static PairVertex from_id(int id);
    int id() const;  // 0..5, in the order of all()

    std::string str() const { return std::string{first, second}; }
    bool operator==(const PairVertex&) const = default;
};

PairVertex d1_step(PairVertex v, char bit);
PairVertex d2_step(PairVertex v, char digit);

PairVertex walk_endpoint_d1(PairVertex start, std::string_view bits);
PairVertex walk_endpoint_d2(PairVertex start, std::string_view digits);

// Alternating digit sum, signs +,-,+,... from the first letter.
long omega(std::string_view s);

// Even length and omega divisible by 3.
bool is_closed_walk_d2(std::string_view s);

// Closed from at least one of the six start vertices.
bool labels_closed_walk_d1(std::string_view bits);

}  // namespace csf
