// End-to-end construction of level ternary circular square-free words.
//
// Lengths 1..3 are the necklaces [a], [ab], [abc].  Lengths 4..89 come
// from stored short encodings (or a fresh search).  Lengths n >= 90 are
// assembled as n = 18m + r with r in 54..107 and m outside the impossible
// set: a base necklace [v] of length m is expanded through h, a linking
// word s with |expand_f(s)| = r supplies the glue, and the result is the
// circular word psi . omega where psi and omega are the truncated decodes
// of expand_f(s) and expand_f(h(v)).
//
// No level circular square-free word exists for n in {5,7,9,10,14,17};
// those lengths raise NoSuchLength.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "csf/search.hpp"
#include "csf/tables.hpp"
#include "csf/words.hpp"

namespace csf {

// Lengths with no circular square-free word at all.
bool is_impossible_length(std::size_t n);

struct BuildRecipe {
    enum class Kind { BruteForce, TableEntry, Composite };
    Kind kind = Kind::BruteForce;
    std::string u;  // TableEntry: the stored or found S-word
    std::string v;  // Composite: base word
    std::string s;  // Composite: linking word
};

struct BuildCertificate {
    std::size_t n = 0;
    CircularWord word;
    BuildRecipe recipe;
    bool level = false;
    bool circular_square_free = false;
};

// Word of length m with first letter a, last letter b and [v] circular
// square-free; backtracking search, result verified before return.
// NoSuchLength for m < 2 or impossible m.
std::string generate_base(std::size_t m);

// [delta(expand_f(U)) minus last two letters]; no validity implied.
CircularWord decode_entry(std::string_view U);

// S-word U with |U| + digitsum(U) = n whose decode_entry is level and
// circular square-free; exhaustive, so nullopt proves nonexistence.
// Accepts 4 <= n <= 90 (DomainError outside).
std::optional<std::string> search_short(std::size_t n, const SearchOptions& opts = {});

// n >= 90 (DomainError otherwise); uses stored tables when available and
// falls back to generate_base / search_link.
BuildCertificate assemble_long(std::size_t n, const Tables& tables);

// Any n >= 1; NoSuchLength on the impossible set, DomainError on n = 0.
// Every certificate is re-verified by direct scans before return.
BuildCertificate build(std::size_t n, const Tables& tables);
BuildCertificate build(std::size_t n);  // uses default_tables()

}  // namespace csf
