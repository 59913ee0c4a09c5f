// Linking words: s = 33 T 22 over S subject to seven conditions.  A valid
// linking word decodes to a glue segment psi = delta(expand_f(s)) minus
// its last two letters; prepending psi to a block decode of length 18m
// yields circular square-free words of length 18m + |expand_f(s)|.
//
// Conditions on s = 33 T 22:
//   1. s labels a closed walk on D2.
//   2. s has no factor h(mu) with |mu| >= 2 and [mu] circular square-free.
//   3. 2 s 1 has no factor VxyV with |V| >= 2 and Vxy a closed walk.
//   4. T begins and ends with 1.
//   5. T has no two adjacent equal letters.
//   6. T has no prefix q h(u) 13213 or 1 q h(u) 13213, q a block suffix.
//   7. T has no suffix 23123 h(u) p or 23123 h(u) p 1, p a block prefix.
// q and p range over all suffixes/prefixes of the three block images
// including the empty word and the full block; u over all ternary words.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "csf/search.hpp"
#include "csf/shur.hpp"

namespace csf {

struct LinkWord {
    std::string s;
    std::string t;            // s without the 33 prefix and 22 suffix
    std::size_t f_length = 0; // |s| + digit sum
};

struct LinkReport {
    bool frame = false;  // structural: starts 33, ends 22, |s| >= 4
    bool closed_walk = false;                            // 1
    bool no_h_factor = false;                            // 2
    bool no_vxyv = false;                                // 3
    bool t_boundary = false;                             // 4
    bool no_adjacent_square = false;                     // 5
    bool no_prefix_match = false;                        // 6
    bool no_suffix_match = false;                        // 7

    // Failure witnesses, 1-based positions in s (h_factor) or in 2s1 (vxyv)
    // or in T (prefix/suffix matches).
    std::optional<std::pair<std::size_t, std::string>> h_factor;
    std::optional<WxywWitness> vxyv;
    std::optional<std::size_t> prefix_match;   // start of the 13213 tail
    std::optional<std::size_t> suffix_match;   // start of the 23123 head

    bool pass() const {
        return frame && closed_walk && no_h_factor && no_vxyv && t_boundary &&
               no_adjacent_square && no_prefix_match && no_suffix_match;
    }
};

LinkReport check_link_conditions(std::string_view s);

// First word in enumeration order with |expand_f(s)| = target that passes
// check_link_conditions and whose decode ends in "ab" with a level prefix.
// nullopt when the target is unreachable.
std::optional<LinkWord> search_link(std::size_t target, const SearchOptions& opts = {});

struct Table2Row {
    std::string s;
    std::size_t n = 0;
};

struct Table2Report {
    std::size_t rows = 0;
    std::vector<std::string> failures;
    bool pass() const { return failures.empty(); }
};

// Every row must pass the checker with f_length(s) = n, decode ending "ab"
// with level prefix; the row set must cover n = 54..107 exactly once each.
Table2Report verify_table2(const std::vector<Table2Row>& rows);

}  // namespace csf
