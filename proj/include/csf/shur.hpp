// Shur's sufficient conditions for an S-word U: if U labels a closed walk
// on D2, contains none of 11, 222, 223, 322, 333 as a circular factor, and
// has no circular factor WxyW with |W| >= 2 and Wxy a closed walk, then
// [delta(expand_f(U)) minus its last two letters] is circular square-free.
#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace csf {

// Positions are 1-based; on circular scans they index the doubled word.
struct ForbiddenFactor {
    std::string factor;
    std::size_t position = 0;
    bool operator==(const ForbiddenFactor&) const = default;
};

struct WxywWitness {
    std::string w;
    char x = 0;
    char y = 0;
    std::size_t position = 0;
    bool operator==(const WxywWitness&) const = default;
};

struct ShurReport {
    bool closed_walk = false;
    std::optional<ForbiddenFactor> forbidden_factor;
    std::optional<WxywWitness> wxyw;
    bool pass() const { return closed_walk && !forbidden_factor && !wxyw; }
};

// First occurrence of 11, 222, 223, 322 or 333; circular scans use the
// doubled word with a window of length <= |U|.
std::optional<ForbiddenFactor> forbidden_factor_scan(std::string_view U, bool circular);

// Factor WxyW of z with |W| >= 2 and Wxy a closed walk on D2; smallest
// position first, then smallest |W|.
std::optional<WxywWitness> wxyw_scan(std::string_view z, bool circular);

ShurReport check_shur(std::string_view U);

}  // namespace csf
