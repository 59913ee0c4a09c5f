// Alphabets, words, necklaces, square detection, levelness and the
// brute-force oracles everything else is validated against.
//
// Words are plain std::string values over one of three alphabets:
//   ternary {a,b,c}, binary {0,1}, S = {1,2,3}.
// Validation happens at API boundaries via the require_* helpers.
// Positions in witnesses are 1-based.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csf {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct NoSuchLength : std::runtime_error {
    explicit NoSuchLength(std::size_t n);
    std::size_t n;
};

struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_ternary(std::string_view w);
bool is_binary(std::string_view w);
bool is_sword(std::string_view w);
void require_ternary(std::string_view w);
void require_binary(std::string_view w);
void require_sword(std::string_view w);

// The letter of {a,b,c} distinct from both arguments; x != y required.
char third_letter(char x, char y);

// A factor w[start .. start+2*period-1] whose halves agree; start is 1-based.
struct SquareWitness {
    std::size_t start = 0;
    std::size_t period = 0;
    bool operator==(const SquareWitness&) const = default;
};

// All |w| rotations in shift order; the single empty word for |w| = 0.
std::vector<std::string> rotations(std::string_view w);

// Naive cubic scan, the trusted oracle.  Smallest start wins, then smallest
// period.
std::optional<SquareWitness> find_square(std::string_view w);
bool is_square_free(std::string_view w);

// Every pair of letter counts over {a,b,c} differs by at most 1; absent
// letters count 0.  Empty word is level.
bool is_level(std::string_view w);

// Necklace: equivalence class of a ternary word under rotation, stored by
// its lexicographically least rotation.
class CircularWord {
  public:
    CircularWord() = default;
    explicit CircularWord(std::string_view representative);

    const std::string& canonical() const { return canonical_; }
    std::size_t size() const { return canonical_.size(); }

    bool operator==(const CircularWord&) const = default;
    bool operator<(const CircularWord& o) const { return canonical_ < o.canonical_; }

  private:
    std::string canonical_;
};

// Factors of a circular word are windows of length <= n in the doubled
// representative.  The witness start is 1-based in that doubled word.
std::optional<SquareWitness> find_circular_square(const CircularWord& cw);
bool is_circular_square_free(const CircularWord& cw);

// perm[0], perm[1], perm[2] are the images of a, b, c.
using LetterPermutation = std::array<char, 3>;

std::string apply_permutation(const LetterPermutation& sigma, std::string_view w);

// The letter permutation sigma with sigma(v) = w, if any.  Letters absent
// from v are completed deterministically: fixed points first, then the
// remaining targets in order.
std::optional<LetterPermutation> equivalent(std::string_view v, std::string_view w);

// Hard cap on the exhaustive-search helpers below.
inline constexpr std::size_t kBruteCap = 24;

// Number of distinct circular square-free necklaces of length n (letter
// permutations not quotiented).  Throws CapacityError beyond kBruteCap.
std::size_t count_circular_square_free(std::size_t n);

// Some level circular square-free word of length n, or nullopt if none
// exists.  Result is re-verified before return.  Throws CapacityError
// beyond kBruteCap.
std::optional<CircularWord> brute_level_square_free(std::size_t n);

}  // namespace csf
