#include "csf/morphism.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "csf/pansiot.hpp"
#include "csf/walks.hpp"

namespace csf {

namespace {

std::string_view block_image(char x) {
    switch (x) {
        case 'a': return "123123";
        case 'b': return "132132";
        case 'c': return "131313";
        default: throw DomainError("h is defined on {a,b,c}");
    }
}

// square-free ternary words grouped by length, lexicographic within a length
std::vector<std::vector<std::string>> square_free_by_length(std::size_t maxlen) {
    std::vector<std::vector<std::string>> out(maxlen + 1);
    out[0].push_back("");
    for (std::size_t len = 1; len <= maxlen; ++len) {
        for (const std::string& w : out[len - 1]) {
            for (char c : {'a', 'b', 'c'}) {
                std::string nw = w + c;
                bool ok = true;
                for (std::size_t p = 1; 2 * p <= nw.size(); ++p) {
                    if (nw.compare(nw.size() - 2 * p, p, nw, nw.size() - p, p) == 0) {
                        ok = false;
                        break;
                    }
                }
                if (ok) out[len].push_back(std::move(nw));
            }
        }
    }
    return out;
}

}  // namespace

std::string apply_h(std::string_view v) {
    require_ternary(v);
    std::string out;
    out.reserve(6 * v.size());
    for (char x : v) out += block_image(x);
    return out;
}

std::array<Block, 3> block_decode_table() {
    std::array<Block, 3> rows;
    std::size_t i = 0;
    for (char x : {'a', 'b', 'c'}) {
        std::string img(block_image(x));
        rows[i++] = Block{x, img, delta(expand_f(img))};
    }
    return rows;
}

std::optional<AmbiguityWitness> is_ambiguous(std::string_view q) {
    require_sword(q);
    if (q.empty()) throw DomainError("ambiguity is defined for non-empty words");
    const std::size_t bound = (q.size() + 5) / 6 + 2;
    const auto sf = square_free_by_length(bound);

    struct Occurrence {
        std::string alpha;
        std::size_t pos;  // 0-based offset of q in h(alpha)
    };
    std::map<std::size_t, Occurrence> by_residue;
    for (std::size_t len = 1; len <= bound; ++len) {
        for (const std::string& alpha : sf[len]) {
            const std::string img = apply_h(alpha);
            for (std::size_t k = img.find(q); k != std::string::npos;
                 k = img.find(q, k + 1)) {
                by_residue.emplace(k % 6, Occurrence{alpha, k});
                if (by_residue.size() >= 2) {
                    auto it = by_residue.begin();
                    const Occurrence& o1 = it->second;
                    const Occurrence& o2 = std::next(it)->second;
                    const std::string i1 = apply_h(o1.alpha);
                    const std::string i2 = apply_h(o2.alpha);
                    return AmbiguityWitness{o1.alpha,
                                            o2.alpha,
                                            i1.substr(0, o1.pos),
                                            i2.substr(0, o2.pos),
                                            i1.substr(o1.pos + q.size()),
                                            i2.substr(o2.pos + q.size())};
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<std::string> ambiguous_words_of_even_length() {
    // no ambiguous word of length 8 exists, which bounds all longer even
    // lengths since factors of ambiguous words are ambiguous
    std::vector<std::string> out;
    const auto sf = square_free_by_length(4);
    for (std::size_t len : {2u, 4u, 6u, 8u}) {
        std::set<std::string> candidates;
        for (std::size_t al = 1; al <= 4; ++al) {
            for (const std::string& alpha : sf[al]) {
                const std::string img = apply_h(alpha);
                if (img.size() < len) continue;
                for (std::size_t i = 0; i + len <= img.size(); ++i) {
                    candidates.insert(img.substr(i, len));
                }
            }
        }
        for (const std::string& q : candidates) {
            if (is_ambiguous(q)) out.push_back(q);
        }
    }
    return out;
}

bool synchronization_check(const std::array<std::string, 3>& images) {
    std::set<std::string> suffixes, prefixes;
    for (const std::string& img : images) {
        if (img.size() < 3) return false;
        suffixes.insert(img.substr(img.size() - 2));
        prefixes.insert(img.substr(0, 3));
    }
    return suffixes.size() == 3 && prefixes.size() == 3;
}

bool synchronization_check() {
    return synchronization_check(
        {std::string(block_image('a')), std::string(block_image('b')),
         std::string(block_image('c'))});
}

NecklaceBuild build_from_necklace(const CircularWord& v) {
    if (!is_circular_square_free(v)) {
        throw DomainError("base necklace must be circular square-free: " + v.canonical());
    }
    NecklaceBuild out;
    out.w = apply_h(v.canonical());
    out.decoded = CircularWord(truncate2(delta(expand_f(out.w))));
    const std::size_t n = out.decoded.size();
    std::array<std::size_t, 3> counts{0, 0, 0};
    for (char c : out.decoded.canonical()) ++counts[static_cast<std::size_t>(c - 'a')];
    if (n != 18 * v.size() || counts[0] != 6 * v.size() || counts[1] != counts[0] ||
        counts[2] != counts[0] || !is_circular_square_free(out.decoded)) {
        throw std::logic_error("block construction produced an invalid word for [" +
                               v.canonical() + "]");
    }
    return out;
}

}  // namespace csf
