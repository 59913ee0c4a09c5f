#include "csf/assemble.hpp"

#include <algorithm>
#include <array>

#include "csf/link.hpp"
#include "csf/morphism.hpp"
#include "csf/pansiot.hpp"

namespace csf {

bool is_impossible_length(std::size_t n) {
    return n == 5 || n == 7 || n == 9 || n == 10 || n == 14 || n == 17;
}

std::string generate_base(std::size_t m) {
    if (m < 2 || is_impossible_length(m)) throw NoSuchLength(m);
    std::string w = "a";
    w.reserve(m);
    std::string found;
    auto square_ending_last = [&]() {
        const std::size_t len = w.size();
        for (std::size_t p = 1; 2 * p <= len; ++p) {
            if (w.compare(len - 2 * p, p, w, len - p, p) == 0) return true;
        }
        return false;
    };
    auto rec = [&](auto&& self) -> bool {
        if (w.size() == m) {
            if (w.back() == 'b' && is_circular_square_free(CircularWord(w))) {
                found = w;
                return true;
            }
            return false;
        }
        for (char c : {'a', 'b', 'c'}) {
            if (w.size() + 1 == m && c != 'b') continue;
            w.push_back(c);
            if (!square_ending_last() && self(self)) return true;
            w.pop_back();
        }
        return false;
    };
    if (!rec(rec)) {
        throw std::logic_error("no circular square-free base word of length " +
                               std::to_string(m));
    }
    // verified: prefix a, suffix b, circular square-free
    if (found.front() != 'a' || found.back() != 'b' ||
        !is_circular_square_free(CircularWord(found))) {
        throw std::logic_error("generate_base verification failed");
    }
    return found;
}

CircularWord decode_entry(std::string_view U) {
    return CircularWord(truncate2(delta(expand_f(U))));
}

namespace {

struct ShortSearchState {
    std::size_t n = 0;
    std::uint64_t seed = 0;
    std::size_t maxc = 0;  // per-letter ceiling in a level word of length n
    std::size_t minc = 0;  // per-letter floor
    std::string u;
    std::string dec = "ab";  // decode of expand_f(u) so far
    std::array<std::size_t, 3> counts{};  // over the first min(|dec|, n) letters
    std::size_t wrem = 0;
    std::optional<std::string> result;

    void init() {
        maxc = (n + 2) / 3;
        minc = n / 3;
        counts = {n >= 1 ? 1u : 0u, n >= 2 ? 1u : 0u, 0u};
        wrem = n;
    }

    bool square_ending_at(std::size_t j) const {
        for (std::size_t p = 1; 2 * p <= j + 1; ++p) {
            if (dec.compare(j + 1 - 2 * p, p, dec, j + 1 - p, p) == 0) return true;
        }
        return false;
    }

    // appends the decode letters of digit d, enforcing the square and count
    // bounds on positions < n; returns letters appended, or npos on a prune
    std::size_t push(char d) {
        const std::size_t c = static_cast<std::size_t>(d - '0' + 1);
        if (c > wrem) return std::string::npos;
        static const std::string_view img[] = {"01", "011", "0111"};
        std::size_t added = 0;
        bool ok = true;
        for (char bit : img[d - '1']) {
            const char x = dec[dec.size() - 2];
            const char y = dec[dec.size() - 1];
            dec.push_back(bit == '0' ? x : third_letter(x, y));
            ++added;
            const std::size_t j = dec.size() - 1;
            if (j < n) {
                std::size_t& cnt = counts[static_cast<std::size_t>(dec.back() - 'a')];
                ++cnt;
                if (cnt > maxc || square_ending_at(j)) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) {
            unwind(added);
            return std::string::npos;
        }
        u.push_back(d);
        wrem -= c;
        return added;
    }

    void unwind(std::size_t added) {
        for (std::size_t k = 0; k < added; ++k) {
            if (dec.size() - 1 < n) --counts[static_cast<std::size_t>(dec.back() - 'a')];
            dec.pop_back();
        }
    }

    void pop(std::size_t added) {
        const char d = u.back();
        u.pop_back();
        wrem += static_cast<std::size_t>(d - '0' + 1);
        unwind(added);
    }

    void dfs() {
        if (result) return;
        if (wrem == 0) {
            const std::string word = dec.substr(0, n);
            if (is_level(word)) {
                CircularWord cw(word);
                if (is_circular_square_free(cw)) result = u;
            }
            return;
        }
        // remaining positions must be able to lift every count to the floor
        const std::size_t filled = std::min(dec.size(), n);
        std::size_t deficit = 0;
        for (std::size_t c : counts) deficit += minc > c ? minc - c : 0;
        if (deficit > n - filled) return;
        for (char d : digit_order(seed, u.size())) {
            const std::size_t added = push(d);
            if (added == std::string::npos) continue;
            dfs();
            pop(added);
            if (result) return;
        }
    }
};

}  // namespace

std::optional<std::string> search_short(std::size_t n, const SearchOptions& opts) {
    if (n < 4 || n > 90) {
        throw DomainError("short search covers lengths 4..90");
    }
    auto make_state = [&] {
        ShortSearchState st;
        st.n = n;
        st.seed = opts.seed;
        st.init();
        return st;
    };
    const std::size_t prefix_len = 3;
    const bool parallel = opts.workers > 1 && n >= 4 * prefix_len;
    if (!parallel) {
        ShortSearchState st = make_state();
        st.dfs();
        return st.result;
    }
    std::vector<std::string> prefixes;
    for (char d1 : digit_order(opts.seed, 0)) {
        for (char d2 : digit_order(opts.seed, 1)) {
            for (char d3 : digit_order(opts.seed, 2)) {
                prefixes.push_back(std::string{d1, d2, d3});
            }
        }
    }
    return detail::run_jobs_least<std::string>(
        prefixes.size(), opts.workers, [&](std::size_t i) -> std::optional<std::string> {
            ShortSearchState st = make_state();
            std::vector<std::size_t> pushed;
            for (char d : prefixes[i]) {
                const std::size_t added = st.push(d);
                if (added == std::string::npos) break;
                pushed.push_back(added);
            }
            if (pushed.size() == prefixes[i].size()) st.dfs();
            return st.result;
        });
}

namespace {

BuildCertificate certify(std::size_t n, CircularWord word, BuildRecipe recipe) {
    BuildCertificate cert;
    cert.n = n;
    cert.word = std::move(word);
    cert.recipe = std::move(recipe);
    cert.level = is_level(cert.word.canonical());
    cert.circular_square_free = is_circular_square_free(cert.word);
    if (cert.word.size() != n || !cert.level || !cert.circular_square_free) {
        throw std::logic_error("constructed word failed verification at length " +
                               std::to_string(n));
    }
    return cert;
}

}  // namespace

BuildCertificate assemble_long(std::size_t n, const Tables& tables) {
    if (n < 90) throw DomainError("assembly handles lengths 90 and up");
    std::size_t m, r;
    if (n <= 143) {
        m = 2;
        r = n - 36;
    } else {
        m = std::max<std::size_t>(2, (n - 107 + 17) / 18);  // ceil((n-107)/18)
        while (m == 1 || is_impossible_length(m) || n - 18 * m > 107) ++m;
        r = n - 18 * m;
    }
    if (r < 54 || r > 107) {
        throw std::logic_error("no admissible decomposition 18m + r for " + std::to_string(n));
    }

    const std::string v = generate_base(m);
    std::string s;
    for (const Table2Row& row : tables.table2) {
        if (row.n == r) {
            s = row.s;
            break;
        }
    }
    if (s.empty()) {
        auto lw = search_link(r);
        if (!lw) throw std::logic_error("no linking word of expansion length " + std::to_string(r));
        s = lw->s;
    }

    const std::string psi = truncate2(delta(expand_f(s)));
    const std::string omega_part = truncate2(delta(expand_f(apply_h(v))));
    BuildRecipe recipe;
    recipe.kind = BuildRecipe::Kind::Composite;
    recipe.v = v;
    recipe.s = s;
    return certify(n, CircularWord(psi + omega_part), std::move(recipe));
}

BuildCertificate build(std::size_t n, const Tables& tables) {
    if (n == 0) throw DomainError("length must be positive");
    if (is_impossible_length(n)) throw NoSuchLength(n);
    if (n <= 3) {
        static const std::array<std::string_view, 3> small = {"a", "ab", "abc"};
        BuildRecipe recipe;
        recipe.kind = BuildRecipe::Kind::BruteForce;
        return certify(n, CircularWord(small[n - 1]), std::move(recipe));
    }
    if (n <= 89) {
        std::string u;
        auto it = tables.table3.find(n);
        if (it != tables.table3.end()) {
            u = it->second;
        } else {
            auto found = search_short(n);
            if (!found) throw NoSuchLength(n);
            u = *found;
        }
        BuildRecipe recipe;
        recipe.kind = BuildRecipe::Kind::TableEntry;
        recipe.u = u;
        return certify(n, decode_entry(u), std::move(recipe));
    }
    return assemble_long(n, tables);
}

BuildCertificate build(std::size_t n) { return build(n, default_tables()); }

}  // namespace csf
