#include "csf/link.hpp"

#include <algorithm>
#include <set>

#include "csf/morphism.hpp"
#include "csf/pansiot.hpp"
#include "csf/walks.hpp"
#include "csf/words.hpp"

namespace csf {

namespace {

const std::array<std::string, 3>& blocks() {
    static const std::array<std::string, 3> b = {"123123", "132132", "131313"};
    return b;
}

// all suffixes/prefixes of the three block images, empty and full included
const std::vector<std::string>& block_suffixes() {
    static const std::vector<std::string> v = [] {
        std::set<std::string> s;
        for (const std::string& b : blocks()) {
            for (std::size_t i = 0; i <= b.size(); ++i) s.insert(b.substr(i));
        }
        return std::vector<std::string>(s.begin(), s.end());
    }();
    return v;
}

const std::set<std::string>& block_prefix_set() {
    static const std::set<std::string> s = [] {
        std::set<std::string> out;
        for (const std::string& b : blocks()) {
            for (std::size_t i = 0; i <= b.size(); ++i) out.insert(b.substr(0, i));
        }
        return out;
    }();
    return s;
}

// factor h(mu) of s with |mu| >= 2 and [mu] circular square-free; returns
// (0-based position, mu)
std::optional<std::pair<std::size_t, std::string>> h_factor_violation(std::string_view s) {
    const std::size_t n = s.size();
    for (std::size_t i = 0; i + 12 <= n; ++i) {
        std::string mu;
        for (std::size_t j = i; j + 6 <= n; j += 6) {
            char hit = 0;
            for (std::size_t b = 0; b < 3; ++b) {
                if (s.compare(j, 6, blocks()[b]) == 0) {
                    hit = static_cast<char>('a' + b);
                    break;
                }
            }
            if (hit == 0) break;
            mu.push_back(hit);
            if (mu.size() >= 2 && is_circular_square_free(CircularWord(mu))) {
                return std::make_pair(i, mu);
            }
        }
    }
    return std::nullopt;
}

// positions of T reachable as |q h(u)| or |1 q h(u)|, q a block suffix
std::vector<std::size_t> prefix_reachable(std::string_view t) {
    std::set<std::size_t> reach;
    for (const std::string& q : block_suffixes()) {
        if (t.substr(0, q.size()) == q) reach.insert(q.size());
        if (!t.empty() && t[0] == '1' && t.substr(1, q.size()) == q) reach.insert(1 + q.size());
    }
    std::vector<std::size_t> frontier(reach.begin(), reach.end());
    while (!frontier.empty()) {
        std::vector<std::size_t> next;
        for (std::size_t p : frontier) {
            for (const std::string& b : blocks()) {
                if (p + 6 <= t.size() && t.compare(p, 6, b) == 0 && !reach.count(p + 6)) {
                    reach.insert(p + 6);
                    next.push_back(p + 6);
                }
            }
        }
        frontier = std::move(next);
    }
    return std::vector<std::size_t>(reach.begin(), reach.end());
}

// 0-based start of a completed prefix q h(u) 13213 or 1 q h(u) 13213 tail
std::optional<std::size_t> prefix_form_violation(std::string_view t) {
    for (std::size_t p : prefix_reachable(t)) {
        if (p + 5 <= t.size() && t.compare(p, 5, "13213") == 0) return p;
    }
    return std::nullopt;
}

// 0-based start of the 23123 head of a suffix 23123 h(u) p or 23123 h(u) p 1
std::optional<std::size_t> suffix_form_violation(std::string_view t) {
    for (bool trailing1 : {false, true}) {
        if (trailing1 && (t.empty() || t.back() != '1')) continue;
        const std::size_t end = t.size() - (trailing1 ? 1 : 0);
        if (end < 5) continue;
        for (std::size_t i = 0; i + 5 <= end; ++i) {
            if (t.compare(i, 5, "23123") != 0) continue;
            std::set<std::size_t> reach{i + 5};
            std::vector<std::size_t> frontier{i + 5};
            while (!frontier.empty()) {
                std::vector<std::size_t> next;
                for (std::size_t p : frontier) {
                    for (const std::string& b : blocks()) {
                        if (p + 6 <= end && t.compare(p, 6, b) == 0 && !reach.count(p + 6)) {
                            reach.insert(p + 6);
                            next.push_back(p + 6);
                        }
                    }
                }
                frontier = std::move(next);
            }
            for (std::size_t p : reach) {
                if (block_prefix_set().count(std::string(t.substr(p, end - p)))) return i;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

LinkReport check_link_conditions(std::string_view s) {
    require_sword(s);
    LinkReport r;
    r.frame = s.size() >= 4 && s.substr(0, 2) == "33" && s.substr(s.size() - 2) == "22";
    if (!r.frame) return r;
    const std::string_view t = s.substr(2, s.size() - 4);

    r.closed_walk = is_closed_walk_d2(s);

    auto hf = h_factor_violation(s);
    r.no_h_factor = !hf.has_value();
    if (hf) r.h_factor = std::make_pair(hf->first + 1, hf->second);

    const std::string framed = "2" + std::string(s) + "1";
    r.vxyv = wxyw_scan(framed, false);
    r.no_vxyv = !r.vxyv.has_value();

    r.t_boundary = !t.empty() && t.front() == '1' && t.back() == '1';

    r.no_adjacent_square = true;
    for (std::size_t i = 0; i + 1 < t.size(); ++i) {
        if (t[i] == t[i + 1]) {
            r.no_adjacent_square = false;
            break;
        }
    }

    auto pv = prefix_form_violation(t);
    r.no_prefix_match = !pv.has_value();
    if (pv) r.prefix_match = *pv + 1;

    auto sv = suffix_form_violation(t);
    r.no_suffix_match = !sv.has_value();
    if (sv) r.suffix_match = *sv + 1;

    return r;
}

namespace {

// can a partial T with remaining weight w (letter d costs 1+d), next
// position parity par and previous letter prev be completed so that the
// remaining alternating sum is om (mod 3), the total length is even and
// the last letter is 1?
struct Feasibility {
    std::size_t maxw;
    std::vector<bool> table;  // [w][par][prev 0..2][om]

    explicit Feasibility(std::size_t maxw) : maxw(maxw), table((maxw + 1) * 2 * 3 * 3) {
        for (std::size_t w = 0; w <= maxw; ++w) {
            for (int par = 0; par < 2; ++par) {
                for (int prev = 0; prev < 3; ++prev) {
                    for (int om = 0; om < 3; ++om) {
                        bool ok = false;
                        if (w == 0) {
                            ok = par == 0 && om == 0 && prev == 0;  // last letter was 1
                        } else {
                            for (int d = 1; d <= 3 && !ok; ++d) {
                                if (d - 1 == prev) continue;
                                const std::size_t c = static_cast<std::size_t>(1 + d);
                                if (c > w) continue;
                                const int sgn = par == 0 ? 1 : -1;
                                const int nom = ((om - sgn * d) % 3 + 3) % 3;
                                ok = at(w - c, 1 - par, d - 1, nom);
                            }
                        }
                        table[idx(w, par, prev, om)] = ok;
                    }
                }
            }
        }
    }

    std::size_t idx(std::size_t w, int par, int prev, int om) const {
        return ((w * 2 + static_cast<std::size_t>(par)) * 3 + static_cast<std::size_t>(prev)) *
                   3 +
               static_cast<std::size_t>(om);
    }
    bool at(std::size_t w, int par, int prev, int om) const {
        return table[idx(w, par, prev, om)];
    }
};

// factor VxyV with |V| >= 2 and Vxy closed, ending exactly at the last
// position of word
bool vxyv_ending_at_end(const std::string& word) {
    const std::size_t n = word.size();
    for (std::size_t vl = 2; 2 * vl + 2 <= n; ++vl) {
        const std::size_t i = n - (2 * vl + 2);
        if (word.compare(i, vl, word, i + vl + 2, vl) != 0) continue;
        if (is_closed_walk_d2(std::string_view(word).substr(i, vl + 2))) return true;
    }
    return false;
}

// factor h(mu), |mu| >= 2, [mu] circular square-free, ending exactly at the
// last position of word
bool h_factor_ending_at_end(std::string_view word) {
    std::string mu;
    std::size_t j = word.size();
    while (j >= 6) {
        char hit = 0;
        for (std::size_t b = 0; b < 3; ++b) {
            if (word.compare(j - 6, 6, blocks()[b]) == 0) {
                hit = static_cast<char>('a' + b);
                break;
            }
        }
        if (hit == 0) return false;
        mu.insert(mu.begin(), hit);
        j -= 6;
        if (mu.size() >= 2 && is_circular_square_free(CircularWord(mu))) return true;
    }
    return false;
}

struct LinkSearchState {
    std::size_t target = 0;
    std::uint64_t seed = 0;
    const Feasibility* feas = nullptr;
    std::string t;       // T so far
    std::string word;    // "233" + T, the cond-3 scan window
    std::size_t wrem = 0;
    int par = 0;
    int om = 0;

    std::optional<LinkWord> result;

    bool push(char d) {
        const char prev = t.empty() ? 0 : t.back();
        if (d == prev) return false;
        const std::size_t c = static_cast<std::size_t>(d - '0' + 1);
        if (c > wrem) return false;
        const int sgn = par == 0 ? 1 : -1;
        const int nom = ((om - sgn * (d - '0')) % 3 + 3) % 3;
        if (!feas->at(wrem - c, 1 - par, d - '1', nom)) return false;

        t.push_back(d);
        word.push_back(d);
        bool ok = !vxyv_ending_at_end(word);
        if (ok && h_factor_ending_at_end(std::string_view(word).substr(1))) ok = false;
        if (ok && t.size() >= 5) {
            auto pv = prefix_form_violation(t);
            if (pv && *pv + 5 <= t.size()) ok = false;
        }
        if (!ok) {
            t.pop_back();
            word.pop_back();
            return false;
        }
        wrem -= c;
        par = 1 - par;
        om = nom;
        return true;
    }

    void pop() {
        const char d = t.back();
        t.pop_back();
        word.pop_back();
        const std::size_t c = static_cast<std::size_t>(d - '0' + 1);
        wrem += c;
        par = 1 - par;
        const int sgn = par == 0 ? 1 : -1;
        om = ((om + sgn * (d - '0')) % 3 + 3) % 3;
    }

    void try_leaf() {
        if (wrem != 0) return;
        std::string s = "33" + t + "22";
        if (!check_link_conditions(s).pass()) return;
        const std::string dec = delta(expand_f(s));
        if (dec.compare(dec.size() - 2, 2, "ab") != 0) return;
        if (!is_level(truncate2(dec))) return;
        result = LinkWord{s, t, f_length(s)};
    }

    void dfs() {
        if (result) return;
        if (wrem == 0) {
            try_leaf();
            return;
        }
        for (char d : digit_order(seed, t.size())) {
            if (push(d)) {
                dfs();
                pop();
                if (result) return;
            }
        }
    }
};

}  // namespace

std::array<char, 3> digit_order(std::uint64_t seed, std::size_t depth) {
    std::array<char, 3> order = {'1', '2', '3'};
    if (seed == 0) return order;
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (depth + 1)));
    for (std::size_t i = 2; i > 0; --i) {
        const std::size_t j = rng() % (i + 1);
        std::swap(order[i], order[j]);
    }
    return order;
}

std::optional<LinkWord> search_link(std::size_t target, const SearchOptions& opts) {
    if (target < 16) return std::nullopt;  // |expand_f(33T22)| = weight(T) + 14
    const std::size_t wt = target - 14;
    const Feasibility feas(wt);

    auto make_state = [&] {
        LinkSearchState st;
        st.target = target;
        st.seed = opts.seed;
        st.feas = &feas;
        st.word = "233";
        st.wrem = wt;
        st.par = 0;
        st.om = 0;
        return st;
    };

    // the first letter of T is forced to 1
    const std::size_t prefix_len = 4;
    const bool parallel = opts.workers > 1 && wt >= 4 * prefix_len;
    if (!parallel) {
        LinkSearchState st = make_state();
        if (st.push('1')) st.dfs();
        return st.result;
    }

    // jobs are T-prefixes "1" + 3 free digits, in enumeration order
    std::vector<std::string> prefixes;
    for (char d1 : digit_order(opts.seed, 1)) {
        for (char d2 : digit_order(opts.seed, 2)) {
            for (char d3 : digit_order(opts.seed, 3)) {
                prefixes.push_back(std::string("1") + d1 + d2 + d3);
            }
        }
    }
    return detail::run_jobs_least<LinkWord>(
        prefixes.size(), opts.workers, [&](std::size_t i) -> std::optional<LinkWord> {
            LinkSearchState st = make_state();
            std::size_t pushed = 0;
            for (char d : prefixes[i]) {
                if (!st.push(d)) break;
                ++pushed;
            }
            if (pushed == prefixes[i].size()) st.dfs();
            return st.result;
        });
}

Table2Report verify_table2(const std::vector<Table2Row>& rows) {
    Table2Report rep;
    rep.rows = rows.size();
    std::set<std::size_t> seen;
    for (const Table2Row& row : rows) {
        if (f_length(row.s) != row.n) {
            rep.failures.push_back(row.s + ": |expand_f| is " + std::to_string(f_length(row.s)) +
                                   ", row says " + std::to_string(row.n));
            continue;
        }
        if (!check_link_conditions(row.s).pass()) {
            rep.failures.push_back(row.s + ": linking-word conditions fail");
            continue;
        }
        const std::string dec = delta(expand_f(row.s));
        if (dec.compare(dec.size() - 2, 2, "ab") != 0) {
            rep.failures.push_back(row.s + ": decode does not end in ab");
            continue;
        }
        if (!is_level(truncate2(dec))) {
            rep.failures.push_back(row.s + ": truncated decode is not level");
            continue;
        }
        if (!seen.insert(row.n).second) {
            rep.failures.push_back(row.s + ": duplicate length " + std::to_string(row.n));
        }
    }
    for (std::size_t n = 54; n <= 107; ++n) {
        if (!seen.count(n)) {
            rep.failures.push_back("no row for length " + std::to_string(n));
        }
    }
    return rep;
}

}  // namespace csf
