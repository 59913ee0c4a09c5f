#include "csf/pansiot.hpp"

#include "csf/walks.hpp"

namespace csf {

std::string pi(std::string_view v) {
    require_ternary(v);
    if (v.size() < 2) throw DomainError("pi needs at least two letters");
    for (std::size_t i = 0; i + 1 < v.size(); ++i) {
        if (v[i] == v[i + 1]) {
            throw DomainError("adjacent repeated letter at position " + std::to_string(i + 1));
        }
    }
    std::string out;
    out.reserve(v.size() - 2);
    for (std::size_t i = 0; i + 2 < v.size(); ++i) {
        out.push_back(v[i] == v[i + 2] ? '0' : '1');
    }
    return out;
}

std::string delta(std::string_view u) {
    require_binary(u);
    std::string v = "ab";
    v.reserve(u.size() + 2);
    for (char bit : u) {
        const char x = v[v.size() - 2];
        const char y = v[v.size() - 1];
        v.push_back(bit == '0' ? x : third_letter(x, y));
    }
    return v;
}

std::string truncate2(std::string_view w) {
    if (w.size() < 2) throw DomainError("cannot drop two letters from a shorter word");
    return std::string(w.substr(0, w.size() - 2));
}

std::string circular_code(std::string_view v) {
    require_ternary(v);
    const std::size_t n = v.size();
    if (n < 2) throw DomainError("circular code needs at least two letters");
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == v[(i + 1) % n]) {
            throw DomainError("length-2 square in the circular word at position " +
                              std::to_string(i + 1));
        }
    }
    std::string out(n, '0');
    for (std::size_t i = 0; i < n; ++i) out[i] = v[i] == v[(i + 2) % n] ? '0' : '1';
    return out;
}

std::string encode_circular(const CircularWord& cw) { return circular_code(cw.canonical()); }

std::string expand_f(std::string_view U) {
    require_sword(U);
    static const std::string_view img[] = {"01", "011", "0111"};
    std::string out;
    out.reserve(f_length(U));
    for (char d : U) out += img[d - '1'];
    return out;
}

std::size_t f_length(std::string_view U) {
    require_sword(U);
    std::size_t n = U.size();
    for (char d : U) n += static_cast<std::size_t>(d - '0');
    return n;
}

std::optional<DeltaSquareWitness> square_witness_delta(std::string_view u) {
    require_binary(u);
    // squares in a decode have period >= 2 and correspond exactly to
    // factors VxyV of the code with Vxy closed on D1; |V| ascending, then
    // position ascending
    const std::size_t n = u.size();
    for (std::size_t vl = 0; 2 * vl + 2 <= n; ++vl) {
        const std::size_t len = 2 * vl + 2;
        for (std::size_t i = 0; i + len <= n; ++i) {
            if (u.compare(i, vl, u, i + vl + 2, vl) != 0) continue;
            if (labels_closed_walk_d1(u.substr(i, vl + 2))) {
                return DeltaSquareWitness{std::string(u.substr(i, vl)), u[i + vl],
                                          u[i + vl + 1]};
            }
        }
    }
    return std::nullopt;
}

}  // namespace csf
