#include "csf/walks.hpp"

#include "csf/pansiot.hpp"

namespace csf {

PairVertex::PairVertex(char f, char s) : first(f), second(s) {
    if (!is_ternary(std::string_view(&f, 1)) || !is_ternary(std::string_view(&s, 1)) || f == s) {
        throw DomainError("pair vertex needs two distinct ternary letters");
    }
}

const std::array<PairVertex, 6>& PairVertex::all() {
    static const std::array<PairVertex, 6> verts = {
        PairVertex('a', 'b'), PairVertex('b', 'a'), PairVertex('a', 'c'),
        PairVertex('c', 'a'), PairVertex('b', 'c'), PairVertex('c', 'b')};
    return verts;
}

PairVertex PairVertex::from_id(int id) {
    if (id < 0 || id > 5) throw DomainError("vertex id out of range");
    return all()[static_cast<std::size_t>(id)];
}

int PairVertex::id() const {
    const auto& vs = all();
    for (int i = 0; i < 6; ++i) {
        if (vs[static_cast<std::size_t>(i)] == *this) return i;
    }
    throw DomainError("invalid pair vertex");
}

PairVertex d1_step(PairVertex v, char bit) {
    if (bit != '0' && bit != '1') throw DomainError("d1 edge labels are 0 and 1");
    const char z = bit == '0' ? v.first : third_letter(v.first, v.second);
    return PairVertex(v.second, z);
}

namespace {

// 6x3 table built once from the step rule: entry [v][d] is the endpoint of
// the D1 walk labeled expand_f(d) from v.
const std::array<std::array<int, 3>, 6>& d2_table() {
    static const auto table = [] {
        std::array<std::array<int, 3>, 6> t{};
        for (const PairVertex& v : PairVertex::all()) {
            for (char d : {'1', '2', '3'}) {
                PairVertex cur = v;
                for (char bit : expand_f(std::string_view(&d, 1))) cur = d1_step(cur, bit);
                t[static_cast<std::size_t>(v.id())][static_cast<std::size_t>(d - '1')] = cur.id();
            }
        }
        return t;
    }();
    return table;
}

}  // namespace

PairVertex d2_step(PairVertex v, char digit) {
    if (digit < '1' || digit > '3') throw DomainError("d2 edge labels are 1, 2 and 3");
    return PairVertex::from_id(
        d2_table()[static_cast<std::size_t>(v.id())][static_cast<std::size_t>(digit - '1')]);
}

PairVertex walk_endpoint_d1(PairVertex start, std::string_view bits) {
    require_binary(bits);
    PairVertex cur = start;
    for (char b : bits) cur = d1_step(cur, b);
    return cur;
}

PairVertex walk_endpoint_d2(PairVertex start, std::string_view digits) {
    require_sword(digits);
    PairVertex cur = start;
    for (char d : digits) cur = d2_step(cur, d);
    return cur;
}

long omega(std::string_view s) {
    require_sword(s);
    long sum = 0;
    long sign = 1;
    for (char d : s) {
        sum += sign * (d - '0');
        sign = -sign;
    }
    return sum;
}

bool is_closed_walk_d2(std::string_view s) {
    return s.size() % 2 == 0 && omega(s) % 3 == 0;
}

bool labels_closed_walk_d1(std::string_view bits) {
    for (const PairVertex& v : PairVertex::all()) {
        if (walk_endpoint_d1(v, bits) == v) return true;
    }
    return false;
}

}  // namespace csf
