#include <doctest.h>

#include <functional>
#include <string>

#include "csf/pansiot.hpp"
#include "csf/walks.hpp"
#include "csf/words.hpp"

namespace {

void for_each_binary(std::size_t n, const std::function<void(const std::string&)>& fn) {
    for (unsigned long m = 0; m < (1ul << n); ++m) {
        std::string u(n, '0');
        for (std::size_t i = 0; i < n; ++i) {
            if (m & (1ul << i)) u[i] = '1';
        }
        fn(u);
    }
}

}  // namespace

TEST_SUITE("pansiot") {

TEST_CASE("decode goldens") {
    CHECK(csf::delta("") == "ab");
    CHECK(csf::delta("0") == "aba");
    CHECK(csf::delta("1") == "abc");
    CHECK(csf::delta("0111") == "abacba");
    CHECK(csf::delta("101101") == "abcbacab");
    CHECK_THROWS_AS(csf::delta("02"), csf::DomainError);
}

TEST_CASE("encode goldens") {
    CHECK(csf::pi("abcbacab") == "101101");
    CHECK(csf::pi("ab").empty());
    CHECK_THROWS_AS(csf::pi("a"), csf::DomainError);
    CHECK_THROWS_AS(csf::pi("aab"), csf::DomainError);
}

TEST_CASE("encode and decode invert each other") {
    for (std::size_t n = 0; n <= 10; ++n) {
        for_each_binary(n, [](const std::string& u) {
            const std::string v = csf::delta(u);
            CHECK(v.size() == u.size() + 2);
            CHECK(v.compare(0, 2, "ab") == 0);
            for (std::size_t i = 0; i + 1 < v.size(); ++i) CHECK(v[i] != v[i + 1]);
            CHECK(csf::pi(v) == u);
        });
    }
}

TEST_CASE("truncate2") {
    CHECK(csf::truncate2("abcd") == "ab");
    CHECK(csf::truncate2("ab").empty());
    CHECK_THROWS_AS(csf::truncate2("a"), csf::DomainError);
}

TEST_CASE("circular code") {
    CHECK(csf::circular_code("cbabca") == "101101");
    CHECK(csf::circular_code("ab") == "00");
    CHECK_THROWS_AS(csf::circular_code("aab"), csf::DomainError);
    // circular adjacency includes last-to-first
    CHECK_THROWS_AS(csf::circular_code("aba"), csf::DomainError);

    // rotating the word rotates the code
    const std::string w = "abcacb";
    const std::string code = csf::circular_code(w);
    for (std::size_t r = 1; r < w.size(); ++r) {
        const std::string rot = w.substr(r) + w.substr(0, r);
        CHECK(csf::circular_code(rot) == code.substr(r) + code.substr(0, r));
    }

    CHECK(csf::encode_circular(csf::CircularWord("cbabca")) ==
          csf::circular_code(csf::CircularWord("cbabca").canonical()));
}

TEST_CASE("expansion f") {
    CHECK(csf::expand_f("1") == "01");
    CHECK(csf::expand_f("2") == "011");
    CHECK(csf::expand_f("3") == "0111");
    CHECK(csf::expand_f("123") == "010110111");
    CHECK(csf::expand_f("").empty());
    CHECK_THROWS_AS(csf::expand_f("104"), csf::DomainError);
    CHECK(csf::f_length("123") == 9);
    CHECK(csf::f_length("331313123231212122") == 54);
    CHECK(csf::f_length("") == 0);
}

TEST_CASE("f_length equals the expanded size") {
    std::function<void(std::string&)> rec = [&](std::string& u) {
        CHECK(csf::f_length(u) == csf::expand_f(u).size());
        if (u.size() == 6) return;
        for (char d : {'1', '2', '3'}) {
            u.push_back(d);
            rec(u);
            u.pop_back();
        }
    };
    std::string u;
    rec(u);
}

TEST_CASE("square witness characterizes squares in decodes") {
    for (std::size_t n = 0; n <= 12; ++n) {
        for_each_binary(n, [](const std::string& u) {
            const auto wit = csf::square_witness_delta(u);
            const bool squares = csf::find_square(csf::delta(u)).has_value();
            CHECK(wit.has_value() == squares);
            if (!wit) return;
            // the witness really is a factor V x y V with V x y closed
            const std::string factor = wit->v + wit->chi + wit->upsilon + wit->v;
            CHECK(u.find(factor) != std::string::npos);
            CHECK(csf::labels_closed_walk_d1(wit->v + wit->chi + wit->upsilon));
        });
    }
}

TEST_CASE("square witness goldens") {
    // 0 0 0: delta = ababa, squares immediately; V empty, 00 closed
    const auto w0 = csf::square_witness_delta("00");
    REQUIRE(w0.has_value());
    CHECK(w0->v.empty());
    CHECK(w0->chi == '0');
    CHECK(w0->upsilon == '0');
    CHECK_FALSE(csf::square_witness_delta("0111011").has_value());
}

}  // TEST_SUITE
