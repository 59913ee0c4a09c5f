#include <doctest.h>

#include <functional>
#include <string>

#include "csf/pansiot.hpp"
#include "csf/walks.hpp"

namespace {

void for_each_sword(std::size_t n, const std::function<void(const std::string&)>& fn,
                    std::string& acc) {
    if (acc.size() == n) {
        fn(acc);
        return;
    }
    for (char d : {'1', '2', '3'}) {
        acc.push_back(d);
        for_each_sword(n, fn, acc);
        acc.pop_back();
    }
}

}  // namespace

TEST_SUITE("walks") {

TEST_CASE("vertices") {
    CHECK(csf::PairVertex::all().size() == 6);
    for (int i = 0; i < 6; ++i) {
        CHECK(csf::PairVertex::from_id(i).id() == i);
    }
    CHECK(csf::PairVertex('a', 'b').str() == "ab");
    CHECK_THROWS_AS(csf::PairVertex('a', 'a'), csf::DomainError);
    CHECK_THROWS_AS(csf::PairVertex('a', 'd'), csf::DomainError);
}

TEST_CASE("single steps") {
    CHECK(csf::d1_step({'a', 'b'}, '0') == csf::PairVertex('b', 'a'));
    CHECK(csf::d1_step({'a', 'b'}, '1') == csf::PairVertex('b', 'c'));
    CHECK(csf::d1_step({'c', 'a'}, '1') == csf::PairVertex('a', 'b'));
    CHECK_THROWS_AS(csf::d1_step({'a', 'b'}, '2'), csf::DomainError);
    CHECK_THROWS_AS(csf::d2_step({'a', 'b'}, '0'), csf::DomainError);
}

TEST_CASE("d2 steps fold f through d1") {
    for (const auto& v : csf::PairVertex::all()) {
        for (char d : {'1', '2', '3'}) {
            CHECK(csf::d2_step(v, d) ==
                  csf::walk_endpoint_d1(v, csf::expand_f(std::string(1, d))));
        }
    }
}

TEST_CASE("omega") {
    CHECK(csf::omega("") == 0);
    CHECK(csf::omega("1") == 1);
    CHECK(csf::omega("12") == -1);
    CHECK(csf::omega("123") == 2);
    CHECK(csf::omega("331313123231212122") == 0);
}

TEST_CASE("closure on D2 is start independent and matches the omega rule") {
    std::string acc;
    for (std::size_t n = 0; n <= 7; ++n) {
        for_each_sword(
            n,
            [](const std::string& s) {
                int closed_from = 0;
                for (const auto& v : csf::PairVertex::all()) {
                    if (csf::walk_endpoint_d2(v, s) == v) ++closed_from;
                }
                CHECK((closed_from == 0 || closed_from == 6));
                const bool rule = s.size() % 2 == 0 && csf::omega(s) % 3 == 0;
                CHECK((closed_from == 6) == rule);
                CHECK(csf::is_closed_walk_d2(s) == rule);
            },
            acc);
    }
}

TEST_CASE("closure on D1 is start independent") {
    for (unsigned long m = 0; m < (1ul << 10); ++m) {
        for (std::size_t n : {4ul, 10ul}) {
            if (m >= (1ul << n)) continue;
            std::string bits(n, '0');
            for (std::size_t i = 0; i < n; ++i) {
                if (m & (1ul << i)) bits[i] = '1';
            }
            int closed_from = 0;
            for (const auto& v : csf::PairVertex::all()) {
                if (csf::walk_endpoint_d1(v, bits) == v) ++closed_from;
            }
            CHECK((closed_from == 0 || closed_from == 6));
            CHECK(csf::labels_closed_walk_d1(bits) == (closed_from == 6));
        }
    }
}

TEST_CASE("closed d1 walk goldens") {
    CHECK(csf::labels_closed_walk_d1("00"));
    CHECK(csf::labels_closed_walk_d1("111"));
    CHECK_FALSE(csf::labels_closed_walk_d1("0"));
    CHECK_FALSE(csf::labels_closed_walk_d1("11"));
}

}  // TEST_SUITE
