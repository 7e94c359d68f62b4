#include <doctest.h>

#include "qsc/cosets.hpp"

#include "oracle.hpp"

#include <set>

using namespace qsc;

TEST_CASE("z-decomposition of the supported grid") {
    struct Row {
        uint64_t q, c;
        uint32_t z;
    };
    for (const auto& row : {Row{5, 1, 2}, Row{9, 1, 3}, Row{13, 3, 2}, Row{17, 1, 4},
                            Row{25, 3, 3}, Row{41, 5, 3}, Row{49, 3, 4}, Row{73, 9, 3},
                            Row{97, 3, 5}}) {
        auto d = z_decompose(row.q);
        CHECK(d.z == row.z);
        CHECK(d.c == row.c);
        CHECK(d.q == (uint64_t(1) << d.z) * d.c + 1);
    }
    CHECK_THROWS_AS(z_decompose(7), precondition_error);
    CHECK_THROWS_AS(z_decompose(11), precondition_error);
    CHECK_THROWS_AS(z_decompose(3), precondition_error);
    CHECK_THROWS_AS(z_decompose(16), precondition_error);
    CHECK_THROWS_AS(z_decompose(1), precondition_error);
}

TEST_CASE("orbit enumeration on a hand-checked case") {
    auto t = cosets_bruteforce(5, 3);
    REQUIRE(t.cosets.size() == 6);
    CHECK(t.cosets[0] == std::vector<uint64_t>{0});
    CHECK(t.cosets[1] == std::vector<uint64_t>{1, 5});
    CHECK(t.cosets[2] == std::vector<uint64_t>{2});
    CHECK(t.cosets[3] == std::vector<uint64_t>{3, 7});
    CHECK(t.cosets[4] == std::vector<uint64_t>{4});
    CHECK(t.cosets[5] == std::vector<uint64_t>{6});
    CHECK(t.negate(1) == 3);
    CHECK(t.negate(2) == 5);
    CHECK(t.self_paired(0));
    CHECK(t.self_paired(4));
    CHECK(!t.self_paired(1));
    CHECK(t.index_of(7) == 3);
    CHECK(t.index_of(5 + 8) == 1); // residues reduce mod N
    CHECK(t.rep(3) == 3);
    CHECK(t.size(1) == 2);
}

TEST_CASE("orbit enumeration matches the independent oracle") {
    for (uint64_t q : {5ULL, 9ULL, 13ULL, 17ULL, 41ULL}) {
        for (uint32_t n : {1u, 2u, 3u, 4u, 5u, 6u}) {
            auto t = cosets_bruteforce(q, n);
            auto expect = oracle::cosets_orbits(q, uint64_t(1) << n);
            REQUIRE(t.cosets.size() == expect.size());
            for (std::size_t i = 0; i < expect.size(); ++i) CHECK(t.cosets[i] == expect[i]);
        }
    }
    CHECK_THROWS_AS(cosets_bruteforce(4, 3), precondition_error);
    CHECK_THROWS_AS(cosets_bruteforce(5, 0), precondition_error);
}

TEST_CASE("order formula cases") {
    CHECK(coset_size_formula(2, 2) == 1);
    CHECK(coset_size_formula(2, 3) == 2);
    CHECK(coset_size_formula(2, 5) == 8);
    CHECK(coset_size_formula(4, 3) == 1);
    CHECK(coset_size_formula(4, 4) == 1);
    CHECK(coset_size_formula(4, 5) == 2);
    CHECK(coset_size_formula(3, 7) == 16);
}

TEST_CASE("level representative sets") {
    // q = 17, n = 5: z = 4, level 5 holds the eight odd cosets
    auto s5 = sr_set(5, 4, 5);
    CHECK(s5.members == std::vector<uint64_t>{1, 3, 9, 27, 31, 29, 23, 5});
    // level 2 always holds the two quarter residues
    auto s2 = sr_set(5, 4, 2);
    CHECK(s2.members == std::vector<uint64_t>{8, 24});

    for (uint32_t z : {2u, 3u, 4u, 5u}) {
        for (uint32_t r = 2; r <= 7; ++r) {
            auto s = sr_set(7, z, r);
            CHECK(s.members.size() == uint64_t(1) << (std::min(r, z) - 1));
            std::set<uint64_t> distinct(s.members.begin(), s.members.end());
            CHECK(distinct.size() == s.members.size());
            for (uint64_t m : s.members) {
                CHECK(m % (uint64_t(1) << (7 - r)) == 0);
                CHECK((m >> (7 - r)) % 2 == 1); // odd part at the right level
            }
        }
    }
    CHECK_THROWS_AS(sr_set(5, 4, 1), precondition_error);
    CHECK_THROWS_AS(sr_set(5, 4, 6), precondition_error);
    CHECK_THROWS_AS(sr_set(5, 1, 3), precondition_error);
}

TEST_CASE("closed form equals orbit enumeration") {
    for (uint64_t q : {5ULL, 9ULL, 13ULL, 17ULL, 25ULL, 41ULL, 97ULL}) {
        for (uint32_t n : {3u, 4u, 5u, 6u}) {
            auto a = cosets_closed_form(q, n);
            auto b = cosets_bruteforce(q, n);
            CHECK(a.closed_form);
            CHECK(a.cosets == b.cosets);
            CHECK(a.rep_of == b.rep_of);
            CHECK(a.pairing == b.pairing);
        }
    }
    // small n falls back
    auto small = cosets_closed_form(5, 2);
    CHECK(!small.closed_form);
    CHECK(small.cosets == cosets_bruteforce(5, 2).cosets);
    CHECK_THROWS_AS(cosets_closed_form(7, 4), precondition_error);
}

TEST_CASE("pairing fixed points are exactly 0 and N/2") {
    for (uint64_t q : {5ULL, 13ULL, 17ULL, 73ULL}) {
        for (uint32_t n : {3u, 4u, 5u}) {
            auto t = cosets_closed_form(q, n);
            std::size_t fixed = 0;
            for (std::size_t i = 0; i < t.cosets.size(); ++i) {
                CHECK(t.negate(t.negate(i)) == i);
                if (t.self_paired(i)) {
                    ++fixed;
                    CHECK((t.rep(i) == 0 || t.rep(i) == t.N / 2));
                }
            }
            CHECK(fixed == 2);
        }
    }
}

TEST_CASE("example listing: the eight odd cosets for q=17, n=5") {
    auto t = cosets_closed_form(17, 5);
    using V = std::vector<uint64_t>;
    CHECK(t.cosets[t.index_of(1)] == V{1, 17});
    CHECK(t.cosets[t.index_of(31)] == V{15, 31});
    CHECK(t.cosets[t.index_of(3)] == V{3, 19});
    CHECK(t.cosets[t.index_of(29)] == V{13, 29});
    CHECK(t.cosets[t.index_of(9)] == V{9, 25});
    CHECK(t.cosets[t.index_of(23)] == V{7, 23});
    CHECK(t.cosets[t.index_of(27)] == V{11, 27});
    CHECK(t.cosets[t.index_of(5)] == V{5, 21});
    // negation pairs odd cosets without fixed points
    CHECK(t.negate(t.index_of(1)) == t.index_of(31));
    CHECK(t.negate(t.index_of(3)) == t.index_of(29));
    CHECK(t.negate(t.index_of(9)) == t.index_of(23));
    CHECK(t.negate(t.index_of(27)) == t.index_of(5));
}
