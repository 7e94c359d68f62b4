#include <doctest.h>

#include "qsc/gf.hpp"

#include <set>

using namespace qsc;

TEST_CASE("u128 decimal rendering") {
    CHECK(u128_to_string(0) == "0");
    CHECK(u128_to_string(7) == "7");
    CHECK(u128_to_string(1234567890123456789ULL) == "1234567890123456789");
    CHECK(u128_to_string(static_cast<u128>(1) << 100) == "1267650600228229401496703205376");
}

TEST_CASE("prime field construction and arithmetic") {
    auto F5 = FieldSpec::prime(5);
    CHECK(F5->characteristic() == 5);
    CHECK(F5->degree() == 1);
    CHECK(F5->size() == 5);
    CHECK((F5->from_int(2) + F5->from_int(3)).is_zero());
    CHECK((F5->from_int(2) * F5->from_int(3)).is_one());
    CHECK(F5->from_int(2).inv() == F5->from_int(3));
    CHECK(F5->from_int(-1) == F5->from_int(4));
    CHECK(F5->from_int(2).pow(4).is_one());
    CHECK(F5->from_int(0).is_zero());
    CHECK_THROWS_AS(F5->from_int(0).inv(), precondition_error);
}

TEST_CASE("invalid field orders are rejected") {
    CHECK_THROWS_AS(FieldSpec::prime(2), precondition_error);
    CHECK_THROWS_AS(FieldSpec::prime(1), precondition_error);
    CHECK_THROWS_AS(FieldSpec::prime(15), precondition_error);
    CHECK_THROWS_AS(FieldSpec::of_order(8), precondition_error);
    CHECK_THROWS_AS(FieldSpec::of_order(15), precondition_error);
    CHECK_THROWS_AS(FieldSpec::of_order(1), precondition_error);
}

TEST_CASE("default irreducible moduli are the first in index order") {
    CHECK(find_irreducible_coeffs(3, 1, 0) == std::vector<uint32_t>{0, 1});
    CHECK(find_irreducible_coeffs(3, 2, 0) == std::vector<uint32_t>{1, 0, 1}); // y^2 + 1
    CHECK(find_irreducible_coeffs(5, 2, 0) == std::vector<uint32_t>{2, 0, 1}); // y^2 + 2
    CHECK(find_irreducible_coeffs(7, 2, 0) == std::vector<uint32_t>{1, 0, 1}); // y^2 + 1
    // seeds wrap and still land on an irreducible
    auto f = find_irreducible_coeffs(5, 2, 9999);
    CHECK(f.size() == 3);
    CHECK(is_irreducible_mod_p(5, f));
}

TEST_CASE("irreducibility test agrees with root counting for quadratics") {
    for (uint32_t p : {3u, 5u, 7u, 13u}) {
        for (uint32_t b = 0; b < p; ++b) {
            for (uint32_t c = 0; c < p; ++c) {
                std::vector<uint32_t> f{c, b, 1};
                bool has_root = false;
                for (uint32_t x = 0; x < p; ++x)
                    if ((x * x + b * x + c) % p == 0) has_root = true;
                CHECK(is_irreducible_mod_p(p, f) == !has_root);
            }
        }
    }
}

TEST_CASE("field axioms hold exhaustively on GF(9) and GF(25)") {
    for (uint64_t q : {9ULL, 25ULL}) {
        auto F = FieldSpec::of_order(q);
        CHECK(F->size() == q);
        std::vector<FieldElement> all;
        for (u128 i = 0; i < q; ++i) all.push_back(F->from_index(i));

        for (const auto& x : all) {
            CHECK((x + F->zero()) == x);
            CHECK((x * F->one()) == x);
            CHECK((x - x).is_zero());
            CHECK((x + (-x)).is_zero());
            CHECK(x.pow(q) == x); // Frobenius fixes GF(q)
            if (!x.is_zero()) CHECK((x * x.inv()).is_one());
            for (const auto& y : all) {
                CHECK((x + y) == (y + x));
                CHECK((x * y) == (y * x));
            }
        }
        // sampled associativity and distributivity (full q^3 still cheap at 25)
        for (const auto& x : all)
            for (const auto& y : all) {
                const auto& z = all[(x.coeffs()[0] * 7 + y.coeffs()[1] * 3) % q];
                CHECK(((x + y) + z) == (x + (y + z)));
                CHECK(((x * y) * z) == (x * (y * z)));
                CHECK((x * (y + z)) == (x * y + x * z));
            }
    }
}

TEST_CASE("element index round trips") {
    auto F = FieldSpec::of_order(49);
    for (u128 i = 0; i < 49; ++i) CHECK(F->from_index(i).index() == i);
    CHECK_THROWS_AS(F->from_index(49), precondition_error);
    CHECK(F->from_residues({3, 5}).index() == 3 + 5 * 7);
}

TEST_CASE("multiplicative orders in small fields") {
    auto F5 = FieldSpec::prime(5);
    CHECK(multiplicative_order(F5->from_int(1), 4) == 1);
    CHECK(multiplicative_order(F5->from_int(4), 4) == 2);
    CHECK(multiplicative_order(F5->from_int(2), 4) == 4);
    auto F9 = FieldSpec::of_order(9);
    // y^2 = -1 in GF(9) with modulus y^2 + 1, so y has order 4
    CHECK(multiplicative_order(F9->from_residues({0, 1}), 8) == 4);
    CHECK_THROWS_AS(multiplicative_order(F9->zero(), 8), precondition_error);
    CHECK_THROWS_AS(multiplicative_order(F5->from_int(2), 3), precondition_error);
}

TEST_CASE("mixed-field arithmetic is rejected") {
    auto F5 = FieldSpec::prime(5);
    auto F7 = FieldSpec::prime(7);
    CHECK_THROWS_AS(F5->one() + F7->one(), precondition_error);
    CHECK_THROWS_AS(FieldElement{} + FieldElement{}, precondition_error);
}

TEST_CASE("tower over a prime base embeds constants") {
    auto F5 = FieldSpec::prime(5);
    auto tw = TowerSpec::build(F5, 2);
    CHECK(tw.top()->size() == 25);
    for (int v = 0; v < 5; ++v) {
        auto e = tw.embed(F5->from_int(v));
        CHECK(tw.is_in_subfield(e));
        CHECK(tw.project_to_base(e) == F5->from_int(v));
    }
    CHECK(tw.embed(F5->from_int(2)) + tw.embed(F5->from_int(3)) == tw.top()->zero());
    // exactly 5 of the 25 elements lie in the base field
    int count = 0;
    for (u128 i = 0; i < 25; ++i) count += tw.is_in_subfield(tw.top()->from_index(i));
    CHECK(count == 5);
}

TEST_CASE("tower over GF(9) embeds the full base field homomorphically") {
    auto F9 = FieldSpec::of_order(9);
    auto tw = TowerSpec::build(F9, 2);
    CHECK(tw.top()->size() == 81);
    CHECK(tw.top()->degree() == 4);

    // gen_image is a root of the base modulus inside the top field
    const auto& mod = F9->modulus();
    auto acc = tw.top()->zero();
    for (std::size_t i = mod.size(); i-- > 0;)
        acc = acc * tw.gen_image() + tw.top()->from_int(mod[i]);
    CHECK(acc.is_zero());

    std::vector<FieldElement> base_all;
    for (u128 i = 0; i < 9; ++i) base_all.push_back(F9->from_index(i));
    std::set<std::vector<uint32_t>> images;
    for (const auto& x : base_all) {
        auto ex = tw.embed(x);
        images.insert(ex.coeffs());
        CHECK(tw.is_in_subfield(ex));
        CHECK(tw.project_to_base(ex) == x);
        for (const auto& y : base_all) {
            CHECK(tw.embed(x + y) == tw.embed(x) + tw.embed(y));
            CHECK(tw.embed(x * y) == tw.embed(x) * tw.embed(y));
        }
    }
    CHECK(images.size() == 9); // injective
    int count = 0;
    for (u128 i = 0; i < 81; ++i) count += tw.is_in_subfield(tw.top()->from_index(i));
    CHECK(count == 9);
    // something outside the subfield has no projection
    for (u128 i = 0; i < 81; ++i) {
        auto x = tw.top()->from_index(i);
        if (!tw.is_in_subfield(x)) {
            CHECK_THROWS_AS(tw.project_to_base(x), precondition_error);
            break;
        }
    }
}

TEST_CASE("trivial tower is the identity") {
    auto F9 = FieldSpec::of_order(9);
    auto tw = TowerSpec::build(F9, 1);
    CHECK(tw.top().get() == F9.get());
    for (u128 i = 0; i < 9; ++i) {
        auto x = F9->from_index(i);
        CHECK(tw.embed(x) == x);
        CHECK(tw.is_in_subfield(x));
        CHECK(tw.project_to_base(x) == x);
    }
}

TEST_CASE("primitive roots of unity have the exact order") {
    auto F17 = FieldSpec::prime(17);
    auto tw17 = TowerSpec::build(F17, 1);
    auto a16 = primitive_nth_root(tw17, 16);
    CHECK(a16.pow(16).is_one());
    CHECK(!a16.pow(8).is_one());

    auto F5 = FieldSpec::prime(5);
    auto tw = TowerSpec::build(F5, 2);
    auto a8 = primitive_nth_root(tw, 8);
    CHECK(a8.pow(8).is_one());
    CHECK(!a8.pow(4).is_one());
    // reproducible
    CHECK(primitive_nth_root(tw, 8) == a8);

    CHECK(primitive_nth_root(tw, 1).is_one());
    CHECK_THROWS_AS(primitive_nth_root(tw17, 3), precondition_error);
}

TEST_CASE("large towers stay within 128-bit sizes") {
    auto F97 = FieldSpec::prime(97);
    auto tw = TowerSpec::build(F97, 16);
    CHECK(tw.top()->degree() == 16);
    CHECK(u128_to_string(tw.top_order()).size() >= 32); // 97^16 ~ 6.1e31
    auto x = tw.embed(F97->from_int(96));
    CHECK(tw.is_in_subfield(x));
    CHECK(tw.project_to_base(x) == F97->from_int(96));
}
