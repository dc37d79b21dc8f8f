#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tame/psi.hpp"

using namespace tame;

namespace {

Polynomial P(const char* text) { return parse_poly(text, 3); }

}  // namespace

TEST_CASE("letter images by slot and degree") {
    const auto slot2 = psi_letter(SigmaLetter::make(2, 3, P("X1*X3")));
    REQUIRE(slot2.size() == 1);
    CHECK(slot2[0].factor() == FactorId::H1T);
    CHECK(slot2[0].element() == sigma(2, 3, P("X1*X3")));

    const auto affine = psi_letter(SigmaLetter::make(1, 2, P("X2 - X3 + 4")));
    REQUIRE(affine.size() == 1);
    CHECK(affine[0].factor() == FactorId::H3);

    const auto curved = psi_letter(SigmaLetter::make(1, 2, P("X2^2*X3")));
    REQUIRE(curved.size() == 3);
    CHECK(curved[0].factor() == FactorId::H3);
    CHECK(curved[0].element() == coordinate_swap(1, 3));
    CHECK(curved[1].factor() == FactorId::H1T);
    CHECK(curved[1].element() == sigma(3, 2, P("X2^2*X1")));
    CHECK(curved[2].element() == coordinate_swap(1, 3));
}

TEST_CASE("x3_to_x1 substitutes only X3") {
    CHECK(x3_to_x1(P("X2*X3^2 + X3")) == P("X1^2*X2 + X1"));
    CHECK(x3_to_x1(P("X2")) == P("X2"));
}

TEST_CASE("inverse letters map to inverse images") {
    for (const char* text : {"s(1,2,X2^2*X3)^-1", "s(3,-1/2,X1*X2)^-1", "s(1,5,X3 + 1)^-1"}) {
        const SigmaWord w = parse_sigma_word(text);
        const AmalgamWord image = psi_letter(w.letters()[0]);
        CHECK(phi_map(image) == eval(w));
        CHECK(reduce(concat(image, psi_letter(w.letters()[0].inverse()))).empty());
    }
}

TEST_CASE("the image evaluates back to the word") {
    for (std::uint64_t seed = 100; seed < 160; ++seed) {
        const SigmaWord w = random_word(seed, 12, 4, 9);
        CHECK(phi_map(psi(w)) == eval(w));
    }
}

TEST_CASE("the three-letter image agrees with the affine one when deg f <= 1") {
    Rng rng(61);
    const std::vector<int> v23 = {2, 3};
    for (int k = 0; k < 40; ++k) {
        const auto l = SigmaLetter::make(1, random_nonzero_scalar(rng, 9), random_poly(rng, 3, v23, 1, 9));
        const AmalgamWord reduced = reduce(psi_letter_conjugated(l));
        REQUIRE(reduced.size() <= 1);
        if (l.alpha == 1 && l.f.is_zero()) continue;
        CHECK(reduced[0].factor() == FactorId::H3);
        CHECK(same_elements(reduced, psi_letter(l)));
    }
}

TEST_CASE("relations map to equal amalgam words") {
    for (RelationKind kind : {RelationKind::R1, RelationKind::R2, RelationKind::R3}) {
        Rng rng(62 + int(kind));
        for (int s = 0; s < 3 * relation_case_count(kind); ++s) {
            const auto r = random_relation(rng, kind, s, 3, 9);
            INFO(relation_case_label(kind, s));
            CHECK(verify_relation_respect(r));
        }
    }
}

TEST_CASE("generator images land in the expected factors") {
    Rng rng(63);
    const std::vector<int> v13 = {1, 3}, v12 = {1, 2}, v23 = {2, 3};
    for (int k = 0; k < 30; ++k) {
        const Scalar a = random_nonzero_scalar(rng, 9);
        CHECK(membership_H1T(sigma(2, a, random_poly(rng, 3, v13, 4, 9))).verdict == Verdict::Yes);
        CHECK(membership_H1T(sigma(3, a, random_poly(rng, 3, v12, 4, 9))).verdict == Verdict::Yes);
        CHECK(membership_H3(sigma(1, a, random_poly(rng, 3, v23, 1, 9))));
    }
}
