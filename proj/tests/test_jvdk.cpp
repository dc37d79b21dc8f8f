#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "support.hpp"
#include "tame/jvdk.hpp"

using namespace tame;

namespace {

PolyMap M(const char* text) { return parse_map(text); }

void check_factorization(const PolyMap& phi, const PlaneFactorization& f) {
    CHECK(recompose(f.letters) == phi);
    for (const auto& l : f.letters) {
        if (l.kind == PlaneKind::Affine) CHECK(is_plane_affine(l.element));
        else CHECK(is_plane_triangular(l.element));
        CHECK_FALSE(l.element.is_identity());
    }
    for (std::size_t k = 0; k + 1 < f.letters.size(); ++k) CHECK(f.letters[k].kind != f.letters[k + 1].kind);
    for (std::size_t k = 0; k + 1 < f.degree_trace.size(); ++k) CHECK(f.degree_trace[k] > f.degree_trace[k + 1]);
}

}  // namespace

TEST_CASE("shape predicates") {
    CHECK(is_plane_affine(M("(2*X1 + X2 + 1; X1 - X2)")));
    CHECK_FALSE(is_plane_affine(M("(X1 + X2; X1 + X2)")));
    CHECK(is_plane_triangular(M("(3*X1 + 1; -X2 + X1^4)")));
    CHECK_FALSE(is_plane_triangular(M("(X1 + X2; X2)")));
    CHECK_FALSE(is_plane_triangular(M("(X1; X2 + X2^2)")));
}

TEST_CASE("a single triangular map") {
    const PolyMap phi = M("(X1; X2 + X1^3)");
    auto r = factor_ga2(phi);
    REQUIRE(std::holds_alternative<PlaneFactorization>(r));
    const auto& f = std::get<PlaneFactorization>(r);
    check_factorization(phi, f);
    REQUIRE(f.letters.size() == 1);
    CHECK(f.letters[0].kind == PlaneKind::Triangular);
}

TEST_CASE("a shear in the other direction needs exactly one triangular letter") {
    const PolyMap phi = M("(X1 + X2^3; X2)");
    auto r = factor_ga2(phi);
    REQUIRE(std::holds_alternative<PlaneFactorization>(r));
    const auto& f = std::get<PlaneFactorization>(r);
    check_factorization(phi, f);
    CHECK(std::count_if(f.letters.begin(), f.letters.end(),
                        [](const PlaneLetter& l) { return l.kind == PlaneKind::Triangular; }) == 1);
}

TEST_CASE("affine maps give one affine letter") {
    const PolyMap phi = M("(2*X1 + X2 + 1; X1 - X2)");
    auto r = factor_ga2(phi);
    REQUIRE(std::holds_alternative<PlaneFactorization>(r));
    const auto& f = std::get<PlaneFactorization>(r);
    REQUIRE(f.letters.size() == 1);
    CHECK(f.letters[0].kind == PlaneKind::Affine);
    CHECK(factor_ga2(PolyMap::identity(2)).index() == 0);
}

TEST_CASE("random alternating products round trip") {
    Rng rng(41);
    for (int k = 0; k < 60; ++k) {
        const PolyMap phi = testkit::random_plane_automorphism(rng, 5, 3);
        auto r = factor_ga2(phi);
        REQUIRE(std::holds_alternative<PlaneFactorization>(r));
        check_factorization(phi, std::get<PlaneFactorization>(r));
    }
}

TEST_CASE("non-automorphisms are rejected") {
    Rng rng(42);
    for (int k = 0; k < 30; ++k) {
        const PolyMap phi = testkit::random_plane_non_automorphism(rng);
        CHECK(std::holds_alternative<NotAutomorphism>(factor_ga2(phi)));
    }
    CHECK(std::holds_alternative<NotAutomorphism>(factor_ga2(M("(X1^2; X2)"))));
    CHECK(std::holds_alternative<NotAutomorphism>(factor_ga2(M("(X1 + X2^2; X2 + X1^2)"))));
}

TEST_CASE("elementary steps") {
    CHECK_THROWS(ElementaryStep::make(1, 1, parse_poly("X2", 3)));
    CHECK_THROWS(ElementaryStep::make(2, 1, parse_poly("X2", 3)));
    const auto s = ElementaryStep::make(3, 2, parse_poly("X1*X2^2", 3));
    CHECK(compose(s.map(), s.inverse().map()).is_identity());
    CHECK(replay_steps({}).is_identity());
}

// Steps whose top term in the moved variable has a constant coefficient, so
// every reduction step divides exactly over K[X1].
TEST_CASE("ring factorization of products with unit leading coefficients") {
    Rng rng(43);
    const std::vector<int> v1 = {1}, v12 = {1, 2}, v13 = {1, 3};
    for (int k = 0; k < 60; ++k) {
        std::vector<ElementaryStep> steps;
        const int count = int(rng.uniform(1, 4));
        for (int t = 0; t < count; ++t) {
            const int slot = t % 2 == 0 ? 2 : 3;
            const int other = 5 - slot;
            const auto d = std::uint32_t(rng.uniform(2, 3));
            const Polynomial top = Polynomial::monomial(3, Monomial::variable(other, d), random_nonzero_scalar(rng, 5));
            Polynomial low = random_poly(rng, 3, v1, 2, 5);
            if (rng.coin()) low += Polynomial::variable(3, other) * random_poly(rng, 3, v1, 2, 5);
            steps.push_back(ElementaryStep::make(slot, random_nonzero_scalar(rng, 4), top + low));
        }
        const PolyMap target = replay_steps(steps);
        auto r = factor_ta2_ring(target.component(2), target.component(3));
        REQUIRE(std::holds_alternative<RingFactorization>(r));
        CHECK(replay_steps(std::get<RingFactorization>(r).steps) == target);
    }
}

TEST_CASE("ring factorization answers are exact or Unknown") {
    Rng rng(44);
    const std::vector<int> v12 = {1, 2}, v13 = {1, 3};
    int yes = 0;
    for (int k = 0; k < 60; ++k) {
        std::vector<ElementaryStep> steps;
        const int count = int(rng.uniform(1, 4));
        for (int t = 0; t < count; ++t) {
            const int slot = int(rng.uniform(2, 3));
            steps.push_back(ElementaryStep::make(slot, random_nonzero_scalar(rng, 4),
                                                 random_poly(rng, 3, slot == 2 ? v13 : v12, 3, 5)));
        }
        const PolyMap target = replay_steps(steps);
        auto r = factor_ta2_ring(target.component(2), target.component(3));
        if (auto* f = std::get_if<RingFactorization>(&r)) {
            ++yes;
            CHECK(replay_steps(f->steps) == target);
        } else {
            CHECK_FALSE(std::get<RingUnknown>(r).reason.empty());
        }
    }
    CHECK(yes > 0);
}

TEST_CASE("ring factorization on small inputs") {
    auto one = factor_ta2_ring(parse_poly("X2 + X1*X3^2", 3), parse_poly("X3", 3));
    REQUIRE(std::holds_alternative<RingFactorization>(one));
    const auto& steps = std::get<RingFactorization>(one).steps;
    REQUIRE(steps.size() == 1);
    CHECK(steps[0] == ElementaryStep::make(2, 1, parse_poly("X1*X3^2", 3)));
    auto none = factor_ta2_ring(parse_poly("X2", 3), parse_poly("X3", 3));
    REQUIRE(std::holds_alternative<RingFactorization>(none));
    CHECK(std::get<RingFactorization>(none).steps.empty());
}

TEST_CASE("ring factorization gives up on the conjugated Nagata map") {
    const PolyMap t = coordinate_swap(1, 3);
    const PolyMap c = compose(t, compose(nagata(), t));
    CHECK(c.component(1) == Polynomial::variable(3, 1));
    CHECK(std::holds_alternative<RingUnknown>(factor_ta2_ring(c.component(2), c.component(3))));
}

TEST_CASE("letters print with their kind") {
    CHECK(format_plane_letter({PlaneKind::Triangular, M("(X1; X2 + X1^2)")}) == "T: (X1; X1^2 + X2)");
    CHECK(format_plane_letter({PlaneKind::Affine, M("(X2; X1)")}) == "A: (X2; X1)");
}
