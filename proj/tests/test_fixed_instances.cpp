#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tame/proof_chain.hpp"

using namespace tame;

namespace {

Polynomial P(const char* text) { return parse_poly(text, 3); }
PolyMap M(const char* text) { return parse_map(text); }

const ChainTemplate& chain_named(const std::vector<ChainTemplate>& all, const std::string& label) {
    auto it = std::find_if(all.begin(), all.end(), [&](const ChainTemplate& t) { return t.label == label; });
    REQUIRE(it != all.end());
    return *it;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
    CHECK(P("X1 + X2") + P("-X2") == P("X1"));
    CHECK(P("X2*X3 + X1^2") + P("X2*X3 + X1^2") == P("2*X2*X3 + 2*X1^2"));
    CHECK(P("X1 + 1") * P("X1 - 1") == P("X1^2 - 1"));
    CHECK(P("X2*X3 + X1^2").pow(2) == P("X2^2*X3^2 + 2*X1^2*X2*X3 + X1^4"));
    const std::vector<Polynomial> swap12 = {P("X2"), P("X1"), P("X3")};
    CHECK(P("X1^2 + X2").substitute(swap12) == P("X2^2 + X1"));
    CHECK(P("X2*X3 + X1^2").uses_variable(2));
    CHECK_FALSE(P("X2 + 5").uses_variable(1));
    CHECK_FALSE(P("0").uses_variable(3));
    CHECK(P("7").total_degree() == Degree(0));
    const Polynomial f = parse_poly("2*X1^2*X2 - 3", 3);
    REQUIRE(f.size() == 2);
    CHECK(f.coefficient(Monomial({2, 1, 0})) == 2);
    CHECK(f.constant_term() == -3);
}

TEST_CASE("maps") {
    CHECK(compose(sigma(1, 2, P("X2")), sigma(1, 3, P("X3^2"))) == M("(6*X1 + X2 + 2*X3^2; X2; X3)"));
    CHECK(compose(sigma(1, 2, P("X2")), sigma(1, 3, P("X3^2"))) == sigma(1, 6, P("X2 + 2*X3^2")));
    CHECK(compose(tau(1, 2), tau(1, 2)).is_identity());
    CHECK(sigma(3, 1, P("X1")) == M("(X1; X2; X3 + X1)"));
    CHECK(sigma(1, 1, P("0")).is_identity());
    CHECK(tau(1, 2) == M("(X2; X1; X3)"));
    CHECK(tau(2, 3) == compose(tau(2, 1), compose(tau(1, 3), tau(2, 1))));
    CHECK(*invert(PolyMap(tau(1, 3).components())) == tau(1, 3));
    CHECK(apply_to_poly(P("X1"), nagata()) == nagata().component(1));
    CHECK(nagata().component(3) == P("X3"));
    CHECK(nagata().component(1).total_degree() == Degree(3));
    CHECK(nagata().component(2).total_degree() == Degree(5));
}

TEST_CASE("sigma words") {
    CHECK(eval(SigmaWord()).is_identity());
    CHECK(eval(tau_word(1, 2)) == M("(X2; X1; X3)"));
    CHECK(eval(parse_sigma_word("s(1,1,X2^2)^-1 s(3,1,X1) s(1,1,X2^2)")) == M("(X1; X2; X3 + X1 + X2^2)"));
    CHECK(tau_word(2, 3).size() == 3);
    CHECK(eval(tau_word(1, 3)) == eval(tau_word(3, 1)));
    CHECK(random_word(5, 0, 3, 9).empty());

    RelationParams p;
    p.i = 1;
    p.alpha = 2;
    p.f = P("X2");
    p.beta = 3;
    p.g = P("X3^2");
    const auto r1 = make_relation(RelationKind::R1, p);
    CHECK(r1.lhs == parse_sigma_word("s(1,2,X2) s(1,3,X3^2)"));
    CHECK(r1.rhs == parse_sigma_word("s(1,6,X2 + 2*X3^2)"));

    RelationParams q;
    q.k = 1;
    q.l = 2;
    q.i = 1;
    q.f = P("X2*X3");
    const auto r3 = make_relation(RelationKind::R3, q);
    REQUIRE(r3.rhs.size() == 1);
    CHECK(r3.rhs.letters()[0].i == 2);
    CHECK(r3.rhs.letters()[0].f == P("X1*X3"));
}

TEST_CASE("factor membership") {
    CHECK(membership_H3(tau(1, 3)));
    CHECK_FALSE(membership_H3(nagata()));
    CHECK(membership_H3(M("(X1 + 1; X2; X3)")));
    CHECK(membership_H2(M("(X1 + 1; X2; X3 + X1*X2)")));
    CHECK_FALSE(membership_H2(sigma(1, 1, P("X3"))));
    CHECK(membership_H2(sigma(1, 1, P("X2"))));
    CHECK(membership_H1T(sigma(2, 5, P("X1^3*X3 - 1"))).verdict == Verdict::Yes);
    CHECK(membership_H1T(tau(2, 3)).verdict == Verdict::Yes);
    CHECK(in_intersection(tau(1, 2), FactorId::H2, FactorId::H3));
    CHECK(in_intersection(sigma(3, 1, P("X1*X2")), FactorId::H1T, FactorId::H2));
    for (auto [a, b] : {std::pair{FactorId::H1T, FactorId::H2}, std::pair{FactorId::H1T, FactorId::H3},
                        std::pair{FactorId::H2, FactorId::H3}}) {
        CHECK_FALSE(in_intersection(nagata(), a, b));
    }
}

TEST_CASE("amalgam words") {
    CHECK(phi_map({}).is_identity());
    const Polynomial f = P("X2^2*X3 - 4*X3");
    const AmalgamWord conj = {swap_letter(1, 3), elementary_h1t_letter(3, 3, x3_to_x1(f)), swap_letter(1, 3)};
    CHECK(phi_map(conj) == sigma(1, 3, f));
    const auto affine = AmalgamLetter::make(FactorId::H3, M("(X2 + 1; X1 - X3; X3)"));
    CHECK(phi_map({affine}) == affine.element());
}

TEST_CASE("psi images") {
    const auto a = psi_letter(SigmaLetter::make(2, 1, P("X1*X3")));
    REQUIRE(a.size() == 1);
    CHECK(a[0].factor() == FactorId::H1T);
    const auto b = psi_letter(SigmaLetter::make(1, 1, P("3*X2 - X3 + 2")));
    REQUIRE(b.size() == 1);
    CHECK(b[0].factor() == FactorId::H3);
    CHECK(psi_letter(SigmaLetter::make(1, 1, P("X2*X3"))).size() == 3);
    CHECK(psi(SigmaWord()).empty());
    CHECK(phi_map(psi(tau_word(1, 3))) == M("(X3; X2; X1)"));
}

TEST_CASE("chain shapes") {
    const auto all = builtin_proof_chains();
    Rng rng(9);

    const auto& r1 = chain_named(all, "R1 i=1");
    const ProofChain c1 = r1.build(r1.sample(rng, 3, 9));
    CHECK(std::count_if(c1.steps.begin(), c1.steps.end(),
                        [](const ProofStep& s) { return s.justification == Justification::TauInvolution; }) == 1);

    const auto& r33 = chain_named(all, "R3 i=3 {k,l}={1,3}");
    const ProofChain c33 = r33.build(r33.sample(rng, 3, 9));
    CHECK(c33.steps.size() == 1);
    CHECK(c33.steps[0].justification == Justification::Assign15);
}

TEST_CASE("replay of specific chains") {
    const auto all = builtin_proof_chains();
    RelationParams p;
    p.i = 1;
    p.j = 3;
    p.alpha = 2;
    p.beta = 1;
    p.f = P("X2^2");
    p.g = P("X1*X2");
    const ReplayResult r = replay(chain_named(all, "R2 i=1 j=3").build(p));
    INFO(r.reason);
    CHECK(r.verified);

    RelationParams q;
    q.k = 1;
    q.l = 3;
    q.i = 1;
    q.alpha = 1;
    q.f = P("X2*X3");
    const ProofChain c = chain_named(all, "R3 i=1 {k,l}={1,3}").build(q);
    CHECK(c.steps.size() == 2);
    CHECK(replay(c).verified);
}
