#include "tame/proof_chain.hpp"

#include <algorithm>

namespace tame {

const char* to_string(Justification j) {
    switch (j) {
        case Justification::InFactor: return "InFactor";
        case Justification::PermRel: return "PermRel";
        case Justification::Special12: return "Special12";
        case Justification::TauInvolution: return "TauInvolution";
        case Justification::R1InFactor: return "R1InFactor";
        case Justification::R2InFactor: return "R2InFactor";
        case Justification::Assign15: return "Assign15";
    }
    return "?";
}

namespace {

Polynomial var(int i) { return Polynomial::variable(3, i); }

// f(a, b, c): simultaneous X1 -> a, X2 -> b, X3 -> c.
Polynomial at(const Polynomial& f, const Polynomial& a, const Polynomial& b, const Polynomial& c) {
    const std::vector<Polynomial> images = {a, b, c};
    return f.substitute(images);
}

AmalgamLetter T(int k, int l) { return swap_letter(k, l); }

AmalgamLetter S(int i, const Scalar& alpha, const Polynomial& f) { return elementary_h1t_letter(i, alpha, f); }

AmalgamLetter S_in(FactorId factor, int i, const Scalar& alpha, const Polynomial& f) {
    if (factor == FactorId::H1T) return S(i, alpha, f);
    return AmalgamLetter::make(factor, sigma(i, alpha, f));
}

AmalgamLetter inv(const AmalgamLetter& l) { return l.inverse(); }

class ChainBuilder {
public:
    ChainBuilder(std::string label, RelationInstance relation, AmalgamWord start)
        : chain_{std::move(label), std::move(relation), {}}, current_(std::move(start)) {}

    ChainBuilder& rewrite(std::size_t pos, std::size_t len, AmalgamWord replacement, Justification j,
                          std::optional<FactorId> factor = std::nullopt,
                          std::optional<SigmaLetter> cited = std::nullopt) {
        if (pos + len > current_.size()) throw Error("chain rewrite out of range in " + chain_.label);
        ProofStep step;
        step.before = current_;
        step.justification = j;
        step.factor = factor;
        step.span_begin = pos;
        step.span_before = len;
        step.span_after = replacement.size();
        step.cited = std::move(cited);
        AmalgamWord next(current_.begin(), current_.begin() + long(pos));
        next.insert(next.end(), replacement.begin(), replacement.end());
        next.insert(next.end(), current_.begin() + long(pos + len), current_.end());
        step.after = next;
        current_ = std::move(next);
        chain_.steps.push_back(std::move(step));
        return *this;
    }

    ProofChain finish() { return std::move(chain_); }

private:
    ProofChain chain_;
    AmalgamWord current_;
};

std::vector<int> vars_except(std::initializer_list<int> excluded) {
    std::vector<int> out;
    for (int v = 1; v <= 3; ++v) {
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
    }
    return out;
}

RelationParams base_params(Rng& rng, long coeff_bound) {
    RelationParams p;
    p.alpha = random_nonzero_scalar(rng, coeff_bound);
    p.beta = random_nonzero_scalar(rng, coeff_bound);
    return p;
}

// Sampler for a relation whose f avoids `f_skip` and g avoids `g_skip`.
std::function<RelationParams(Rng&, int, long)> sampler(RelationParams shape, std::initializer_list<int> f_skip,
                                                       std::initializer_list<int> g_skip) {
    const std::vector<int> fv = vars_except(f_skip), gv = vars_except(g_skip);
    return [shape, fv, gv](Rng& rng, int max_degree, long coeff_bound) {
        RelationParams p = base_params(rng, coeff_bound);
        p.i = shape.i;
        p.j = shape.j;
        p.k = shape.k;
        p.l = shape.l;
        p.f = random_poly(rng, 3, fv, max_degree, coeff_bound);
        p.g = random_poly(rng, 3, gv, max_degree, coeff_bound);
        return p;
    };
}

RelationParams shape_r1(int i) {
    RelationParams p;
    p.i = i;
    return p;
}

RelationParams shape_r2(int i, int j) {
    RelationParams p;
    p.i = i;
    p.j = j;
    return p;
}

RelationParams shape_r3(int k, int l, int i) {
    RelationParams p;
    p.k = k;
    p.l = l;
    p.i = i;
    return p;
}

// R1, i = 1.
ProofChain chain_r1_1(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R1, p);
    const Polynomial f1 = x3_to_x1(p.f), g1 = x3_to_x1(p.g);
    ChainBuilder b("R1 i=1", r, {T(1, 3), S(3, p.alpha, f1), T(1, 3), T(1, 3), S(3, p.beta, g1), T(1, 3)});
    b.rewrite(2, 2, {}, Justification::TauInvolution);
    b.rewrite(1, 2, {S(3, p.alpha * p.beta, f1 + p.alpha * g1)}, Justification::R1InFactor, FactorId::H1T);
    return b.finish();
}

// R2, i = 1, j = 3; f in K[X2], g in K[X1,X2].
ProofChain chain_r2_13(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R2, p);
    const Polynomial X1 = var(1), X2 = var(2), X3 = var(3);
    const Polynomial f1 = at(p.f, X1, X1, X3);
    const AmalgamLetter s = S(3, p.alpha, p.f);
    ChainBuilder b("R2 i=1 j=3", r, {T(1, 3), inv(s), T(1, 3), S(3, p.beta, p.g), T(1, 3), s, T(1, 3)});
    const AmalgamWord t13 = {T(1, 2), T(2, 3), T(1, 2)};
    // t13 at positions 6, 4, 2, 0
    for (std::size_t pos : {6u, 4u, 2u, 0u}) b.rewrite(pos, 1, t13, Justification::PermRel);
    // T12 T23 T12 s^-1 T12 T23 T12 sg T12 T23 T12 s T12 T23 T12
    b.rewrite(2, 3, {inv(S_in(FactorId::H2, 3, p.alpha, f1))}, Justification::InFactor, FactorId::H2);
    // T12 T23 s'^-1 T23 T12 sg T12 T23 T12 s T12 T23 T12
    b.rewrite(8, 3, {S_in(FactorId::H2, 3, p.alpha, f1)}, Justification::InFactor, FactorId::H2);
    // T12 T23 s'^-1 T23 T12 sg T12 T23 s' T23 T12
    b.rewrite(4, 3, {S_in(FactorId::H2, 3, p.beta, at(p.g, X2, X1, X3))}, Justification::InFactor, FactorId::H2);
    // T12 T23 s'^-1 T23 sg21 T23 s' T23 T12
    b.rewrite(3, 3, {S(2, p.beta, at(p.g, X3, X1, X3))}, Justification::InFactor, FactorId::H1T);
    // T12 T23 s'^-1 s2g31 s' T23 T12
    b.rewrite(2, 3, {S(2, p.beta, at(p.g, p.alpha * X3 + f1, X1, X3))}, Justification::R2InFactor, FactorId::H1T);
    b.rewrite(1, 3, {S(3, p.beta, at(p.g, p.alpha * X2 + f1, X1, X3))}, Justification::InFactor, FactorId::H1T);
    b.rewrite(0, 3, {S_in(FactorId::H2, 3, p.beta, at(p.g, p.alpha * X1 + p.f, X2, X3))}, Justification::InFactor,
              FactorId::H2);
    return b.finish();
}

// R2, i = 3, j = 1; f in K[X2], g in K[X2,X3].
ProofChain chain_r2_31(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R2, p);
    const Polynomial X1 = var(1), X2 = var(2);
    const Polynomial f1 = at(p.f, X1, X1, var(3));
    const AmalgamLetter s = S(3, p.alpha, p.f);
    ChainBuilder b("R2 i=3 j=1", r, {inv(s), T(1, 3), S(3, p.beta, at(p.g, X1, X2, X1)), T(1, 3), s});
    b.rewrite(0, 0, {T(1, 3), T(1, 3)}, Justification::TauInvolution);
    b.rewrite(7, 0, {T(1, 3), T(1, 3)}, Justification::TauInvolution);
    // T13 T13 s^-1 T13 sg T13 s T13 T13
    const AmalgamWord t13 = {T(1, 2), T(2, 3), T(1, 2)};
    for (std::size_t pos : {7u, 5u, 3u, 1u}) b.rewrite(pos, 1, t13, Justification::PermRel);
    // T13 T12 T23 T12 s^-1 T12 T23 T12 sg T12 T23 T12 s T12 T23 T12 T13
    b.rewrite(3, 3, {inv(S_in(FactorId::H2, 3, p.alpha, f1))}, Justification::InFactor, FactorId::H2);
    b.rewrite(9, 3, {S_in(FactorId::H2, 3, p.alpha, f1)}, Justification::InFactor, FactorId::H2);
    // T13 T12 T23 s'^-1 T23 T12 sg T12 T23 s' T23 T12 T13
    b.rewrite(2, 3, {inv(S(2, p.alpha, f1))}, Justification::InFactor, FactorId::H1T);
    b.rewrite(6, 3, {S(2, p.alpha, f1)}, Justification::InFactor, FactorId::H1T);
    // T13 T12 s2'^-1 T12 sg T12 s2' T12 T13
    b.rewrite(3, 3, {S_in(FactorId::H2, 3, p.beta, at(p.g, X1, X1, X2))}, Justification::InFactor, FactorId::H2);
    b.rewrite(2, 3, {S(3, p.beta, at(p.g, X1, X1, p.alpha * X2 + f1))}, Justification::R2InFactor, FactorId::H1T);
    b.rewrite(1, 3, {S_in(FactorId::H2, 3, p.beta, at(p.g, X1, X2, p.alpha * X1 + p.f))}, Justification::InFactor,
              FactorId::H2);
    return b.finish();
}

// R2, i = 1, j = 2; f in K[X3], g in K[X1,X3].
ProofChain chain_r2_12(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R2, p);
    const Polynomial X1 = var(1), X2 = var(2), X3 = var(3);
    const Polynomial f1 = at(p.f, X1, X2, X1);
    const AmalgamLetter s = S(3, p.alpha, f1);
    ChainBuilder b("R2 i=1 j=2", r, {T(1, 3), inv(s), T(1, 3), S(2, p.beta, p.g), T(1, 3), s, T(1, 3)});
    b.rewrite(2, 3, {S(2, p.beta, at(p.g, X3, X2, X1))}, Justification::Special12);
    b.rewrite(1, 3, {S(2, p.beta, at(p.g, p.alpha * X3 + f1, X2, X1))}, Justification::R2InFactor, FactorId::H1T);
    b.rewrite(0, 3, {S(2, p.beta, at(p.g, p.alpha * X1 + p.f, X2, X3))}, Justification::Special12);
    return b.finish();
}

// R2, i = 2, j = 1; f in K[X3], g in K[X2,X3].
ProofChain chain_r2_21(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R2, p);
    const Polynomial X1 = var(1), X2 = var(2);
    const Polynomial f1 = at(p.f, X1, X2, X1);
    const AmalgamLetter s = S(2, p.alpha, p.f);
    ChainBuilder b("R2 i=2 j=1", r, {inv(s), T(1, 3), S(3, p.beta, at(p.g, X1, X2, X1)), T(1, 3), s});
    b.rewrite(0, 0, {T(1, 3), T(1, 3)}, Justification::TauInvolution);
    b.rewrite(7, 0, {T(1, 3), T(1, 3)}, Justification::TauInvolution);
    // T13 T13 s^-1 T13 sg T13 s T13 T13
    b.rewrite(1, 3, {inv(S(2, p.alpha, f1))}, Justification::Special12);
    // T13 s'^-1 sg T13 s T13 T13
    b.rewrite(3, 3, {S(2, p.alpha, f1)}, Justification::Special12);
    b.rewrite(1, 3, {S(3, p.beta, at(p.g, X1, p.alpha * X2 + f1, X1))}, Justification::R2InFactor, FactorId::H1T);
    return b.finish();
}

RelationParams r3_params(const RelationParams& p, int k, int l, int i) {
    RelationParams q = p;
    q.k = k;
    q.l = l;
    q.i = i;
    return q;
}

// R3, i = 3, {k,l} = {1,3}; f in K[X1,X2].
ProofChain chain_r3_3_13(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, r3_params(p, 1, 3, 3));
    const Polynomial X2 = var(2), X3 = var(3);
    ChainBuilder b("R3 i=3 {k,l}={1,3}", r, {T(1, 3), S(3, p.alpha, p.f), T(1, 3)});
    b.rewrite(0, 3, {T(1, 3), S(3, p.alpha, p.f), T(1, 3)}, Justification::Assign15, std::nullopt,
              SigmaLetter::make(1, p.alpha, at(p.f, X3, X2, X3)));
    return b.finish();
}

// R3, i = 2, {k,l} = {1,2}; f in K[X1,X3].
ProofChain chain_r3_2_12(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, r3_params(p, 1, 2, 2));
    const Polynomial X1 = var(1), X2 = var(2);
    ChainBuilder b("R3 i=2 {k,l}={1,2}", r, {T(1, 2), S(2, p.alpha, p.f), T(1, 2)});
    const AmalgamLetter t23 = AmalgamLetter::make(FactorId::H1T, coordinate_swap(2, 3));
    b.rewrite(1, 1, {t23, S(3, p.alpha, at(p.f, X1, X2, X2)), t23}, Justification::InFactor, FactorId::H1T);
    // T12 T23 s3 T23 T12
    b.rewrite(0, 2, {T(1, 3), T(1, 2)}, Justification::PermRel);
    b.rewrite(3, 2, {T(1, 2), T(1, 3)}, Justification::PermRel);
    // T13 T12 s3 T12 T13
    b.rewrite(1, 3, {S_in(FactorId::H2, 3, p.alpha, at(p.f, X2, X2, X1))}, Justification::InFactor, FactorId::H2);
    return b.finish();
}

// R3, i = 2, {k,l} = {1,3}; f in K[X1,X3].
ProofChain chain_r3_2_13(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, r3_params(p, 1, 3, 2));
    ChainBuilder b("R3 i=2 {k,l}={1,3}", r, {T(1, 3), S(2, p.alpha, p.f), T(1, 3)});
    b.rewrite(0, 3, {S(2, p.alpha, at(p.f, var(3), var(2), var(1)))}, Justification::Special12);
    return b.finish();
}

// R3, i = 1, {k,l} = {2,3}; f in K[X2,X3].
ProofChain chain_r3_1_23(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, r3_params(p, 2, 3, 1));
    const Polynomial X1 = var(1), X2 = var(2);
    ChainBuilder b("R3 i=1 {k,l}={2,3}", r,
                   {T(2, 3), T(1, 3), S(3, p.alpha, at(p.f, X1, X2, X1)), T(1, 3), T(2, 3)});
    b.rewrite(0, 2, {T(1, 3), T(1, 2)}, Justification::PermRel);
    b.rewrite(3, 2, {T(1, 2), T(1, 3)}, Justification::PermRel);
    b.rewrite(1, 3, {S_in(FactorId::H2, 3, p.alpha, at(p.f, X1, X1, X2))}, Justification::InFactor, FactorId::H2);
    return b.finish();
}

// R3, i = 1, {k,l} = {1,3}; f in K[X2,X3].
ProofChain chain_r3_1_13(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, r3_params(p, 1, 3, 1));
    ChainBuilder b("R3 i=1 {k,l}={1,3}", r,
                   {T(1, 3), T(1, 3), S(3, p.alpha, x3_to_x1(p.f)), T(1, 3), T(1, 3)});
    b.rewrite(0, 2, {}, Justification::TauInvolution);
    b.rewrite(1, 2, {}, Justification::TauInvolution);
    return b.finish();
}

// R3, i = 1, {k,l} = {1,2}; f in K[X2,X3].
ProofChain chain_r3_1_12(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, r3_params(p, 1, 2, 1));
    const Polynomial X1 = var(1), X2 = var(2), X3 = var(3);
    ChainBuilder b("R3 i=1 {k,l}={1,2}", r,
                   {T(1, 2), T(1, 3), S(3, p.alpha, x3_to_x1(p.f)), T(1, 3), T(1, 2)});
    b.rewrite(0, 2, {T(1, 3), T(2, 3)}, Justification::PermRel);
    b.rewrite(3, 2, {T(2, 3), T(1, 3)}, Justification::PermRel);
    // T13 T23 s3 T23 T13
    b.rewrite(1, 3, {S(2, p.alpha, at(p.f, X1, X3, X1))}, Justification::InFactor, FactorId::H1T);
    b.rewrite(0, 3, {S(2, p.alpha, at(p.f, X2, X1, X3))}, Justification::Special12);
    return b.finish();
}

ProofChain chain_r1_in_factor(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R1, p);
    ChainBuilder b("R1 i=" + std::to_string(p.i), r, {S(p.i, p.alpha, p.f), S(p.i, p.beta, p.g)});
    b.rewrite(0, 2, {S(p.i, p.alpha * p.beta, p.f + p.alpha * p.g)}, Justification::R1InFactor, FactorId::H1T);
    return b.finish();
}

ProofChain chain_r2_in_factor(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R2, p);
    const AmalgamLetter s = S(p.i, p.alpha, p.f);
    ChainBuilder b("R2 i=" + std::to_string(p.i) + " j=" + std::to_string(p.j), r,
                   {inv(s), S(p.j, p.beta, p.g), s});
    b.rewrite(0, 3, {S(p.j, p.beta, apply_to_poly(p.g, sigma(p.i, p.alpha, p.f)))}, Justification::R2InFactor,
              FactorId::H1T);
    return b.finish();
}

ProofChain chain_r3_in_factor(const RelationParams& p) {
    const auto r = make_relation(RelationKind::R3, p);
    const int j = r.params.j;
    const FactorId factor = p.i == 3 && p.k + p.l == 3 ? FactorId::H2 : FactorId::H1T;
    ChainBuilder b("R3 i=" + std::to_string(p.i) + " {k,l}={" + std::to_string(std::min(p.k, p.l)) + "," +
                       std::to_string(std::max(p.k, p.l)) + "}",
                   r, {T(p.k, p.l), S(p.i, p.alpha, p.f), T(p.k, p.l)});
    b.rewrite(0, 3, {S_in(factor, j, p.alpha, apply_to_poly(p.f, coordinate_swap(p.k, p.l)))},
              Justification::InFactor, factor);
    return b.finish();
}

// --- replay checks ---

bool is_transposition(const AmalgamLetter& l) {
    for (auto [k, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
        if (l.element() == coordinate_swap(k, m)) return true;
    }
    return false;
}

// Slot index i when the element is sigma_{i,alpha,f} with i in {2,3}, else 0.
int elementary_slot(const PolyMap& phi) {
    int moved = 0;
    for (int k = 1; k <= 3; ++k) {
        if (phi.component(k) == var(k)) continue;
        if (moved != 0) return 0;
        moved = k;
    }
    if (moved == 0) return 0;
    const Polynomial& f = phi.component(moved);
    const Scalar alpha = f.coefficient(Monomial::variable(moved));
    if (sgn(alpha) == 0) return 0;
    if ((f - alpha * var(moved)).uses_variable(moved)) return 0;
    return moved == 1 ? 0 : moved;
}

// The identity counts as an elementary map on every slot.
bool on_slot(const PolyMap& phi, int i) { return phi.is_identity() || elementary_slot(phi) == i; }

// Common slot of the letters, ignoring identities; 0 when there is none.
int common_slot(std::initializer_list<const PolyMap*> maps) {
    int slot = -1;
    for (const PolyMap* m : maps) {
        if (m->is_identity()) continue;
        const int i = elementary_slot(*m);
        if (i == 0 || (slot != -1 && slot != i)) return 0;
        slot = i;
    }
    return slot == -1 ? 2 : slot;
}

PolyMap product(const AmalgamWord& w, std::size_t begin, std::size_t len) {
    PolyMap acc = PolyMap::identity(3);
    for (std::size_t k = begin; k < begin + len; ++k) acc = compose(acc, w[k].element());
    return acc;
}

std::optional<std::string> check_justification(const ProofStep& s) {
    const AmalgamWord before(s.before.begin() + long(s.span_begin),
                             s.before.begin() + long(s.span_begin + s.span_before));
    const AmalgamWord after(s.after.begin() + long(s.span_begin), s.after.begin() + long(s.span_begin + s.span_after));
    const bool local_identity = product(before, 0, before.size()) == product(after, 0, after.size());

    auto all_in = [&](FactorId f) -> std::optional<std::string> {
        for (const auto* side : {&before, &after}) {
            for (const auto& l : *side) {
                if (!in_factor(l.element(), f)) {
                    return "letter " + format_map(l.element()) + " is not in " + to_string(f);
                }
            }
        }
        return std::nullopt;
    };

    switch (s.justification) {
        case Justification::InFactor:
        case Justification::R1InFactor:
        case Justification::R2InFactor: {
            if (!s.factor) return "missing factor tag";
            if (auto bad = all_in(*s.factor)) return bad;
            if (!local_identity) return "local identity does not hold";
            if (s.justification == Justification::R1InFactor) {
                if (before.size() != 2 || after.size() != 1) return "R1 identity rewrites two letters into one";
                if (common_slot({&before[0].element(), &before[1].element(), &after[0].element()}) == 0) {
                    return "R1 identity needs elementary letters on one slot in {2,3}";
                }
            }
            if (s.justification == Justification::R2InFactor) {
                if (before.size() != 3 || after.size() != 1) return "R2 identity rewrites three letters into one";
                const int i = common_slot({&before[2].element()});
                const int j = common_slot({&before[1].element(), &after[0].element()});
                if (i == 0 || j == 0 || (i == j && !before[2].element().is_identity() &&
                                         !before[1].element().is_identity())) {
                    return "R2 identity needs elementary letters on slots 2 and 3";
                }
                if (!(before[0].element() == before[2].element().inverse())) return "R2 identity needs s^-1 t s";
            }
            return std::nullopt;
        }
        case Justification::PermRel: {
            if (before.empty() || after.empty()) return "permutation identity with an empty side";
            for (const auto* side : {&before, &after}) {
                for (const auto& l : *side) {
                    if (!is_transposition(l)) return "letter " + format_map(l.element()) + " is not a transposition";
                }
            }
            if (!local_identity) return "permutation products differ";
            return std::nullopt;
        }
        case Justification::Special12: {
            const bool forward = before.size() == 3 && after.size() == 1;
            const bool backward = before.size() == 1 && after.size() == 3;
            if (!forward && !backward) return "special identity has shape t13 s t13 = s'";
            const AmalgamWord& triple = forward ? before : after;
            const AmalgamLetter& single = forward ? after[0] : before[0];
            const PolyMap t13 = coordinate_swap(1, 3);
            if (!(triple[0].element() == t13) || !(triple[2].element() == t13)) return "outer letters are not t13";
            if (!on_slot(triple[1].element(), 2) || !on_slot(single.element(), 2)) {
                return "inner letters are not on slot 2";
            }
            if (!local_identity) return "special identity does not hold";
            return std::nullopt;
        }
        case Justification::TauInvolution: {
            const AmalgamWord& pair = before.empty() ? after : before;
            const AmalgamWord& none = before.empty() ? before : after;
            if (pair.size() != 2 || !none.empty()) return "involution rewrites t t to nothing";
            if (!is_transposition(pair[0]) || !(pair[0].element() == pair[1].element())) {
                return "involution needs a repeated transposition";
            }
            return std::nullopt;
        }
        case Justification::Assign15: {
            if (!s.cited) return "missing cited letter";
            if (!same_elements(before, after)) return "assignment step must not change the span";
            if (!same_elements(before, psi_letter_conjugated(*s.cited))) {
                return "span is not the image of " + format_sigma_letter(*s.cited);
            }
            return std::nullopt;
        }
    }
    return "unknown justification";
}

}  // namespace

std::vector<ChainTemplate> builtin_proof_chains() {
    using RK = RelationKind;
    return {
        {"R1 i=1", RK::R1, sampler(shape_r1(1), {1}, {1}), chain_r1_1},
        {"R2 i=1 j=3", RK::R2, sampler(shape_r2(1, 3), {1, 3}, {3}), chain_r2_13},
        {"R2 i=3 j=1", RK::R2, sampler(shape_r2(3, 1), {1, 3}, {1}), chain_r2_31},
        {"R2 i=1 j=2", RK::R2, sampler(shape_r2(1, 2), {1, 2}, {2}), chain_r2_12},
        {"R2 i=2 j=1", RK::R2, sampler(shape_r2(2, 1), {1, 2}, {1}), chain_r2_21},
        {"R3 i=3 {k,l}={1,3}", RK::R3, sampler(shape_r3(1, 3, 3), {3}, {}), chain_r3_3_13},
        {"R3 i=2 {k,l}={1,2}", RK::R3, sampler(shape_r3(1, 2, 2), {2}, {}), chain_r3_2_12},
        {"R3 i=2 {k,l}={1,3}", RK::R3, sampler(shape_r3(1, 3, 2), {2}, {}), chain_r3_2_13},
        {"R3 i=1 {k,l}={2,3}", RK::R3, sampler(shape_r3(2, 3, 1), {1}, {}), chain_r3_1_23},
        {"R3 i=1 {k,l}={1,3}", RK::R3, sampler(shape_r3(1, 3, 1), {1}, {}), chain_r3_1_13},
        {"R3 i=1 {k,l}={1,2}", RK::R3, sampler(shape_r3(1, 2, 1), {1}, {}), chain_r3_1_12},
    };
}

std::vector<ChainTemplate> in_factor_chains() {
    using RK = RelationKind;
    return {
        {"R1 i=2", RK::R1, sampler(shape_r1(2), {2}, {2}), chain_r1_in_factor},
        {"R1 i=3", RK::R1, sampler(shape_r1(3), {3}, {3}), chain_r1_in_factor},
        {"R2 i=2 j=3", RK::R2, sampler(shape_r2(2, 3), {2, 3}, {3}), chain_r2_in_factor},
        {"R2 i=3 j=2", RK::R2, sampler(shape_r2(3, 2), {2, 3}, {2}), chain_r2_in_factor},
        {"R3 i=2 {k,l}={2,3}", RK::R3, sampler(shape_r3(2, 3, 2), {2}, {}), chain_r3_in_factor},
        {"R3 i=3 {k,l}={2,3}", RK::R3, sampler(shape_r3(2, 3, 3), {3}, {}), chain_r3_in_factor},
        {"R3 i=3 {k,l}={1,2}", RK::R3, sampler(shape_r3(1, 2, 3), {3}, {}), chain_r3_in_factor},
    };
}

ReplayResult replay(const ProofChain& chain) {
    if (chain.steps.empty()) return {false, -1, "chain has no steps"};
    const AmalgamWord& start = chain.steps.front().before;
    const AmalgamWord& end = chain.steps.back().after;
    if (!equal_by_reduction(start, psi(chain.relation.lhs))) {
        return {false, -1, "first line does not reduce against the image of the left side"};
    }
    if (!equal_by_reduction(end, psi(chain.relation.rhs))) {
        return {false, -1, "last line does not reduce against the image of the right side"};
    }
    PolyMap previous = phi_map(start);
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
        const ProofStep& s = chain.steps[k];
        auto fail = [&](std::string reason) { return ReplayResult{false, int(k), std::move(reason)}; };
        if (k > 0 && !(s.before == chain.steps[k - 1].after)) return fail("line does not continue the previous step");
        if (s.span_begin + s.span_before > s.before.size() || s.span_begin + s.span_after > s.after.size() ||
            s.before.size() - s.span_before != s.after.size() - s.span_after) {
            return fail("span out of range");
        }
        for (std::size_t p = 0; p < s.span_begin; ++p) {
            if (!(s.before[p] == s.after[p])) return fail("letter before the span changed");
        }
        const std::size_t tail = s.before.size() - s.span_begin - s.span_before;
        for (std::size_t p = 0; p < tail; ++p) {
            if (!(s.before[s.before.size() - 1 - p] == s.after[s.after.size() - 1 - p])) {
                return fail("letter after the span changed");
            }
        }
        PolyMap current = phi_map(s.after);
        if (!(current == previous)) return fail("image in TA_3 changed");
        if (auto bad = check_justification(s)) return fail(std::string(to_string(s.justification)) + ": " + *bad);
        previous = std::move(current);
    }
    return {true, -1, ""};
}

std::optional<ProofChain> corrupt_factor_tag(ProofChain chain) {
    for (auto& s : chain.steps) {
        if (!s.factor) continue;
        const AmalgamWord span(s.before.begin() + long(s.span_begin),
                               s.before.begin() + long(s.span_begin + s.span_before));
        for (FactorId wrong : {FactorId::H1T, FactorId::H2, FactorId::H3}) {
            if (wrong == *s.factor) continue;
            const bool escapes = std::any_of(span.begin(), span.end(),
                                             [&](const AmalgamLetter& l) { return !in_factor(l.element(), wrong); });
            if (escapes) {
                s.factor = wrong;
                return chain;
            }
        }
    }
    return std::nullopt;
}

}  // namespace tame
