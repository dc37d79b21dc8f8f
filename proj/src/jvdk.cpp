#include "tame/jvdk.hpp"

namespace tame {

namespace {

constexpr int kX2X3[] = {2, 3};
constexpr int kPlane[] = {1, 2};

Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

bool degree_at_most_one(const Polynomial& f) { return f.is_zero() || f.total_degree() <= Degree(1); }

// Coefficient of X2^e2 X3^e3 in f, as an element of K[X1].
Polynomial coefficient_in_x1(const Polynomial& f, std::uint32_t e2, std::uint32_t e3) {
    std::vector<Term> out;
    for (const auto& t : f.terms()) {
        if (t.monomial[1] == e2 && t.monomial[2] == e3) {
            out.push_back({Monomial::variable(1, t.monomial[0]), t.coefficient});
        }
    }
    return Polynomial(f.ambient(), std::move(out));
}

Degree x1_degree(const Polynomial& f) {
    static constexpr int kX1[] = {1};
    return f.degree_in(kX1);
}

}  // namespace

bool is_plane_affine(const PolyMap& phi) {
    if (phi.ambient() != 2) return false;
    for (const auto& f : phi.components()) {
        if (!degree_at_most_one(f)) return false;
    }
    const Monomial m1 = Monomial::variable(1), m2 = Monomial::variable(2);
    const auto& f = phi.component(1);
    const auto& g = phi.component(2);
    return sgn(f.coefficient(m1) * g.coefficient(m2) - f.coefficient(m2) * g.coefficient(m1)) != 0;
}

bool is_plane_triangular(const PolyMap& phi) {
    if (phi.ambient() != 2) return false;
    const auto& f = phi.component(1);
    const auto& g = phi.component(2);
    if (!degree_at_most_one(f) || f.uses_variable(2) || sgn(f.coefficient(Monomial::variable(1))) == 0) return false;
    for (const auto& t : g.terms()) {
        if (t.monomial[1] > 0 && !(t.monomial == Monomial::variable(2))) return false;
    }
    return sgn(g.coefficient(Monomial::variable(2))) != 0;
}

std::variant<PlaneFactorization, NotAutomorphism> factor_ga2(const PolyMap& phi) {
    if (phi.ambient() != 2) throw AmbientMismatch("factor_ga2 needs a plane map");
    PlaneFactorization out;
    std::vector<PlaneLetter> raw;
    const PolyMap swap({x(2, 2), x(2, 1)});
    Polynomial p = phi.component(1), q = phi.component(2);

    while (true) {
        if (p.is_zero() || q.is_zero()) return NotAutomorphism{"zero component"};
        if (p.is_constant() || q.is_constant()) return NotAutomorphism{"constant component"};
        const int d1 = p.total_degree().value(), d2 = q.total_degree().value();
        if (d1 <= 1 && d2 <= 1) break;
        out.degree_trace.push_back(d1 + d2);
        if (d1 >= d2) {
            raw.push_back({PlaneKind::Affine, swap});
            std::swap(p, q);
        }
        const int lo = std::min(d1, d2), hi = std::max(d1, d2);
        if (hi % lo != 0) return NotAutomorphism{"degrees " + std::to_string(lo) + " and " + std::to_string(hi) + " are not divisible"};
        const unsigned k = unsigned(hi / lo);
        const Polynomial lead_p = p.leading_form(kPlane);
        const Polynomial lead_q = q.leading_form(kPlane);
        const Polynomial power = lead_p.pow(k);
        const Scalar c = lead_q.terms().front().coefficient / power.terms().front().coefficient;
        if (!(lead_q == c * power)) return NotAutomorphism{"leading forms are not proportional to a power"};
        // (X1, X2 - c X1^k) on the left subtracts c p^k from the second slot.
        const Polynomial shift = c * x(2, 1).pow(k);
        raw.push_back({PlaneKind::Triangular, PolyMap({x(2, 1), x(2, 2) + shift})});
        q = q - c * p.pow(k);
    }
    const PolyMap last({p, q});
    if (!is_plane_affine(last)) return NotAutomorphism{"singular linear part"};
    raw.push_back({PlaneKind::Affine, last});

    for (auto& letter : raw) {
        if (!out.letters.empty() && out.letters.back().kind == letter.kind) {
            out.letters.back().element = compose(out.letters.back().element, letter.element);
        } else {
            out.letters.push_back(std::move(letter));
        }
        if (out.letters.back().element.is_identity()) out.letters.pop_back();
    }
    return out;
}

PolyMap recompose(const std::vector<PlaneLetter>& letters) {
    PolyMap acc = PolyMap::identity(2);
    for (const auto& l : letters) acc = compose(acc, l.element);
    return acc;
}

std::string format_plane_letter(const PlaneLetter& letter) {
    return std::string(letter.kind == PlaneKind::Affine ? "A: " : "T: ") + format_map(letter.element);
}

ElementaryStep ElementaryStep::make(int slot, const Scalar& alpha, const Polynomial& g) {
    if (slot != 2 && slot != 3) throw Error("ring step slot must be 2 or 3");
    if (sgn(alpha) == 0) throw Error("ring step needs a unit alpha");
    if (g.ambient() != 3) throw AmbientMismatch("ring step polynomial must have 3 variables");
    if (g.uses_variable(slot)) throw Error("ring step polynomial uses X" + std::to_string(slot));
    return ElementaryStep{slot, alpha, g};
}

ElementaryStep ElementaryStep::inverse() const {
    const Scalar inv = 1 / alpha;
    return ElementaryStep{slot, inv, -inv * g};
}

PolyMap ElementaryStep::map() const { return sigma(slot, alpha, g); }

PolyMap replay_steps(const std::vector<ElementaryStep>& steps) {
    std::vector<PolyMap> maps;
    maps.reserve(steps.size());
    for (const auto& s : steps) maps.push_back(s.map());
    return compose_all(maps, 3);
}

namespace {

class RingReducer {
public:
    RingReducer(Polynomial p, Polynomial q) : p_(std::move(p)), q_(std::move(q)) {}

    std::optional<std::string> run() {
        while (true) {
            if (p_.is_zero() || q_.is_zero()) return "zero component";
            const Degree dp = p_.degree_in(kX2X3), dq = q_.degree_in(kX2X3);
            if (dp == Degree(0) || dq == Degree(0)) return "component free of X2 and X3";
            if (dp <= Degree(1) && dq <= Degree(1)) break;
            bool reduced = false;
            if (dp >= dq) reduced = reduce(2);
            if (!reduced && dq >= dp) reduced = reduce(3);
            if (!reduced) return "leading form is not a K[X1]-multiple of a power of the other";
        }
        return linear_part();
    }

    std::vector<ElementaryStep> steps() const {
        // The left multipliers E1, ..., Em bring the map to the identity, so
        // the map is E1^-1 ... Em^-1.
        std::vector<ElementaryStep> out;
        for (const auto& e : multipliers_) out.push_back(e.inverse());
        return out;
    }

private:
    Polynomial& slot(int s) { return s == 2 ? p_ : q_; }

    // Left-multiplies by X_s -> alpha X_s + g, i.e. F_s <- alpha F_s + g(F).
    void apply(int s, const Scalar& alpha, const Polynomial& g) {
        std::vector<Polynomial> images = {x(3, 1), p_, q_};
        Polynomial image = g.substitute(images);
        slot(s) = alpha * slot(s) + image;
        multipliers_.push_back(ElementaryStep::make(s, alpha, g));
    }

    // Cancels the top (X2,X3)-form of slot s against a power of the other slot.
    bool reduce(int s) {
        const int other = s == 2 ? 3 : 2;
        const Polynomial& big = slot(s);
        const Polynomial& small = slot(other);
        const int hi = big.degree_in(kX2X3).value(), lo = small.degree_in(kX2X3).value();
        if (hi % lo != 0) return false;
        const unsigned k = unsigned(hi / lo);
        const Polynomial lead_big = big.leading_form(kX2X3);
        const Polynomial power = small.leading_form(kX2X3).pow(k);
        const Monomial& top = power.terms().front().monomial;
        const auto c = divide_univariate(coefficient_in_x1(lead_big, top[1], top[2]),
                                         coefficient_in_x1(power, top[1], top[2]), 1);
        if (!c || !(lead_big == *c * power)) return false;
        apply(s, 1, -(*c * x(3, other).pow(k)));
        return true;
    }

    std::optional<std::string> linear_part() {
        apply(2, 1, -coefficient_in_x1(p_, 0, 0));
        apply(3, 1, -coefficient_in_x1(q_, 0, 0));
        auto a = [&] { return coefficient_in_x1(p_, 1, 0); };
        auto d = [&] { return coefficient_in_x1(q_, 1, 0); };
        while (!a().is_zero() && !d().is_zero()) {
            if (x1_degree(a()) >= x1_degree(d())) {
                apply(2, 1, -(divmod_univariate(a(), d(), 1).first * x(3, 3)));
            } else {
                apply(3, 1, -(divmod_univariate(d(), a(), 1).first * x(3, 2)));
            }
        }
        if (a().is_zero()) {
            if (d().is_zero()) return "linear part is singular";
            apply(2, 1, x(3, 3));
            apply(3, 1, -x(3, 2));
        }
        const Polynomial av = a();
        const Polynomial ev = coefficient_in_x1(q_, 0, 1);
        if (!av.is_constant() || !ev.is_constant() || ev.is_zero()) return "linear part has non-unit determinant";
        const Scalar e = ev.constant_term();
        apply(2, 1, -((1 / e) * coefficient_in_x1(p_, 0, 1) * x(3, 3)));
        apply(2, 1 / av.constant_term(), Polynomial(3));
        apply(3, 1 / e, Polynomial(3));
        if (!(p_ == x(3, 2)) || !(q_ == x(3, 3))) return "linear reduction did not reach the identity";
        return std::nullopt;
    }

    Polynomial p_, q_;
    std::vector<ElementaryStep> multipliers_;
};

}  // namespace

std::variant<RingFactorization, RingUnknown> factor_ta2_ring(const Polynomial& f2, const Polynomial& f3) {
    if (f2.ambient() != 3 || f3.ambient() != 3) throw AmbientMismatch("ring factorization needs 3 variables");
    RingReducer reducer(f2, f3);
    if (auto failure = reducer.run()) return RingUnknown{*failure};
    RingFactorization out{reducer.steps()};
    std::vector<ElementaryStep> kept;
    for (auto& s : out.steps) {
        if (!(sgn(s.alpha - 1) == 0 && s.g.is_zero())) kept.push_back(std::move(s));
    }
    out.steps = std::move(kept);
    if (!(replay_steps(out.steps) == PolyMap({x(3, 1), f2, f3}))) {
        throw Error("ring factorization failed to replay");
    }
    return out;
}

}  // namespace tame
