#include "tame/polynomial.hpp"

#include <algorithm>
#include <unordered_map>

namespace tame {

namespace {

using Accumulator = std::unordered_map<std::uint64_t, Scalar>;

Monomial from_key(std::uint64_t key) {
    constexpr std::uint64_t mask = (std::uint64_t(1) << 21) - 1;
    return Monomial({std::uint32_t(key & mask), std::uint32_t((key >> 21) & mask),
                     std::uint32_t((key >> 42) & mask)});
}

bool descending(const Term& a, const Term& b) { return grlex_less(b.monomial, a.monomial); }

std::vector<Term> drain(Accumulator& acc) {
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto& [key, c] : acc) {
        if (sgn(c) != 0) out.push_back({from_key(key), std::move(c)});
    }
    std::sort(out.begin(), out.end(), descending);
    return out;
}

void check_index(int n, int index) {
    if (index < 1 || index > n) {
        throw Error("variable index " + std::to_string(index) + " out of range 1.." +
                    std::to_string(n));
    }
}

}  // namespace

Monomial Monomial::variable(int index, std::uint32_t power) {
    check_index(kMaxVars, index);
    Monomial m;
    m.e_[index - 1] = power;
    return m;
}

Polynomial::Polynomial(int n) : n_(n) {
    if (n < 1 || n > kMaxVars) throw Error("ambient variable count must be in 1..3");
}

Polynomial::Polynomial(int n, const Scalar& constant) : Polynomial(n) {
    if (sgn(constant) != 0) terms_.push_back({Monomial(), constant});
}

Polynomial::Polynomial(int n, std::vector<Term> terms) : Polynomial(n) {
    Accumulator acc;
    acc.reserve(terms.size());
    for (auto& t : terms) {
        for (int slot = n; slot < kMaxVars; ++slot) {
            if (t.monomial[slot] != 0) throw Error("monomial uses a variable outside the ambient ring");
        }
        acc[t.monomial.key()] += t.coefficient;
    }
    terms_ = drain(acc);
}

Polynomial Polynomial::variable(int n, int index) {
    check_index(n, index);
    return monomial(n, Monomial::variable(index));
}

Polynomial Polynomial::monomial(int n, const Monomial& m, const Scalar& c) {
    return Polynomial(n, std::vector<Term>{{m, c}});
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Scalar Polynomial::constant_term() const {
    if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
    return 0;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), Term{m, 0}, descending);
    if (it != terms_.end() && it->monomial == m) return it->coefficient;
    return 0;
}

Degree Polynomial::total_degree() const {
    if (terms_.empty()) return Degree::minus_infinity();
    return Degree(int(terms_.front().monomial.degree()));
}

Degree Polynomial::degree_in(std::span<const int> variables) const {
    if (terms_.empty()) return Degree::minus_infinity();
    int best = 0;
    for (const auto& t : terms_) {
        int d = 0;
        for (int v : variables) d += int(t.monomial[v - 1]);
        best = std::max(best, d);
    }
    return Degree(best);
}

Polynomial Polynomial::leading_form(std::span<const int> variables) const {
    const Degree top = degree_in(variables);
    if (top.is_minus_infinity()) return Polynomial(n_);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        int d = 0;
        for (int v : variables) d += int(t.monomial[v - 1]);
        if (d == top.value()) out.push_back(t);
    }
    Polynomial p(n_);
    p.terms_ = std::move(out);
    return p;
}

bool Polynomial::uses_variable(int index) const {
    check_index(n_, index);
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial[index - 1] > 0; });
}

void Polynomial::check_same_ambient(const Polynomial& other) const {
    if (n_ != other.n_) {
        throw AmbientMismatch("ambient mismatch: " + std::to_string(n_) + " vs " +
                              std::to_string(other.n_) + " variables");
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coefficient = -t.coefficient;
    return p;
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
    f.check_same_ambient(g);
    Polynomial out(f.n_);
    out.terms_.reserve(f.terms_.size() + g.terms_.size());
    auto a = f.terms_.begin(), b = g.terms_.begin();
    while (a != f.terms_.end() && b != g.terms_.end()) {
        if (a->monomial == b->monomial) {
            Scalar c = a->coefficient + b->coefficient;
            if (sgn(c) != 0) out.terms_.push_back({a->monomial, std::move(c)});
            ++a;
            ++b;
        } else if (grlex_less(b->monomial, a->monomial)) {
            out.terms_.push_back(*a++);
        } else {
            out.terms_.push_back(*b++);
        }
    }
    out.terms_.insert(out.terms_.end(), a, f.terms_.end());
    out.terms_.insert(out.terms_.end(), b, g.terms_.end());
    return out;
}

Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + (-g); }

Polynomial operator*(const Scalar& c, const Polynomial& f) {
    if (sgn(c) == 0) return Polynomial(f.n_);
    Polynomial p = f;
    for (auto& t : p.terms_) t.coefficient *= c;
    return p;
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
    f.check_same_ambient(g);
    if (f.is_zero() || g.is_zero()) return Polynomial(f.n_);
    const Polynomial& big = f.size() >= g.size() ? f : g;
    const Polynomial& small = f.size() >= g.size() ? g : f;
    if (small.size() == 1) {
        // Multiplying by a monomial preserves the term order.
        const Term& s = small.terms_.front();
        Polynomial p(f.n_);
        p.terms_.reserve(big.size());
        for (const auto& t : big.terms_) {
            p.terms_.push_back({t.monomial * s.monomial, t.coefficient * s.coefficient});
        }
        return p;
    }
    Accumulator acc;
    acc.reserve(big.size() * small.size());
    Scalar product;
    for (const auto& s : small.terms_) {
        for (const auto& t : big.terms_) {
            mpq_mul(product.get_mpq_t(), s.coefficient.get_mpq_t(), t.coefficient.get_mpq_t());
            acc[(s.monomial * t.monomial).key()] += product;
        }
    }
    Polynomial p(f.n_);
    p.terms_ = drain(acc);
    return p;
}

Polynomial Polynomial::pow(unsigned exponent) const {
    Polynomial result(n_, Scalar(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::derivative(int index) const {
    check_index(n_, index);
    std::vector<Term> out;
    for (const auto& t : terms_) {
        const auto e = t.monomial[index - 1];
        if (e == 0) continue;
        Monomial m = t.monomial;
        m[index - 1] = e - 1;
        out.push_back({m, t.coefficient * e});
    }
    return Polynomial(n_, std::move(out));
}

namespace {

struct SubstitutionContext {
    int target_n;
    std::span<const Polynomial> images;
    std::vector<bool> simple;                     // image is a single term or zero
    std::vector<std::vector<Polynomial>> powers;  // powers[v][e] for non-simple images

    const Polynomial& power(int v, std::uint32_t e) {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial(target_n, Scalar(1)));
        while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
        return cache[e];
    }
};

// Each term's factor from simple images is a scaled monomial.
Polynomial substitute_simple(const std::vector<Term>& terms, SubstitutionContext& ctx,
                             const std::vector<int>& vars) {
    Accumulator acc;
    acc.reserve(terms.size());
    for (const auto& t : terms) {
        Scalar c = t.coefficient;
        Monomial m;
        bool vanished = false;
        for (int v : vars) {
            const auto e = t.monomial[v];
            if (e == 0) continue;
            const auto& img = ctx.images[v];
            if (img.is_zero()) {
                vanished = true;
                break;
            }
            const Term& it = img.terms().front();
            Scalar ce;
            mpz_pow_ui(mpq_numref(ce.get_mpq_t()), mpq_numref(it.coefficient.get_mpq_t()), e);
            mpz_pow_ui(mpq_denref(ce.get_mpq_t()), mpq_denref(it.coefficient.get_mpq_t()), e);
            c *= ce;
            for (int s = 0; s < kMaxVars; ++s) m[s] += it.monomial[s] * e;
        }
        if (!vanished) acc[m.key()] += c;
    }
    return Polynomial(ctx.target_n, [&] {
        std::vector<Term> out;
        out.reserve(acc.size());
        for (auto& [k, c] : acc) out.push_back({from_key(k), std::move(c)});
        return out;
    }());
}

Polynomial substitute_rec(const std::vector<Term>& terms, SubstitutionContext& ctx,
                          std::vector<int> complex_vars, const std::vector<int>& simple_vars) {
    if (terms.empty()) return Polynomial(ctx.target_n);
    if (complex_vars.empty()) return substitute_simple(terms, ctx, simple_vars);
    const int v = complex_vars.back();
    complex_vars.pop_back();
    std::vector<std::vector<Term>> by_exponent;
    for (const auto& t : terms) {
        const auto e = t.monomial[v];
        if (by_exponent.size() <= e) by_exponent.resize(e + 1);
        Term stripped = t;
        stripped.monomial[v] = 0;
        by_exponent[e].push_back(std::move(stripped));
    }
    Polynomial result(ctx.target_n);
    for (std::uint32_t e = 0; e < by_exponent.size(); ++e) {
        if (by_exponent[e].empty()) continue;
        Polynomial inner = substitute_rec(by_exponent[e], ctx, complex_vars, simple_vars);
        result += e == 0 ? inner : inner * ctx.power(v, e);
    }
    return result;
}

}  // namespace

Polynomial Polynomial::substitute(std::span<const Polynomial> images) const {
    if (int(images.size()) != n_) {
        throw AmbientMismatch("substitution expects " + std::to_string(n_) + " images, got " +
                              std::to_string(images.size()));
    }
    if (images.empty()) return *this;
    const int target = images.front().ambient();
    for (const auto& img : images) {
        if (img.ambient() != target) throw AmbientMismatch("substitution images disagree on ambient");
    }
    SubstitutionContext ctx{target, images, {}, {}};
    ctx.powers.resize(images.size());
    std::vector<int> complex_vars, simple_vars;
    for (int v = 0; v < n_; ++v) {
        bool used = std::any_of(terms_.begin(), terms_.end(),
                                [&](const Term& t) { return t.monomial[v] > 0; });
        if (!used) continue;
        if (images[v].size() <= 1) {
            simple_vars.push_back(v);
        } else {
            complex_vars.push_back(v);
        }
    }
    return substitute_rec(terms_, ctx, complex_vars, simple_vars);
}

Polynomial Polynomial::with_ambient(int n) const {
    Polynomial p(n);
    for (int slot = n; slot < kMaxVars; ++slot) {
        for (const auto& t : terms_) {
            if (t.monomial[slot] != 0) throw AmbientMismatch("polynomial uses a variable beyond X" + std::to_string(n));
        }
    }
    p.terms_ = terms_;
    return p;
}

bool Polynomial::operator==(const Polynomial& other) const {
    if (n_ != other.n_ || terms_.size() != other.terms_.size()) return false;
    for (std::size_t k = 0; k < terms_.size(); ++k) {
        if (terms_[k].monomial != other.terms_[k].monomial ||
            terms_[k].coefficient != other.terms_[k].coefficient) {
            return false;
        }
    }
    return true;
}

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial mul(const Polynomial& f, const Polynomial& g) { return f * g; }
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images) {
    return f.substitute(images);
}
bool uses_variable(const Polynomial& f, int index) { return f.uses_variable(index); }
Degree total_degree(const Polynomial& f) { return f.total_degree(); }

std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& num, const Polynomial& den,
                                                    int var) {
    if (den.is_zero()) throw Error("division by the zero polynomial");
    const int n = num.ambient();
    for (const Polynomial* p : {&num, &den}) {
        for (int v = 1; v <= p->ambient(); ++v) {
            if (v != var && p->uses_variable(v)) throw Error("univariate division on a multivariate polynomial");
        }
    }
    const int var_list[] = {var};
    const int dd = den.degree_in(var_list).value();
    const Scalar lead = den.terms().front().coefficient;
    Polynomial quotient(n), remainder = num;
    while (!remainder.is_zero() && remainder.degree_in(var_list).value() >= dd) {
        const Term& top = remainder.terms().front();
        const auto shift = top.monomial[var - 1] - std::uint32_t(dd);
        Polynomial q = Polynomial::monomial(n, Monomial::variable(var, shift), top.coefficient / lead);
        quotient += q;
        remainder -= q * den;
    }
    return {quotient, remainder};
}

std::optional<Polynomial> divide_univariate(const Polynomial& num, const Polynomial& den, int var) {
    auto [q, r] = divmod_univariate(num, den, var);
    if (!r.is_zero()) return std::nullopt;
    return q;
}

}  // namespace tame
