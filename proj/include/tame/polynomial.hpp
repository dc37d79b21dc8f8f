#pragma once

// Sparse multivariate polynomials over Q in at most three variables.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace tame {

using Scalar = mpq_class;

inline constexpr int kMaxVars = 3;

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class AmbientMismatch : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at position " + std::to_string(position)), message_(what), position_(position) {}
    std::size_t position() const { return position_; }
    const std::string& message() const { return message_; }

private:
    std::string message_;
    std::size_t position_;
};

/// Total degree with a distinguished value for the zero polynomial.
class Degree {
public:
    static constexpr Degree minus_infinity() { return Degree(); }
    constexpr Degree(int value) : value_(value), finite_(true) {}

    constexpr bool is_minus_infinity() const { return !finite_; }
    constexpr int value() const {
        if (!finite_) throw Error("degree of the zero polynomial has no integer value");
        return value_;
    }

    constexpr bool operator==(const Degree& other) const {
        return finite_ == other.finite_ && (!finite_ || value_ == other.value_);
    }
    constexpr std::strong_ordering operator<=>(const Degree& other) const {
        if (!finite_ || !other.finite_) return finite_ <=> other.finite_;
        return value_ <=> other.value_;
    }
    /// Degree of a product.
    constexpr Degree operator+(const Degree& other) const {
        if (!finite_ || !other.finite_) return minus_infinity();
        return Degree(value_ + other.value_);
    }

    std::string to_string() const { return finite_ ? std::to_string(value_) : "-inf"; }

private:
    constexpr Degree() : value_(0), finite_(false) {}
    int value_;
    bool finite_;
};

/// Exponent vector. Slots beyond the ambient variable count stay zero.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::array<std::uint32_t, kMaxVars> exponents) : e_(exponents) {}

    static Monomial variable(int index, std::uint32_t power = 1);  // index is 1-based

    std::uint32_t operator[](int slot) const { return e_[slot]; }  // slot is 0-based
    std::uint32_t& operator[](int slot) { return e_[slot]; }
    const std::array<std::uint32_t, kMaxVars>& exponents() const { return e_; }

    std::uint32_t degree() const { return e_[0] + e_[1] + e_[2]; }
    bool is_one() const { return degree() == 0; }
    std::uint64_t key() const {
        return std::uint64_t(e_[0]) | (std::uint64_t(e_[1]) << 21) | (std::uint64_t(e_[2]) << 42);
    }

    Monomial operator*(const Monomial& other) const {
        return Monomial({e_[0] + other.e_[0], e_[1] + other.e_[1], e_[2] + other.e_[2]});
    }
    bool divides(const Monomial& other) const {
        return e_[0] <= other.e_[0] && e_[1] <= other.e_[1] && e_[2] <= other.e_[2];
    }

    bool operator==(const Monomial&) const = default;

    /// Graded lexicographic order, X1 > X2 > X3.
    friend bool grlex_less(const Monomial& a, const Monomial& b) {
        const auto da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        return a.e_ < b.e_;
    }

private:
    std::array<std::uint32_t, kMaxVars> e_{};
};

struct Term {
    Monomial monomial;
    Scalar coefficient;
};

/// Element of Q[X1,...,Xn], n in 1..3. Terms are kept sorted in descending
/// graded-lex order with no zero coefficients, so equality is structural.
class Polynomial {
public:
    Polynomial() : n_(kMaxVars) {}
    explicit Polynomial(int n);
    Polynomial(int n, const Scalar& constant);
    Polynomial(int n, std::vector<Term> terms);  // merges duplicates, drops zeros

    static Polynomial variable(int n, int index);  // X_index, 1-based
    static Polynomial monomial(int n, const Monomial& m, const Scalar& c = 1);

    int ambient() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;

    Degree total_degree() const;
    /// Degree counting only the variables whose 1-based indices are listed.
    Degree degree_in(std::span<const int> variables) const;
    /// Sum of the terms of top degree with respect to `variables`.
    Polynomial leading_form(std::span<const int> variables) const;
    bool uses_variable(int index) const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator-(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Polynomial& f, const Polynomial& g);
    friend Polynomial operator*(const Scalar& c, const Polynomial& f);
    Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
    Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }
    Polynomial& operator*=(const Polynomial& g) { return *this = *this * g; }

    Polynomial pow(unsigned exponent) const;
    Polynomial derivative(int index) const;

    /// Simultaneous substitution X_i -> images[i-1]; the result lives in the
    /// images' ambient ring.
    Polynomial substitute(std::span<const Polynomial> images) const;
    /// Re-embed in a ring with `n` variables; every used variable must fit.
    Polynomial with_ambient(int n) const;

    bool operator==(const Polynomial& other) const;

private:
    void check_same_ambient(const Polynomial& other) const;

    int n_;
    std::vector<Term> terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial mul(const Polynomial& f, const Polynomial& g);
Polynomial substitute(const Polynomial& f, std::span<const Polynomial> images);
bool uses_variable(const Polynomial& f, int index);
Degree total_degree(const Polynomial& f);

Polynomial parse_poly(std::string_view text, int n);
std::string format_poly(const Polynomial& f);
/// Parses "p" or "p/q" with an optional sign.
Scalar parse_scalar(std::string_view text);
std::string format_scalar(const Scalar& c);

/// Exact division in Q[X_var] when both operands only involve X_var.
std::optional<Polynomial> divide_univariate(const Polynomial& num, const Polynomial& den, int var);
/// Quotient and remainder of univariate long division in Q[X_var].
std::pair<Polynomial, Polynomial> divmod_univariate(const Polynomial& num, const Polynomial& den,
                                                    int var);

}  // namespace tame
