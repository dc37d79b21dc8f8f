#include "tame/polynomial.hpp"

#include <cctype>

namespace tame {

namespace {

class Scanner {
public:
    explicit Scanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_space();
        return pos_ >= text_.size();
    }
    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::string digits() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return std::string(text_.substr(start, pos_ - start));
    }
    std::size_t position() const { return pos_; }
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

Scalar unsigned_rational(Scanner& s) {
    std::string num = s.digits();
    std::string den = "1";
    if (s.accept('/')) den = s.digits();
    Scalar q{mpz_class(num), mpz_class(den)};
    if (sgn(q.get_den()) == 0) s.fail("zero denominator");
    q.canonicalize();
    return q;
}

// Parses `Xk` or `Xk^e`, returning the 1-based index and exponent.
std::pair<int, std::uint32_t> variable_power(Scanner& s, int n) {
    const std::size_t at = s.position();
    if (!s.accept('X')) s.fail("expected a variable X1..X" + std::to_string(n));
    const std::string idx = s.digits();
    const long index = idx.size() > 2 ? 99 : std::stol(idx);
    if (index < 1 || index > n) {
        throw ParseError("unknown variable X" + idx + " (ambient has " + std::to_string(n) + ")", at);
    }
    std::uint32_t e = 1;
    if (s.accept('^')) {
        const std::string digits = s.digits();
        if (digits.size() > 6) s.fail("exponent too large");
        e = std::uint32_t(std::stoul(digits));
        if (e == 0) s.fail("exponent must be at least 1");
    }
    return {int(index), e};
}

Term parse_term(Scanner& s, int n) {
    Term t{Monomial(), Scalar(1)};
    bool need_var = true;
    if (std::isdigit(static_cast<unsigned char>(s.peek()))) {
        t.coefficient = unsigned_rational(s);
        if (!s.accept('*')) return t;
    }
    while (need_var) {
        auto [index, e] = variable_power(s, n);
        t.monomial[index - 1] += e;
        need_var = s.accept('*');
    }
    return t;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    Scanner s(text);
    bool negative = false;
    if (s.accept('-')) {
        negative = true;
    } else {
        s.accept('+');
    }
    Scalar q = unsigned_rational(s);
    if (!s.at_end()) s.fail("trailing characters after scalar");
    return negative ? Scalar(-q) : q;
}

std::string format_scalar(const Scalar& c) { return c.get_str(); }

Polynomial parse_poly(std::string_view text, int n) {
    Scanner s(text);
    if (s.at_end()) s.fail("empty polynomial");
    std::vector<Term> terms;
    bool first = true;
    while (!s.at_end()) {
        bool negative = false;
        if (s.accept('-')) {
            negative = true;
        } else if (!s.accept('+') && !first) {
            s.fail("expected '+' or '-'");
        }
        Term t = parse_term(s, n);
        if (negative) t.coefficient = -t.coefficient;
        terms.push_back(std::move(t));
        first = false;
    }
    return Polynomial(n, std::move(terms));
}

std::string format_poly(const Polynomial& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        const Scalar magnitude = abs(c);
        std::string vars;
        for (int v = 0; v < kMaxVars; ++v) {
            if (m[v] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "X" + std::to_string(v + 1);
            if (m[v] > 1) vars += "^" + std::to_string(m[v]);
        }
        if (vars.empty()) {
            out += format_scalar(magnitude);
        } else if (magnitude == 1) {
            out += vars;
        } else {
            out += format_scalar(magnitude) + "*" + vars;
        }
    }
    return out;
}

}  // namespace tame
