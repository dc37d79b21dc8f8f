#include "tame/sigma_word.hpp"

#include <algorithm>
#include <cctype>

namespace tame {

namespace {

void check_index(int i, const char* what) {
    if (i < 1 || i > 3) throw Error(std::string(what) + " index out of range: " + std::to_string(i));
}

std::vector<int> other_variables(std::initializer_list<int> excluded) {
    std::vector<int> out;
    for (int v = 1; v <= 3; ++v) {
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) out.push_back(v);
    }
    return out;
}

}  // namespace

SigmaLetter SigmaLetter::make(int i, const Scalar& alpha, const Polynomial& f, int exponent) {
    check_index(i, "sigma");
    if (sgn(alpha) == 0) throw Error("sigma letter needs nonzero alpha");
    if (f.ambient() != 3) throw AmbientMismatch("sigma letter polynomial must have 3 variables");
    if (f.uses_variable(i)) throw Error("sigma letter polynomial uses X" + std::to_string(i));
    if (exponent != 1 && exponent != -1) throw Error("sigma letter exponent must be +1 or -1");
    return SigmaLetter{i, alpha, f, exponent};
}

SigmaLetter SigmaLetter::inverse() const { return SigmaLetter{i, alpha, f, -exponent}; }

PolyMap SigmaLetter::map() const {
    if (exponent == 1) return sigma(i, alpha, f);
    const Scalar inv = 1 / alpha;
    return sigma(i, inv, -inv * f);
}

SigmaWord SigmaWord::inverse() const {
    std::vector<SigmaLetter> out;
    out.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) out.push_back(it->inverse());
    return SigmaWord(std::move(out));
}

SigmaWord SigmaWord::freely_reduced() const {
    std::vector<SigmaLetter> out;
    for (const auto& l : letters_) {
        if (!out.empty() && out.back().same_generator(l) && out.back().exponent == -l.exponent) {
            out.pop_back();
        } else {
            out.push_back(l);
        }
    }
    return SigmaWord(std::move(out));
}

SigmaWord operator*(const SigmaWord& u, const SigmaWord& v) {
    std::vector<SigmaLetter> out = u.letters_;
    out.insert(out.end(), v.letters_.begin(), v.letters_.end());
    return SigmaWord(std::move(out));
}

PolyMap eval(const SigmaWord& w) {
    std::vector<PolyMap> maps;
    maps.reserve(w.size());
    for (const auto& l : w.letters()) maps.push_back(l.map());
    return compose_all(maps, 3);
}

SigmaWord tau_word(int k, int l) {
    check_index(k, "tau");
    check_index(l, "tau");
    if (k == l) throw Error("tau needs distinct indices");
    const Polynomial xk = Polynomial::variable(3, k);
    const Polynomial xl = Polynomial::variable(3, l);
    return SigmaWord({SigmaLetter::make(l, 1, xk), SigmaLetter::make(k, 1, -xl),
                      SigmaLetter::make(l, -1, xk)});
}

const char* to_string(RelationKind kind) {
    switch (kind) {
        case RelationKind::R1: return "R1";
        case RelationKind::R2: return "R2";
        case RelationKind::R3: return "R3";
    }
    return "?";
}

RelationInstance make_relation(RelationKind kind, const RelationParams& p) {
    RelationInstance r{kind, p, {}, {}};
    switch (kind) {
        case RelationKind::R1: {
            auto a = SigmaLetter::make(p.i, p.alpha, p.f);
            auto b = SigmaLetter::make(p.i, p.beta, p.g);
            r.lhs = SigmaWord({a, b});
            r.rhs = SigmaWord({SigmaLetter::make(p.i, p.alpha * p.beta, p.f + p.alpha * p.g)});
            break;
        }
        case RelationKind::R2: {
            check_index(p.i, "R2");
            check_index(p.j, "R2");
            if (p.i == p.j) throw Error("R2 needs i != j");
            if (p.f.uses_variable(p.j)) throw Error("R2: f must not use X" + std::to_string(p.j));
            auto s = SigmaLetter::make(p.i, p.alpha, p.f);
            auto t = SigmaLetter::make(p.j, p.beta, p.g);
            r.lhs = SigmaWord({s.inverse(), t, s});
            r.rhs = SigmaWord({SigmaLetter::make(p.j, p.beta, apply_to_poly(p.g, sigma(p.i, p.alpha, p.f)))});
            break;
        }
        case RelationKind::R3: {
            check_index(p.k, "R3");
            check_index(p.l, "R3");
            if (p.k == p.l) throw Error("R3 needs k != l");
            auto s = SigmaLetter::make(p.i, p.alpha, p.f);
            const int j = p.i == p.k ? p.l : p.i == p.l ? p.k : p.i;
            r.params.j = j;
            const SigmaWord t = tau_word(p.k, p.l);
            r.lhs = t * SigmaWord({s}) * t;
            r.rhs = SigmaWord({SigmaLetter::make(j, p.alpha, apply_to_poly(p.f, coordinate_swap(p.k, p.l)))});
            break;
        }
    }
    return r;
}

bool check_relation(const RelationInstance& r) { return eval(r.lhs) == eval(r.rhs); }

int relation_case_count(RelationKind kind) {
    switch (kind) {
        case RelationKind::R1: return 3;
        case RelationKind::R2: return 6;
        case RelationKind::R3: return 18;
    }
    return 1;
}

namespace {

constexpr int kOrderedPairs[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};

}  // namespace

std::string relation_case_label(RelationKind kind, int c) {
    c %= relation_case_count(kind);
    switch (kind) {
        case RelationKind::R1: return "R1 i=" + std::to_string(c + 1);
        case RelationKind::R2:
            return "R2 i=" + std::to_string(kOrderedPairs[c][0]) + " j=" + std::to_string(kOrderedPairs[c][1]);
        case RelationKind::R3:
            return "R3 k=" + std::to_string(kOrderedPairs[c / 3][0]) + " l=" +
                   std::to_string(kOrderedPairs[c / 3][1]) + " i=" + std::to_string(c % 3 + 1);
    }
    return "?";
}

RelationInstance random_relation(Rng& rng, RelationKind kind, int case_index, int max_degree,
                                 long coeff_bound) {
    const int c = case_index % relation_case_count(kind);
    RelationParams p;
    p.alpha = random_nonzero_scalar(rng, coeff_bound);
    p.beta = random_nonzero_scalar(rng, coeff_bound);
    switch (kind) {
        case RelationKind::R1: {
            p.i = c + 1;
            const auto vars = other_variables({p.i});
            p.f = random_poly(rng, 3, vars, max_degree, coeff_bound);
            p.g = random_poly(rng, 3, vars, max_degree, coeff_bound);
            break;
        }
        case RelationKind::R2: {
            p.i = kOrderedPairs[c][0];
            p.j = kOrderedPairs[c][1];
            p.f = random_poly(rng, 3, other_variables({p.i, p.j}), max_degree, coeff_bound);
            p.g = random_poly(rng, 3, other_variables({p.j}), max_degree, coeff_bound);
            break;
        }
        case RelationKind::R3: {
            p.k = kOrderedPairs[c / 3][0];
            p.l = kOrderedPairs[c / 3][1];
            p.i = c % 3 + 1;
            p.f = random_poly(rng, 3, other_variables({p.i}), max_degree, coeff_bound);
            break;
        }
    }
    return make_relation(kind, p);
}

RelationInstance random_relation(std::uint64_t seed, RelationKind kind, int max_degree,
                                 long coeff_bound) {
    Rng rng(seed);
    const int c = int(rng.uniform(0, relation_case_count(kind) - 1));
    return random_relation(rng, kind, c, max_degree, coeff_bound);
}

SigmaWord random_word(std::uint64_t seed, int length, int max_degree, long coeff_bound,
                      long degree_budget) {
    if (length < 0 || max_degree < 0) throw Error("random word bounds must be non-negative");
    Rng rng(seed);
    std::vector<SigmaLetter> letters;
    long product = 1;
    for (int n = 0; n < length; ++n) {
        const int i = int(rng.uniform(1, 3));
        int cap = max_degree;
        if (product * std::max(cap, 1) > degree_budget) cap = std::min(cap, 1);
        const Polynomial f = random_poly(rng, 3, other_variables({i}), cap, coeff_bound);
        product *= std::max<long>(1, f.is_zero() ? 0 : f.total_degree().value());
        const int exponent = rng.coin() ? 1 : -1;
        letters.push_back(SigmaLetter::make(i, random_nonzero_scalar(rng, coeff_bound), f, exponent));
    }
    return SigmaWord(std::move(letters));
}

namespace {

class WordScanner {
public:
    explicit WordScanner(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool done() {
        skip_space();
        return pos_ >= text_.size();
    }
    std::size_t pos() const { return pos_; }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void expect(char c) {
        skip_space();
        if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
        ++pos_;
    }
    // Text up to (not including) the next occurrence of any of `stops`.
    std::pair<std::string_view, std::size_t> until(std::string_view stops) {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && stops.find(text_[pos_]) == std::string_view::npos) ++pos_;
        if (pos_ >= text_.size()) throw ParseError("unterminated letter", start);
        return {text_.substr(start, pos_ - start), start};
    }
    bool consume(std::string_view s) {
        skip_space();
        if (text_.substr(pos_, s.size()) == s) {
            pos_ += s.size();
            return true;
        }
        return false;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

int parse_index(std::string_view s, std::size_t at) {
    std::string t;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) t += c;
    }
    if (t.size() != 1 || t[0] < '1' || t[0] > '3') throw ParseError("expected index 1..3", at);
    return t[0] - '0';
}

template <class F>
auto reposition(F&& fn, std::size_t offset) {
    try {
        return fn();
    } catch (const ParseError& e) {
        throw ParseError(e.message(), offset + e.position());
    }
}

}  // namespace

SigmaWord parse_sigma_word(std::string_view text) {
    WordScanner sc(text);
    SigmaWord word;
    while (!sc.done()) {
        const std::size_t start = sc.pos();
        const char head = sc.peek();
        if (head != 's' && head != 't') throw ParseError("expected letter 's(...)' or 't(...)'", start);
        sc.consume(std::string_view(&head, 1));
        sc.expect('(');
        if (head == 's') {
            auto [is, ipos] = sc.until(",");
            const int i = parse_index(is, ipos);
            sc.expect(',');
            auto [as, apos] = sc.until(",");
            const Scalar alpha = reposition([&] { return parse_scalar(as); }, apos);
            sc.expect(',');
            auto [fs, fpos] = sc.until(")");
            const Polynomial f = reposition([&] { return parse_poly(fs, 3); }, fpos);
            sc.expect(')');
            const int exponent = sc.consume("^-1") ? -1 : 1;
            try {
                word = word * SigmaWord({SigmaLetter::make(i, alpha, f, exponent)});
            } catch (const ParseError&) {
                throw;
            } catch (const Error& e) {
                throw ParseError(e.what(), start);
            }
        } else {
            auto [ks, kpos] = sc.until(",");
            const int k = parse_index(ks, kpos);
            sc.expect(',');
            auto [ls, lpos] = sc.until(")");
            const int l = parse_index(ls, lpos);
            sc.expect(')');
            if (k == l) throw ParseError("t(k,l) needs distinct indices", start);
            SigmaWord t = tau_word(k, l);
            if (sc.consume("^-1")) t = t.inverse();
            word = word * t;
        }
    }
    return word;
}

std::string format_sigma_letter(const SigmaLetter& l) {
    std::string out = "s(" + std::to_string(l.i) + "," + format_scalar(l.alpha) + "," + format_poly(l.f) + ")";
    if (l.exponent == -1) out += "^-1";
    return out;
}

std::string format_sigma_word(const SigmaWord& w) {
    std::string out;
    for (const auto& l : w.letters()) {
        if (!out.empty()) out += ' ';
        out += format_sigma_letter(l);
    }
    return out;
}

}  // namespace tame
