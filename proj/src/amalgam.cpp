#include "tame/amalgam.hpp"

#include "tame/sigma_word.hpp"

namespace tame {

namespace {

Polynomial x(int i) { return Polynomial::variable(3, i); }

bool affine_component(const Polynomial& f) { return f.is_zero() || f.total_degree() <= Degree(1); }

Scalar linear_coefficient(const Polynomial& f, int var) { return f.coefficient(Monomial::variable(var)); }

// Substitutes X1 -> a X1 + b in every step.
std::vector<ElementaryStep> shift_x1(const std::vector<ElementaryStep>& steps, const Scalar& a, const Scalar& b) {
    if (a == 1 && b == 0) return steps;
    const std::vector<Polynomial> images = {a * x(1) + Polynomial(3, b), x(2), x(3)};
    std::vector<ElementaryStep> out;
    out.reserve(steps.size());
    for (const auto& s : steps) out.push_back(ElementaryStep{s.slot, s.alpha, s.g.substitute(images)});
    return out;
}

// Merges adjacent steps on the same slot and drops identities.
std::vector<ElementaryStep> normalize(std::vector<ElementaryStep> steps) {
    std::vector<ElementaryStep> out;
    for (auto& s : steps) {
        if (!out.empty() && out.back().slot == s.slot) {
            auto& t = out.back();
            t.g = t.g + t.alpha * s.g;
            t.alpha *= s.alpha;
        } else {
            out.push_back(std::move(s));
        }
        if (out.back().alpha == 1 && out.back().g.is_zero()) out.pop_back();
    }
    return out;
}

PolyMap verified_or_inverted(const PolyMap& phi) {
    if (phi.verified()) return phi;
    auto inv = invert(phi);
    if (!inv) throw Error("letter element is not invertible");
    return inv->inverse();
}

}  // namespace

const char* to_string(FactorId id) {
    switch (id) {
        case FactorId::H1T: return "H1T";
        case FactorId::H2: return "H2";
        case FactorId::H3: return "H3";
    }
    return "?";
}

std::optional<FactorId> parse_factor(std::string_view text) {
    if (text == "H1T") return FactorId::H1T;
    if (text == "H2") return FactorId::H2;
    if (text == "H3") return FactorId::H3;
    return std::nullopt;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes: return "Yes";
        case Verdict::No: return "No";
        case Verdict::Unknown: return "Unknown";
    }
    return "?";
}

PolyMap TamenessCertificate::replay() const {
    return compose(sigma(1, a, Polynomial(3, b)), replay_steps(steps));
}

TamenessCertificate TamenessCertificate::then(const TamenessCertificate& other) const {
    TamenessCertificate out;
    out.a = a * other.a;
    out.b = a * other.b + b;
    out.steps = shift_x1(steps, other.a, other.b);
    out.steps.insert(out.steps.end(), other.steps.begin(), other.steps.end());
    out.steps = normalize(std::move(out.steps));
    return out;
}

TamenessCertificate TamenessCertificate::inverse() const {
    TamenessCertificate out;
    out.a = 1 / a;
    out.b = -b / a;
    std::vector<ElementaryStep> rev;
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) rev.push_back(it->inverse());
    out.steps = shift_x1(rev, out.a, out.b);
    return out;
}

std::string TamenessCertificate::text() const {
    std::vector<SigmaLetter> letters;
    if (!(a == 1 && b == 0)) letters.push_back(SigmaLetter::make(1, a, Polynomial(3, b)));
    for (const auto& s : steps) letters.push_back(SigmaLetter::make(s.slot, s.alpha, s.g));
    return format_sigma_word(SigmaWord(std::move(letters)));
}

TamenessCertificate TamenessCertificate::parse(std::string_view text) {
    TamenessCertificate out;
    const SigmaWord word = parse_sigma_word(text);
    for (const auto& l : word.letters()) {
        TamenessCertificate piece;
        if (l.i == 1) {
            if (!l.f.is_constant()) throw ParseError("certificate letters on slot 1 must be affine in X1", 0);
            piece.a = l.alpha;
            piece.b = l.f.constant_term();
        } else {
            piece.steps.push_back(ElementaryStep::make(l.i, l.alpha, l.f));
        }
        out = out.then(l.exponent == 1 ? piece : piece.inverse());
    }
    return out;
}

bool membership_H3(const PolyMap& phi) {
    if (phi.ambient() != 3) return false;
    Scalar m[3][3];
    for (int i = 1; i <= 3; ++i) {
        const auto& f = phi.component(i);
        if (!affine_component(f)) return false;
        for (int j = 1; j <= 3; ++j) m[i - 1][j - 1] = linear_coefficient(f, j);
    }
    const Scalar det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    return sgn(det) != 0;
}

bool membership_H2(const PolyMap& phi) {
    if (phi.ambient() != 3) return false;
    const auto& f1 = phi.component(1);
    const auto& f2 = phi.component(2);
    const auto& f3 = phi.component(3);
    if (!affine_component(f1) || !affine_component(f2) || f1.uses_variable(3) || f2.uses_variable(3)) return false;
    const Scalar det = linear_coefficient(f1, 1) * linear_coefficient(f2, 2) -
                       linear_coefficient(f1, 2) * linear_coefficient(f2, 1);
    if (sgn(det) == 0) return false;
    for (const auto& t : f3.terms()) {
        if (t.monomial[2] > 0 && !(t.monomial == Monomial::variable(3))) return false;
    }
    return sgn(linear_coefficient(f3, 3)) != 0;
}

H1TMembership membership_H1T(const PolyMap& phi) {
    if (phi.ambient() != 3) return {Verdict::No, std::nullopt, "ambient must be 3"};
    const auto& f1 = phi.component(1);
    if (!affine_component(f1) || f1.uses_variable(2) || f1.uses_variable(3) || sgn(linear_coefficient(f1, 1)) == 0) {
        return {Verdict::No, std::nullopt, "first component is not a X1 + b"};
    }
    const Polynomial jac = jacobian_determinant(phi);
    if (jac.is_zero() || !jac.is_constant()) return {Verdict::No, std::nullopt, "Jacobian is not a nonzero constant"};
    auto ring = factor_ta2_ring(phi.component(2), phi.component(3));
    if (auto* unknown = std::get_if<RingUnknown>(&ring)) return {Verdict::Unknown, std::nullopt, unknown->reason};
    TamenessCertificate cert;
    cert.a = linear_coefficient(f1, 1);
    cert.b = f1.constant_term();
    cert.steps = std::get<RingFactorization>(ring).steps;
    if (!(cert.replay() == phi)) throw Error("tameness certificate does not replay");
    return {Verdict::Yes, std::move(cert), ""};
}

bool in_factor(const PolyMap& phi, FactorId id) {
    switch (id) {
        case FactorId::H1T: return membership_H1T(phi).verdict == Verdict::Yes;
        case FactorId::H2: return membership_H2(phi);
        case FactorId::H3: return membership_H3(phi);
    }
    return false;
}

bool in_intersection(const PolyMap& phi, FactorId a, FactorId b) {
    if (a == b) throw Error("intersection needs two distinct factors");
    return in_factor(phi, a) && in_factor(phi, b);
}

AmalgamLetter AmalgamLetter::make(FactorId factor, const PolyMap& element,
                                  std::optional<TamenessCertificate> certificate) {
    if (factor != FactorId::H1T) {
        if (certificate) throw Error("only H1T letters carry certificates");
        if (!in_factor(element, factor)) throw Error(std::string("element is not in ") + to_string(factor));
        return AmalgamLetter(factor, verified_or_inverted(element), std::nullopt);
    }
    if (!certificate) {
        auto m = membership_H1T(element);
        if (m.verdict != Verdict::Yes) {
            throw Error(std::string("element is not certified in H1T (") + to_string(m.verdict) + ": " + m.reason + ")");
        }
        certificate = std::move(m.certificate);
    }
    PolyMap replayed = certificate->replay();
    if (!(replayed == element)) throw Error("certificate does not replay to the element");
    return AmalgamLetter(factor, std::move(replayed), std::move(certificate));
}

AmalgamLetter AmalgamLetter::from_certificate(TamenessCertificate certificate) {
    PolyMap element = certificate.replay();
    return AmalgamLetter(FactorId::H1T, std::move(element), std::move(certificate));
}

AmalgamLetter AmalgamLetter::inverse() const {
    std::optional<TamenessCertificate> cert;
    if (certificate_) cert = certificate_->inverse();
    return AmalgamLetter(factor_, element_.inverse(), std::move(cert));
}

AmalgamWord inverse(const AmalgamWord& w) {
    AmalgamWord out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

AmalgamWord concat(const AmalgamWord& u, const AmalgamWord& v) {
    AmalgamWord out = u;
    out.insert(out.end(), v.begin(), v.end());
    return out;
}

PolyMap phi_map(const AmalgamWord& w) {
    // Each letter contributes small factors: certificate steps for H1T, and
    // the affine part followed by the slot-3 shear for H2.
    std::vector<PolyMap> maps;
    for (const auto& l : w) {
        if (l.certificate()) {
            const TamenessCertificate& c = *l.certificate();
            maps.push_back(sigma(1, c.a, Polynomial(3, c.b)));
            for (const auto& s : c.steps) maps.push_back(s.map());
        } else if (l.factor() == FactorId::H2) {
            const PolyMap& e = l.element();
            const Polynomial x3 = Polynomial::variable(3, 3);
            const Scalar u = e.component(3).coefficient(Monomial::variable(3));
            maps.push_back(PolyMap({e.component(1), e.component(2), x3}));
            maps.push_back(sigma(3, u, e.component(3) - u * x3));
        } else {
            maps.push_back(l.element());
        }
    }
    return compose_all(maps, 3);
}

namespace {

std::optional<TamenessCertificate> certificate_for(const AmalgamLetter& l) {
    if (l.certificate()) return l.certificate();
    auto m = membership_H1T(l.element());
    if (m.verdict != Verdict::Yes) return std::nullopt;
    return m.certificate;
}

}  // namespace

std::optional<AmalgamLetter> merge_in(FactorId factor, const AmalgamLetter& x, const AmalgamLetter& y) {
    if (factor == FactorId::H1T) {
        auto cx = certificate_for(x);
        if (!cx) return std::nullopt;
        auto cy = certificate_for(y);
        if (!cy) return std::nullopt;
        return AmalgamLetter::from_certificate(cx->then(*cy));
    }
    if (x.factor() != factor && !in_factor(x.element(), factor)) return std::nullopt;
    if (y.factor() != factor && !in_factor(y.element(), factor)) return std::nullopt;
    return AmalgamLetter::make(factor, compose(x.element(), y.element()));
}

AmalgamWord reduce(const AmalgamWord& w) {
    AmalgamWord out;
    for (const auto& letter : w) {
        if (letter.element().is_identity()) continue;
        std::optional<AmalgamLetter> incoming = letter;
        while (incoming) {
            if (out.empty()) {
                out.push_back(std::move(*incoming));
                break;
            }
            const AmalgamLetter& top = out.back();
            std::optional<AmalgamLetter> merged;
            if (top.factor() == incoming->factor()) {
                merged = merge_in(top.factor(), top, *incoming);
            } else {
                const FactorId third = FactorId(3 - int(top.factor()) - int(incoming->factor()));
                for (FactorId f : {top.factor(), incoming->factor(), third}) {
                    if ((merged = merge_in(f, top, *incoming))) break;
                }
            }
            if (!merged) {
                out.push_back(std::move(*incoming));
                break;
            }
            out.pop_back();
            if (merged->element().is_identity()) break;
            incoming = std::move(merged);
        }
    }
    return out;
}

bool amalgam_equal(const AmalgamWord& u, const AmalgamWord& v) { return phi_map(u) == phi_map(v); }

bool equal_by_reduction(const AmalgamWord& u, const AmalgamWord& v) {
    return reduce(concat(u, inverse(v))).empty();
}

bool same_elements(const AmalgamWord& u, const AmalgamWord& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t k = 0; k < u.size(); ++k) {
        if (!(u[k].element() == v[k].element())) return false;
    }
    return true;
}

AmalgamWord parse_amalgam_word(std::string_view text) {
    AmalgamWord out;
    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        std::string_view line = text.substr(line_start, line_end - line_start);
        const std::size_t offset = line_start;
        line_start = line_end + 1;

        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string_view::npos) continue;
        const auto colon = line.find(':');
        if (colon == std::string_view::npos) throw ParseError("expected '<factor>:'", offset + first);
        std::string_view name = line.substr(first, colon - first);
        while (!name.empty() && (name.back() == ' ' || name.back() == '\t')) name.remove_suffix(1);
        const auto factor = parse_factor(name);
        if (!factor) throw ParseError("unknown factor '" + std::string(name) + "'", offset + first);
        const auto open = line.find('(', colon);
        const auto close = line.find(')', colon);
        if (open == std::string_view::npos || close == std::string_view::npos || close < open) {
            throw ParseError("expected '(F1; F2; F3)'", offset + colon + 1);
        }
        PolyMap element = [&] {
            try {
                return parse_map(line.substr(open, close - open + 1), 3);
            } catch (const ParseError& e) {
                throw ParseError(e.message(), offset + open + e.position());
            }
        }();
        std::optional<TamenessCertificate> cert;
        std::string_view rest = line.substr(close + 1);
        const auto rest_first = rest.find_first_not_of(" \t\r");
        if (rest_first != std::string_view::npos) {
            rest = rest.substr(rest_first);
            if (rest.substr(0, 5) != "cert:") throw ParseError("expected 'cert:'", offset + close + 1 + rest_first);
            if (*factor != FactorId::H1T) throw ParseError("only H1T letters take a certificate", offset + close + 1 + rest_first);
            try {
                cert = TamenessCertificate::parse(rest.substr(5));
            } catch (const ParseError& e) {
                throw ParseError(e.message(), offset + close + 1 + rest_first + 5 + e.position());
            }
        }
        try {
            out.push_back(AmalgamLetter::make(*factor, element, std::move(cert)));
        } catch (const ParseError&) {
            throw;
        } catch (const Error& e) {
            throw ParseError(e.what(), offset + first);
        }
    }
    return out;
}

std::string format_amalgam_letter(const AmalgamLetter& letter) {
    std::string out = std::string(to_string(letter.factor())) + ": " + format_map(letter.element());
    if (letter.certificate()) {
        const std::string cert = letter.certificate()->text();
        out += " cert: " + (cert.empty() ? std::string("s(2,1,0)") : cert);
    }
    return out;
}

std::string format_amalgam_word(const AmalgamWord& w) {
    std::string out;
    for (const auto& l : w) out += format_amalgam_letter(l) + "\n";
    return out;
}

}  // namespace tame
