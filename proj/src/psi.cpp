#include "tame/psi.hpp"

namespace tame {

AmalgamLetter swap_letter(int k, int l) { return AmalgamLetter::make(FactorId::H3, coordinate_swap(k, l)); }

AmalgamLetter elementary_h1t_letter(int i, const Scalar& alpha, const Polynomial& f) {
    TamenessCertificate cert;
    cert.steps.push_back(ElementaryStep::make(i, alpha, f));
    return AmalgamLetter::from_certificate(std::move(cert));
}

Polynomial x3_to_x1(const Polynomial& f) {
    const std::vector<Polynomial> images = {Polynomial::variable(3, 1), Polynomial::variable(3, 2),
                                            Polynomial::variable(3, 1)};
    return f.substitute(images);
}

namespace {

AmalgamWord forward_image(const SigmaLetter& l, bool conjugated_form) {
    if (l.i != 1) return {elementary_h1t_letter(l.i, l.alpha, l.f)};
    if (!conjugated_form && (l.f.is_zero() || l.f.total_degree() <= Degree(1))) {
        return {AmalgamLetter::make(FactorId::H3, sigma(1, l.alpha, l.f))};
    }
    const AmalgamLetter t = swap_letter(1, 3);
    return {t, elementary_h1t_letter(3, l.alpha, x3_to_x1(l.f)), t};
}

AmalgamWord image(const SigmaLetter& l, bool conjugated_form) {
    AmalgamWord w = forward_image(SigmaLetter{l.i, l.alpha, l.f, 1}, conjugated_form);
    return l.exponent == 1 ? w : inverse(w);
}

}  // namespace

AmalgamWord psi_letter(const SigmaLetter& letter) { return image(letter, false); }

AmalgamWord psi_letter_conjugated(const SigmaLetter& letter) { return image(letter, true); }

AmalgamWord psi(const SigmaWord& w) {
    AmalgamWord all;
    for (const auto& l : w.letters()) {
        AmalgamWord piece = psi_letter(l);
        all.insert(all.end(), piece.begin(), piece.end());
    }
    return reduce(all);
}

bool verify_relation_respect(const RelationInstance& r) { return amalgam_equal(psi(r.lhs), psi(r.rhs)); }

}  // namespace tame
