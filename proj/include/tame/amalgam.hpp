#pragma once

// The factors H1T (tame stabilizer of K + K X1), H2 (stabilizer of
// K + K X1 + K X2) and H3 (affine group), words over them, and the
// evaluation map back into TA_3.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tame/jvdk.hpp"
#include "tame/polymap.hpp"

namespace tame {

enum class FactorId { H1T, H2, H3 };

const char* to_string(FactorId id);
std::optional<FactorId> parse_factor(std::string_view text);

/// phi = (a X1 + b, X2, X3) composed with the left-to-right product of steps.
struct TamenessCertificate {
    Scalar a = 1;
    Scalar b = 0;
    std::vector<ElementaryStep> steps;

    PolyMap replay() const;
    /// Certificate of the product (this, then other).
    TamenessCertificate then(const TamenessCertificate& other) const;
    TamenessCertificate inverse() const;

    /// Sigma-word text; a leading s(1,a,b) carries the affine X1 part.
    std::string text() const;
    static TamenessCertificate parse(std::string_view text);
};

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct H1TMembership {
    Verdict verdict = Verdict::No;
    std::optional<TamenessCertificate> certificate;
    std::string reason;
};

bool membership_H3(const PolyMap& phi);
bool membership_H2(const PolyMap& phi);
H1TMembership membership_H1T(const PolyMap& phi);
/// Membership with Unknown counted as failure.
bool in_factor(const PolyMap& phi, FactorId id);
bool in_intersection(const PolyMap& phi, FactorId a, FactorId b);

class AmalgamLetter {
public:
    /// Validates membership; H1T letters get a certificate from the factorizer
    /// when none is supplied.
    static AmalgamLetter make(FactorId factor, const PolyMap& element,
                              std::optional<TamenessCertificate> certificate = std::nullopt);
    static AmalgamLetter from_certificate(TamenessCertificate certificate);

    FactorId factor() const { return factor_; }
    const PolyMap& element() const { return element_; }
    const std::optional<TamenessCertificate>& certificate() const { return certificate_; }

    AmalgamLetter inverse() const;

    bool operator==(const AmalgamLetter& other) const {
        return factor_ == other.factor_ && element_ == other.element_;
    }

private:
    AmalgamLetter(FactorId factor, PolyMap element, std::optional<TamenessCertificate> certificate)
        : factor_(factor), element_(std::move(element)), certificate_(std::move(certificate)) {}

    FactorId factor_;
    PolyMap element_;
    std::optional<TamenessCertificate> certificate_;
};

using AmalgamWord = std::vector<AmalgamLetter>;

AmalgamWord inverse(const AmalgamWord& w);
AmalgamWord concat(const AmalgamWord& u, const AmalgamWord& v);

PolyMap phi_map(const AmalgamWord& w);

/// Product of two letters known to lie in a common factor, labelled with it.
std::optional<AmalgamLetter> merge_in(FactorId factor, const AmalgamLetter& x, const AmalgamLetter& y);

/// Greedy stack simplifier: drops identity letters and merges adjacent letters
/// that share a factor, relabelling a pair when both lie in an intersection.
AmalgamWord reduce(const AmalgamWord& w);

/// Equality of the images in TA_3.
bool amalgam_equal(const AmalgamWord& u, const AmalgamWord& v);

/// True when u v^-1 reduces to the empty word, so every step of the
/// comparison is an identity inside one factor.
bool equal_by_reduction(const AmalgamWord& u, const AmalgamWord& v);

/// Letter-by-letter equality of elements, ignoring factor labels.
bool same_elements(const AmalgamWord& u, const AmalgamWord& v);

/// One letter per line: `<factor>: (F1; F2; F3)`, H1T letters optionally
/// followed by `cert: <sigma word>`.
AmalgamWord parse_amalgam_word(std::string_view text);
std::string format_amalgam_letter(const AmalgamLetter& letter);
std::string format_amalgam_word(const AmalgamWord& w);

}  // namespace tame
