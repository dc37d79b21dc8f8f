#pragma once

// Formal words in the elementary generators [sigma_{i,alpha,f}], their
// evaluation in TA_3, and instances of the three defining relation families.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tame/polymap.hpp"
#include "tame/random.hpp"

namespace tame {

/// [sigma_{i,alpha,f}]^exponent with f free of X_i.
struct SigmaLetter {
    int i = 1;
    Scalar alpha = 1;
    Polynomial f;
    int exponent = 1;

    /// Validating constructor.
    static SigmaLetter make(int i, const Scalar& alpha, const Polynomial& f, int exponent = 1);

    SigmaLetter inverse() const;
    /// sigma_{i,alpha,f} or its inverse, as a verified map.
    PolyMap map() const;
    bool same_generator(const SigmaLetter& other) const {
        return i == other.i && alpha == other.alpha && f == other.f;
    }
    bool operator==(const SigmaLetter& other) const {
        return same_generator(other) && exponent == other.exponent;
    }
};

class SigmaWord {
public:
    SigmaWord() = default;
    explicit SigmaWord(std::vector<SigmaLetter> letters) : letters_(std::move(letters)) {}

    const std::vector<SigmaLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }

    SigmaWord inverse() const;
    /// Cancels adjacent letter/inverse pairs of the same generator.
    SigmaWord freely_reduced() const;

    friend SigmaWord operator*(const SigmaWord& u, const SigmaWord& v);
    bool operator==(const SigmaWord&) const = default;

private:
    std::vector<SigmaLetter> letters_;
};

/// Left-to-right product of the letters' maps in TA_3.
PolyMap eval(const SigmaWord& w);

/// [sigma_{l,1,X_k}][sigma_{k,1,-X_l}][sigma_{l,-1,X_k}]
SigmaWord tau_word(int k, int l);

enum class RelationKind { R1, R2, R3 };

const char* to_string(RelationKind kind);

/// Parameters of a relation instance; unused fields are ignored per kind.
/// R1: i, alpha, f, beta, g.  R2: i, j, alpha, f, beta, g.  R3: k, l, i, alpha, f.
struct RelationParams {
    int i = 1;
    int j = 2;
    int k = 1;
    int l = 2;
    Scalar alpha = 1;
    Scalar beta = 1;
    Polynomial f{3};
    Polynomial g{3};
};

struct RelationInstance {
    RelationKind kind;
    RelationParams params;
    SigmaWord lhs;
    SigmaWord rhs;
};

/// Builds lhs/rhs after checking side conditions: R2 needs i != j, f free of
/// X_i and X_j, g free of X_j; R3 needs k != l, and j is i under the (k l) swap.
RelationInstance make_relation(RelationKind kind, const RelationParams& params);
/// eval(lhs) == eval(rhs).
bool check_relation(const RelationInstance& r);

/// R1: 3 cases (i), R2: 6 ordered (i, j), R3: 18 = ordered (k, l) x i.
int relation_case_count(RelationKind kind);
std::string relation_case_label(RelationKind kind, int case_index);

RelationInstance random_relation(Rng& rng, RelationKind kind, int case_index, int max_degree,
                                 long coeff_bound);
RelationInstance random_relation(std::uint64_t seed, RelationKind kind, int max_degree,
                                 long coeff_bound);

/// Maximum product of letter degrees in a random word; letters that would
/// exceed it are drawn affine.
inline constexpr long kWordDegreeBudget = 36;

SigmaWord random_word(std::uint64_t seed, int length, int max_degree, long coeff_bound,
                      long degree_budget = kWordDegreeBudget);

/// Whitespace-separated `s(i,alpha,f)`, `s(i,alpha,f)^-1`, or `t(k,l)` (expanded).
SigmaWord parse_sigma_word(std::string_view text);
std::string format_sigma_letter(const SigmaLetter& letter);
std::string format_sigma_word(const SigmaWord& w);

}  // namespace tame
