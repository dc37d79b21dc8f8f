#pragma once

// Degree-reduction factorization of plane automorphisms into affine and
// triangular letters, and its heuristic variant over the ring K[X1].

#include <string>
#include <variant>
#include <vector>

#include "tame/polymap.hpp"

namespace tame {

enum class PlaneKind { Affine, Triangular };

struct PlaneLetter {
    PlaneKind kind;
    PolyMap element;  // ambient 2
};

struct PlaneFactorization {
    std::vector<PlaneLetter> letters;
    /// deg F1 + deg F2 before each reduction step; strictly decreasing.
    std::vector<int> degree_trace;
};

struct NotAutomorphism {
    std::string reason;
};

bool is_plane_affine(const PolyMap& phi);
/// (a*X1 + b, c*X2 + p(X1)) with a, c nonzero.
bool is_plane_triangular(const PolyMap& phi);

std::variant<PlaneFactorization, NotAutomorphism> factor_ga2(const PolyMap& phi);
PolyMap recompose(const std::vector<PlaneLetter>& letters);

std::string format_plane_letter(const PlaneLetter& letter);

/// X_slot -> alpha*X_slot + g on K[X1][X2,X3], slot in {2,3}, g free of X_slot.
struct ElementaryStep {
    int slot = 2;
    Scalar alpha = 1;
    Polynomial g{3};

    static ElementaryStep make(int slot, const Scalar& alpha, const Polynomial& g);
    ElementaryStep inverse() const;
    /// The step as an automorphism of 3-space fixing X1.
    PolyMap map() const;
    bool operator==(const ElementaryStep&) const = default;
};

struct RingFactorization {
    std::vector<ElementaryStep> steps;  // left-to-right product is (X1, F2, F3)
};

struct RingUnknown {
    std::string reason;
};

/// Tries to write (X1, F2, F3) as a product of elementary steps over K[X1].
std::variant<RingFactorization, RingUnknown> factor_ta2_ring(const Polynomial& f2, const Polynomial& f3);

/// Left-to-right product of the steps' maps (identity when empty).
PolyMap replay_steps(const std::vector<ElementaryStep>& steps);

}  // namespace tame
