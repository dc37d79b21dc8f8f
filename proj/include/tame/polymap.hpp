#pragma once

// Polynomial endomorphisms of affine n-space and the elementary generators.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tame/polynomial.hpp"

namespace tame {

/// A tuple (F1, ..., Fn) of polynomials in n variables. A verified map also
/// carries its inverse; the inverse is materialized on first use and shared
/// between copies.
class PolyMap {
public:
    explicit PolyMap(std::vector<Polynomial> components);

    static PolyMap identity(int n);

    int ambient() const { return int(comps_->size()); }
    const std::vector<Polynomial>& components() const { return *comps_; }
    /// Component for the 1-based slot.
    const Polynomial& component(int slot) const { return comps_->at(slot - 1); }

    Degree degree() const;
    bool is_identity() const;

    bool verified() const { return inv_ != nullptr; }
    /// Stored inverse; throws unless verified.
    PolyMap inverse() const;
    /// Verifies `candidate` as a two-sided inverse and returns a verified copy.
    std::optional<PolyMap> verified_with(const PolyMap& candidate) const;

    bool operator==(const PolyMap& other) const { return components() == other.components(); }

private:
    struct InverseSlot;
    using Components = std::shared_ptr<const std::vector<Polynomial>>;

    PolyMap(Components comps, std::shared_ptr<InverseSlot> inv);
    static std::shared_ptr<InverseSlot> ready_slot(Components value);

    friend PolyMap compose(const PolyMap& phi, const PolyMap& psi);
    friend PolyMap make_verified(std::vector<Polynomial> forward, std::vector<Polynomial> backward);

    Components comps_;
    std::shared_ptr<InverseSlot> inv_;
};

/// Trusted constructor for maps whose inverse is known by construction.
PolyMap make_verified(std::vector<Polynomial> forward, std::vector<Polynomial> backward);

/// Component i of the result is phi_i(psi_1, ..., psi_n), so that
/// f(compose(phi, psi)) = f(phi)(psi).
PolyMap compose(const PolyMap& phi, const PolyMap& psi);
/// Left-to-right product of a list of maps; empty lists give the identity in `n` variables.
PolyMap compose_all(const std::vector<PolyMap>& maps, int n);
Polynomial apply_to_poly(const Polynomial& f, const PolyMap& phi);

/// sigma_{i,alpha,f}: slot i becomes alpha*X_i + f, other slots fixed.
PolyMap sigma(int i, const Scalar& alpha, const Polynomial& f);
/// Transposition of slots k and l, computed as
/// sigma_{l,1,X_k} sigma_{k,1,-X_l} sigma_{l,-1,X_k}.
PolyMap tau(int k, int l, int n = 3);
/// The literal coordinate swap, for comparison with tau().
PolyMap coordinate_swap(int k, int l, int n = 3);

Polynomial jacobian_determinant(const PolyMap& phi);

/// Undetermined-coefficients inversion, trying inverse degrees 1, 2, ... up to
/// deg(phi)^(n-1). nullopt means no inverse exists within that bound.
std::optional<PolyMap> invert(const PolyMap& phi);

/// The map (X + Z*D, Y - 2*X*D - Z*D^2, Z) with D = Y*Z + X^2, (X,Y,Z) = (X1,X2,X3).
PolyMap nagata();
/// Y*Z + X^2 in the same coordinates.
Polynomial nagata_invariant();

/// Parses `(F1; ...; Fn)`. With n = 0 the ambient is the component count.
PolyMap parse_map(std::string_view text, int n = 0);
std::string format_map(const PolyMap& phi);

}  // namespace tame
