#pragma once

// Generators and a direct evaluator shared by the test programs. The
// evaluator works term by term on rational points and never calls the
// library's multiplication or substitution code.

#include <array>
#include <vector>

#include "tame/jvdk.hpp"
#include "tame/polymap.hpp"
#include "tame/random.hpp"

namespace testkit {

using tame::Polynomial;
using tame::PolyMap;
using tame::Rng;
using tame::Scalar;

using Point = std::vector<Scalar>;

inline Scalar evaluate(const Polynomial& f, const Point& x) {
    Scalar total = 0;
    for (const auto& t : f.terms()) {
        Scalar v = t.coefficient;
        for (int k = 0; k < f.ambient(); ++k) {
            for (std::uint32_t e = 0; e < t.monomial[k]; ++e) v *= x[k];
        }
        total += v;
    }
    return total;
}

inline Point evaluate(const PolyMap& phi, const Point& x) {
    Point out;
    for (const auto& f : phi.components()) out.push_back(evaluate(f, x));
    return out;
}

inline Point random_point(Rng& rng, int n) {
    Point p;
    for (int k = 0; k < n; ++k) p.emplace_back(rng.uniform(-20, 20), rng.uniform(1, 7));
    for (auto& c : p) c.canonicalize();
    return p;
}

inline Polynomial x(int n, int i) { return Polynomial::variable(n, i); }

inline PolyMap random_plane_affine(Rng& rng, long bound = 5) {
    while (true) {
        const Scalar a = rng.uniform(-bound, bound), b = rng.uniform(-bound, bound);
        const Scalar c = rng.uniform(-bound, bound), d = rng.uniform(-bound, bound);
        if (a * d - b * c == 0) continue;
        const Scalar e = rng.uniform(-bound, bound), f = rng.uniform(-bound, bound);
        return PolyMap({a * x(2, 1) + b * x(2, 2) + Polynomial(2, e), c * x(2, 1) + d * x(2, 2) + Polynomial(2, f)});
    }
}

/// (a X1 + b, c X2 + p(X1)) with 2 <= deg p <= max_degree.
inline PolyMap random_plane_triangular(Rng& rng, int max_degree, long bound = 5) {
    const std::vector<int> only_x1 = {1};
    Polynomial p(2);
    while (p.total_degree() < tame::Degree(2)) p = tame::random_poly(rng, 2, only_x1, max_degree, bound, false);
    const Scalar a = tame::random_nonzero_scalar(rng, bound), c = tame::random_nonzero_scalar(rng, bound);
    return PolyMap({a * x(2, 1) + Polynomial(2, Scalar(rng.uniform(-bound, bound))), c * x(2, 2) + p});
}

/// Alternating product of affine and triangular letters.
inline PolyMap random_plane_automorphism(Rng& rng, int max_letters, int triangular_degree) {
    const int letters = int(rng.uniform(1, max_letters));
    bool affine = rng.coin();
    std::vector<PolyMap> maps;
    for (int k = 0; k < letters; ++k, affine = !affine) {
        maps.push_back(affine ? random_plane_affine(rng) : random_plane_triangular(rng, triangular_degree));
    }
    return tame::compose_all(maps, 2);
}

/// Plane maps whose Jacobian determinant is zero or non-constant.
inline PolyMap random_plane_non_automorphism(Rng& rng) {
    const PolyMap base = random_plane_automorphism(rng, 3, 3);
    switch (rng.uniform(0, 2)) {
        case 0: {
            const Polynomial& f = base.component(1);
            return PolyMap({f, Scalar(rng.uniform(1, 4)) * f + Polynomial(2, Scalar(1))});
        }
        case 1: {
            const unsigned k = unsigned(rng.uniform(2, 4));
            return tame::compose(base, PolyMap({x(2, 1), x(2, 2).pow(k) + x(2, 1)}));
        }
        default:
            return tame::compose(PolyMap({x(2, 1) * x(2, 2) + x(2, 1), x(2, 2)}), base);
    }
}

}  // namespace testkit
