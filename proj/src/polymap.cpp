#include "tame/polymap.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>

namespace tame {

struct PolyMap::InverseSlot {
    std::once_flag once;
    std::function<Components()> make;
    Components value;

    Components get() {
        std::call_once(once, [this] {
            value = make();
            make = nullptr;
        });
        return value;
    }
};

PolyMap::PolyMap(std::vector<Polynomial> components)
    : comps_(std::make_shared<const std::vector<Polynomial>>(std::move(components))) {
    const int n = ambient();
    if (n < 1 || n > kMaxVars) throw Error("a polynomial map needs 1..3 components");
    for (const auto& f : *comps_) {
        if (f.ambient() != n) {
            throw AmbientMismatch("component lives in " + std::to_string(f.ambient()) +
                                  " variables, map has " + std::to_string(n) + " components");
        }
    }
}

PolyMap::PolyMap(Components comps, std::shared_ptr<InverseSlot> inv)
    : comps_(std::move(comps)), inv_(std::move(inv)) {}

std::shared_ptr<PolyMap::InverseSlot> PolyMap::ready_slot(Components value) {
    auto slot = std::make_shared<InverseSlot>();
    slot->make = [value] { return value; };
    return slot;
}

PolyMap PolyMap::identity(int n) {
    std::vector<Polynomial> comps;
    for (int i = 1; i <= n; ++i) comps.push_back(Polynomial::variable(n, i));
    return make_verified(comps, comps);
}

Degree PolyMap::degree() const {
    Degree d = Degree::minus_infinity();
    for (const auto& f : components()) d = std::max(d, f.total_degree());
    return d;
}

bool PolyMap::is_identity() const {
    for (int i = 1; i <= ambient(); ++i) {
        if (component(i) != Polynomial::variable(ambient(), i)) return false;
    }
    return true;
}

PolyMap PolyMap::inverse() const {
    if (!inv_) throw Error("inverse requested for an unverified map");
    return PolyMap(inv_->get(), ready_slot(comps_));
}

std::optional<PolyMap> PolyMap::verified_with(const PolyMap& candidate) const {
    if (candidate.ambient() != ambient()) return std::nullopt;
    if (!compose(*this, candidate).is_identity() || !compose(candidate, *this).is_identity()) {
        return std::nullopt;
    }
    return make_verified(components(), candidate.components());
}

PolyMap make_verified(std::vector<Polynomial> forward, std::vector<Polynomial> backward) {
    PolyMap f(std::move(forward));
    PolyMap b(std::move(backward));
    return PolyMap(f.comps_, PolyMap::ready_slot(b.comps_));
}

PolyMap compose(const PolyMap& phi, const PolyMap& psi) {
    if (phi.ambient() != psi.ambient()) throw AmbientMismatch("composing maps of different ambient");
    std::vector<Polynomial> out;
    out.reserve(phi.ambient());
    for (const auto& f : phi.components()) out.push_back(f.substitute(psi.components()));
    auto comps = std::make_shared<const std::vector<Polynomial>>(std::move(out));
    if (!phi.verified() || !psi.verified()) return PolyMap(comps, nullptr);
    auto slot = std::make_shared<PolyMap::InverseSlot>();
    slot->make = [phi, psi] { return compose(psi.inverse(), phi.inverse()).comps_; };
    return PolyMap(comps, slot);
}

PolyMap compose_all(const std::vector<PolyMap>& maps, int n) {
    if (maps.empty()) return PolyMap::identity(n);
    // Folding from the right substitutes the growing product into the small
    // factor instead of expanding powers of a small factor inside a large one.
    PolyMap acc = maps.back();
    for (std::size_t k = maps.size() - 1; k-- > 0;) acc = compose(maps[k], acc);
    return acc;
}

Polynomial apply_to_poly(const Polynomial& f, const PolyMap& phi) {
    if (f.ambient() != phi.ambient()) throw AmbientMismatch("polynomial and map disagree on ambient");
    return f.substitute(phi.components());
}

PolyMap sigma(int i, const Scalar& alpha, const Polynomial& f) {
    const int n = f.ambient();
    if (i < 1 || i > n) throw Error("sigma index " + std::to_string(i) + " out of range");
    if (sgn(alpha) == 0) throw Error("sigma requires a nonzero scalar");
    if (f.uses_variable(i)) throw Error("sigma_{" + std::to_string(i) + "} polynomial uses X" + std::to_string(i));
    std::vector<Polynomial> forward, backward;
    const Scalar inv = 1 / alpha;
    for (int k = 1; k <= n; ++k) {
        const Polynomial x = Polynomial::variable(n, k);
        if (k == i) {
            forward.push_back(alpha * x + f);
            backward.push_back(inv * x - inv * f);
        } else {
            forward.push_back(x);
            backward.push_back(x);
        }
    }
    return make_verified(std::move(forward), std::move(backward));
}

PolyMap coordinate_swap(int k, int l, int n) {
    if (k < 1 || k > n || l < 1 || l > n) throw Error("transposition index out of range");
    std::vector<Polynomial> comps;
    for (int i = 1; i <= n; ++i) {
        const int source = i == k ? l : (i == l ? k : i);
        comps.push_back(Polynomial::variable(n, source));
    }
    return make_verified(comps, comps);
}

PolyMap tau(int k, int l, int n) {
    if (k == l) throw Error("tau requires distinct indices");
    const Polynomial xk = Polynomial::variable(n, k);
    const Polynomial xl = Polynomial::variable(n, l);
    PolyMap t = compose(compose(sigma(l, 1, xk), sigma(k, 1, -xl)), sigma(l, -1, xk));
    if (t != coordinate_swap(k, l, n)) throw Error("tau does not evaluate to the coordinate swap");
    return t;
}

Polynomial jacobian_determinant(const PolyMap& phi) {
    const int n = phi.ambient();
    std::vector<std::vector<Polynomial>> j(n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) j[r].push_back(phi.component(r + 1).derivative(c + 1));
    }
    switch (n) {
        case 1:
            return j[0][0];
        case 2:
            return j[0][0] * j[1][1] - j[0][1] * j[1][0];
        default:
            return j[0][0] * (j[1][1] * j[2][2] - j[1][2] * j[2][1]) -
                   j[0][1] * (j[1][0] * j[2][2] - j[1][2] * j[2][0]) +
                   j[0][2] * (j[1][0] * j[2][1] - j[1][1] * j[2][0]);
    }
}

Polynomial nagata_invariant() {
    return parse_poly("X2*X3 + X1^2", 3);
}

PolyMap nagata() {
    const Polynomial x = Polynomial::variable(3, 1);
    const Polynomial y = Polynomial::variable(3, 2);
    const Polynomial z = Polynomial::variable(3, 3);
    const Polynomial d = nagata_invariant();
    PolyMap map({x + z * d, y - Scalar(2) * x * d - z * d * d, z});
    auto inverse = invert(map);
    if (!inverse) throw Error("Nagata map failed to invert");
    return *map.verified_with(*inverse);
}

PolyMap parse_map(std::string_view text, int n) {
    std::size_t open = text.find('(');
    std::size_t close = text.rfind(')');
    if (open == std::string_view::npos) throw ParseError("expected '('", 0);
    if (close == std::string_view::npos || close < open) throw ParseError("expected ')'", text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
        if ((k < open || k > close) && !std::isspace(static_cast<unsigned char>(text[k]))) {
            throw ParseError("unexpected character outside parentheses", k);
        }
    }
    std::vector<std::pair<std::size_t, std::string_view>> parts;
    std::size_t start = open + 1;
    for (std::size_t k = start; k <= close; ++k) {
        if (k == close || text[k] == ';') {
            parts.emplace_back(start, text.substr(start, k - start));
            start = k + 1;
        }
    }
    const int count = int(parts.size());
    if (n == 0) n = count;
    if (count != n) {
        throw ParseError("expected " + std::to_string(n) + " components, found " + std::to_string(count), open);
    }
    if (n < 1 || n > kMaxVars) throw ParseError("maps need 1..3 components", open);
    std::vector<Polynomial> comps;
    for (const auto& [offset, body] : parts) {
        try {
            comps.push_back(parse_poly(body, n));
        } catch (const ParseError& e) {
            throw ParseError(e.message(), offset + e.position());
        }
    }
    return PolyMap(std::move(comps));
}

std::string format_map(const PolyMap& phi) {
    std::string out = "(";
    for (int i = 1; i <= phi.ambient(); ++i) {
        if (i > 1) out += "; ";
        out += format_poly(phi.component(i));
    }
    return out + ")";
}

}  // namespace tame
