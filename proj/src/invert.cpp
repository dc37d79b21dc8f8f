#include <algorithm>
#include <unordered_map>

#include "tame/polymap.hpp"

namespace tame {

namespace {

using SparseRow = std::vector<std::pair<int, Scalar>>;  // sorted by column

// row -= factor * pivot
void subtract_scaled(SparseRow& row, const Scalar& factor, const SparseRow& pivot) {
    SparseRow out;
    out.reserve(row.size() + pivot.size());
    auto a = row.begin();
    auto b = pivot.begin();
    while (a != row.end() || b != pivot.end()) {
        if (b == pivot.end() || (a != row.end() && a->first < b->first)) {
            out.push_back(std::move(*a++));
        } else if (a == row.end() || b->first < a->first) {
            out.emplace_back(b->first, -factor * b->second);
            ++b;
        } else {
            Scalar v = a->second - factor * b->second;
            if (sgn(v) != 0) out.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    row = std::move(out);
}

const Scalar* entry(const SparseRow& row, int col) {
    auto it = std::lower_bound(row.begin(), row.end(), col,
                               [](const auto& e, int c) { return e.first < c; });
    return it != row.end() && it->first == col ? &it->second : nullptr;
}

std::vector<Monomial> monomials_up_to(int n, int degree) {
    std::vector<Monomial> out;
    for (int a = 0; a <= degree; ++a) {
        for (int b = 0; b <= (n >= 2 ? degree - a : 0); ++b) {
            for (int c = 0; c <= (n >= 3 ? degree - a - b : 0); ++c) {
                out.push_back(Monomial({std::uint32_t(a), std::uint32_t(b), std::uint32_t(c)}));
            }
        }
    }
    return out;
}

class PowerCache {
public:
    explicit PowerCache(const PolyMap& phi) : phi_(phi) {}

    const Polynomial& get(const Monomial& m) {
        auto it = cache_.find(m.key());
        if (it != cache_.end()) return it->second;
        Polynomial value(phi_.ambient(), Scalar(1));
        if (!m.is_one()) {
            int v = 0;
            while (m[v] == 0) ++v;
            Monomial smaller = m;
            smaller[v] -= 1;
            value = get(smaller) * phi_.component(v + 1);
        }
        return cache_.emplace(m.key(), std::move(value)).first->second;
    }

private:
    const PolyMap& phi_;
    std::unordered_map<std::uint64_t, Polynomial> cache_;
};

// Finds G with G_i(F) = X_i and deg G_i <= degree, or nullopt.
std::optional<std::vector<Polynomial>> solve_at_degree(const PolyMap& phi, PowerCache& powers,
                                                       int degree) {
    const int n = phi.ambient();
    const std::vector<Monomial> columns = monomials_up_to(n, degree);
    const int unknowns = int(columns.size());

    std::unordered_map<std::uint64_t, int> row_of;
    std::vector<SparseRow> rows;
    auto row_for = [&](const Monomial& m) -> SparseRow& {
        auto [it, inserted] = row_of.emplace(m.key(), int(rows.size()));
        if (inserted) rows.emplace_back();
        return rows[it->second];
    };
    for (int c = 0; c < unknowns; ++c) {
        for (const auto& t : powers.get(columns[c]).terms()) row_for(t.monomial).emplace_back(c, t.coefficient);
    }
    for (int i = 1; i <= n; ++i) row_for(Monomial::variable(i)).emplace_back(unknowns + i - 1, Scalar(1));

    std::vector<bool> used(rows.size(), false);
    std::vector<std::pair<int, int>> pivots;  // (row, column)
    for (int c = 0; c < unknowns; ++c) {
        int best = -1;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (used[r] || !entry(rows[r], c)) continue;
            if (best < 0 || rows[r].size() < rows[best].size()) best = r;
        }
        if (best < 0) continue;
        used[best] = true;
        pivots.emplace_back(best, c);
        const Scalar inv = 1 / *entry(rows[best], c);
        for (auto& [col, v] : rows[best]) v *= inv;
        for (int r = 0; r < int(rows.size()); ++r) {
            if (r == best) continue;
            if (const Scalar* e = entry(rows[r], c)) {
                const Scalar factor = *e;
                subtract_scaled(rows[r], factor, rows[best]);
            }
        }
    }
    for (int r = 0; r < int(rows.size()); ++r) {
        if (used[r]) continue;
        for (const auto& [col, v] : rows[r]) {
            if (col >= unknowns) return std::nullopt;  // inconsistent right-hand side
        }
    }
    std::vector<std::vector<Term>> solution(n);
    for (auto [r, c] : pivots) {
        for (const auto& [col, v] : rows[r]) {
            if (col >= unknowns) solution[col - unknowns].push_back({columns[c], v});
        }
    }
    std::vector<Polynomial> out;
    for (auto& terms : solution) out.emplace_back(n, std::move(terms));
    return out;
}

}  // namespace

std::optional<PolyMap> invert(const PolyMap& phi) {
    const int n = phi.ambient();
    for (const auto& f : phi.components()) {
        if (f.is_zero()) return std::nullopt;
    }
    const Polynomial jac = jacobian_determinant(phi);
    if (jac.is_zero() || !jac.is_constant()) return std::nullopt;

    const int d = phi.degree().value();
    long bound = 1;
    for (int k = 1; k < n; ++k) bound *= d;
    PowerCache powers(phi);
    for (long degree = 1; degree <= bound; ++degree) {
        auto g = solve_at_degree(phi, powers, int(degree));
        if (!g) continue;
        if (auto verified = phi.verified_with(PolyMap(std::move(*g)))) return verified->inverse();
    }
    return std::nullopt;
}

}  // namespace tame
