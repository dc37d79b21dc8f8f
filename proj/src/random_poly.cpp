#include "tame/random.hpp"

#include <algorithm>
#include <vector>

namespace tame {

long Rng::uniform(long lo, long hi) {
    if (hi < lo) throw Error("empty sampling range");
    const std::uint64_t span = std::uint64_t(hi - lo) + 1;
    const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t(0) / span) * span;
    std::uint64_t x = next();
    while (limit != 0 && x >= limit) x = next();
    return lo + long(span == 0 ? x : x % span);
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    // splitmix64 finalizer over the combined input
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Scalar random_nonzero_scalar(Rng& rng, long bound) {
    if (bound < 1) throw Error("coefficient bound must be positive");
    long v = rng.uniform(1, bound);
    return rng.coin() ? Scalar(v) : Scalar(-v);
}

Polynomial random_poly(Rng& rng, int n, std::span<const int> variables, int max_degree,
                       long coeff_bound, bool allow_zero, int max_terms) {
    if (max_degree < 0) throw Error("degree bound must be non-negative");
    if (allow_zero && rng.uniform(0, 9) == 0) return Polynomial(n);
    const int degree = int(rng.uniform(0, max_degree));
    std::vector<Monomial> support;
    // Enumerate monomials in the allowed variables with degree <= `degree`.
    std::vector<std::uint32_t> exps(variables.size(), 0);
    auto rec = [&](auto&& self, std::size_t k, int remaining) -> void {
        if (k == variables.size()) {
            Monomial m;
            for (std::size_t v = 0; v < variables.size(); ++v) m[variables[v] - 1] = exps[v];
            support.push_back(m);
            return;
        }
        for (int e = 0; e <= remaining; ++e) {
            exps[k] = std::uint32_t(e);
            self(self, k + 1, remaining - e);
        }
    };
    rec(rec, 0, degree);
    const int terms = int(rng.uniform(1, std::min<long>(max_terms, long(support.size()))));
    std::vector<Term> chosen;
    // The top-degree monomial is always present so the drawn degree is attained.
    std::vector<Monomial> top, rest;
    for (const auto& m : support) (int(m.degree()) == degree ? top : rest).push_back(m);
    const std::size_t pick = std::size_t(rng.uniform(0, long(top.size()) - 1));
    chosen.push_back({top[pick], random_nonzero_scalar(rng, coeff_bound)});
    top.erase(top.begin() + long(pick));
    // Further monomials are distinct, so terms never cancel.
    for (int k = 1; k < terms; ++k) {
        auto& pool = rest.empty() ? top : (rng.coin() || top.empty() ? rest : top);
        const std::size_t at = std::size_t(rng.uniform(0, long(pool.size()) - 1));
        chosen.push_back({pool[at], random_nonzero_scalar(rng, coeff_bound)});
        pool.erase(pool.begin() + long(at));
    }
    return Polynomial(n, std::move(chosen));
}

}  // namespace tame
