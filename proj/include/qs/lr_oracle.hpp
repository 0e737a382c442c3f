#pragma once

// Independent check for LR coefficients: expand Schur polynomials in the
// monomial basis through Kostka numbers (SSYT counts), multiply, and peel off
// Schur polynomials by leading monomial. Shares nothing with the tableau
// kernel except the Partition type.

#include <algorithm>
#include <cstdint>
#include <map>
#include <vector>

#include "qs/lr.hpp"
#include "qs/partition.hpp"

namespace qs::oracle {

// Number of SSYT of shape λ with content w, peeling the largest letter off
// as a horizontal strip.
inline std::int64_t kostka(const Partition& lambda, std::vector<int> w) {
    thread_local std::map<std::pair<Partition, std::vector<int>>, std::int64_t> memo;
    while (!w.empty() && w.back() == 0) w.pop_back();
    if (w.empty()) return lambda.empty() ? 1 : 0;
    int total = 0;
    for (int v : w) total += v;
    if (total != lambda.size()) return 0;
    std::sort(w.begin(), w.end(), std::greater<>());
    auto key = std::make_pair(lambda, w);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const int strip = w.back();
    std::vector<int> rest(w.begin(), w.end() - 1);
    std::int64_t count = 0;
    // μ ⊆ λ with λ/μ a horizontal strip: λ_{i+1} ≤ μ_i ≤ λ_i.
    const std::size_t rows = lambda.parts().size();
    std::vector<int> mu(rows);
    auto rec = [&](auto&& self, std::size_t i, int removed) -> void {
        if (i == rows) {
            if (removed == strip) count += kostka(Partition(mu), rest);
            return;
        }
        for (int v = lambda[i]; v >= lambda[i + 1]; --v) {
            if (removed + lambda[i] - v > strip) break;
            mu[i] = v;
            self(self, i + 1, removed + lambda[i] - v);
        }
    };
    rec(rec, 0, 0);
    memo.emplace(key, count);
    return count;
}

inline LRMap schur_product(const Partition& mu, const Partition& nu, int vars) {
    const int n = mu.size() + nu.size();
    auto shapes = partitions_of(n, vars);
    // Coefficient of x^κ in s_μ·s_ν, κ a partition.
    std::map<Partition, std::int64_t> f;
    for (const auto& kappa : shapes) {
        std::vector<int> k(static_cast<std::size_t>(vars));
        for (int i = 0; i < vars; ++i) k[static_cast<std::size_t>(i)] = kappa[static_cast<std::size_t>(i)];
        std::vector<int> alpha(static_cast<std::size_t>(vars), 0);
        std::int64_t coeff = 0;
        auto rec = [&](auto&& self, int i, int left) -> void {
            if (i == vars) {
                if (left != 0) return;
                std::vector<int> beta(static_cast<std::size_t>(vars));
                for (int j = 0; j < vars; ++j)
                    beta[static_cast<std::size_t>(j)] = k[static_cast<std::size_t>(j)] - alpha[static_cast<std::size_t>(j)];
                coeff += kostka(mu, alpha) * kostka(nu, beta);
                return;
            }
            for (int a = 0; a <= std::min(left, k[static_cast<std::size_t>(i)]); ++a) {
                alpha[static_cast<std::size_t>(i)] = a;
                self(self, i + 1, left - a);
            }
            alpha[static_cast<std::size_t>(i)] = 0;
        };
        rec(rec, 0, mu.size());
        if (coeff) f[kappa] = coeff;
    }
    // Peel from the lexicographically largest monomial down.
    std::vector<Partition> order = shapes;
    std::sort(order.begin(), order.end(), [](const Partition& a, const Partition& b) { return a.parts() > b.parts(); });
    LRMap out;
    std::map<Partition, std::int64_t> found;
    for (const auto& kappa : order) {
        std::int64_t c = f.count(kappa) ? f[kappa] : 0;
        for (const auto& [lambda, cl] : found) c -= cl * kostka(lambda, kappa.parts());
        if (c != 0) {
            found[kappa] = c;
            out[kappa] = static_cast<std::uint64_t>(c);
        }
    }
    return out;
}

}  // namespace qs::oracle
