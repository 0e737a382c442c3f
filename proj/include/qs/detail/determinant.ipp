#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace qs {

namespace detail {

template <class T>
T laplace_rec(const std::vector<std::vector<T>>& a, std::size_t row, std::uint32_t used,
              std::unordered_map<std::uint32_t, T>& memo, const std::function<bool(const T&)>& is_zero) {
    const std::size_t n = a.size();
    if (row == n) return T(1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    T total = T(0);
    int sign = 1;
    for (std::size_t j = 0; j < n; ++j) {
        if (used & (1u << j)) continue;
        if (!is_zero(a[row][j])) {
            T minor = laplace_rec(a, row + 1, used | (1u << j), memo, is_zero);
            if (!is_zero(minor)) {
                if (sign > 0) total += a[row][j] * minor;
                else total -= a[row][j] * minor;
            }
        }
        sign = -sign;  // position among the unused columns
    }
    memo.emplace(used, total);
    return total;
}

}  // namespace detail

template <class T>
T laplace_determinant(const std::vector<std::vector<T>>& a, const std::function<bool(const T&)>& is_zero) {
    if (a.size() > 30) throw std::domain_error("determinant too large for Laplace expansion");
    std::unordered_map<std::uint32_t, T> memo;
    return detail::laplace_rec(a, 0, 0, memo, is_zero);
}

}  // namespace qs
