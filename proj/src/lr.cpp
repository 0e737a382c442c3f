#include "qs/lr.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace qs {

namespace {

class LRCache {
public:
    std::optional<std::uint64_t> find(const std::string& key) const {
        std::shared_lock lock(mutex_);
        auto it = map_.find(key);
        if (it == map_.end()) return std::nullopt;
        return it->second;
    }
    void insert(const std::string& key, std::uint64_t value) {
        std::unique_lock lock(mutex_);
        map_.emplace(key, value);
    }
    std::vector<std::pair<std::string, std::uint64_t>> snapshot() const {
        std::shared_lock lock(mutex_);
        std::vector<std::pair<std::string, std::uint64_t>> out(map_.begin(), map_.end());
        std::sort(out.begin(), out.end());
        return out;
    }
    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return map_.size();
    }
    void clear() {
        std::unique_lock lock(mutex_);
        map_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, std::uint64_t> map_;
};

LRCache& cache() {
    static LRCache instance;
    return instance;
}

// Depth-first count of LR fillings of λ/μ with content ν.
class TableauCounter {
public:
    TableauCounter(const Partition& lambda, const Partition& mu, const Partition& nu)
        : lambda_(lambda), mu_(mu), nu_(nu) {
        rows_ = lambda.parts().size();
        grid_.resize(rows_);
        for (std::size_t r = 0; r < rows_; ++r) {
            grid_[r].assign(static_cast<std::size_t>(lambda[r]), 0);
            for (int c = lambda[r] - 1; c >= mu[r]; --c) cells_.push_back({r, c});
        }
        count_.assign(nu.parts().size() + 1, 0);
    }

    std::uint64_t run() { return descend(0); }

private:
    struct Cell {
        std::size_t r;
        int c;
    };

    std::uint64_t descend(std::size_t k) {
        if (k == cells_.size()) return 1;
        const auto [r, c] = cells_[k];
        const auto cu = static_cast<std::size_t>(c);
        int lo = 1;
        if (r > 0 && c >= mu_[r - 1]) lo = grid_[r - 1][cu] + 1;
        int hi = std::min<int>(static_cast<int>(nu_.parts().size()), static_cast<int>(r) + 1);
        if (c + 1 < lambda_[r]) hi = std::min(hi, grid_[r][cu + 1]);
        std::uint64_t total = 0;
        for (int v = lo; v <= hi; ++v) {
            const auto vu = static_cast<std::size_t>(v);
            if (count_[vu] >= nu_[vu - 1]) continue;
            if (v > 1 && count_[vu] >= count_[vu - 1]) continue;
            ++count_[vu];
            grid_[r][cu] = v;
            total += descend(k + 1);
            grid_[r][cu] = 0;
            --count_[vu];
        }
        return total;
    }

    const Partition& lambda_;
    const Partition& mu_;
    const Partition& nu_;
    std::size_t rows_ = 0;
    std::vector<std::vector<int>> grid_;
    std::vector<Cell> cells_;
    std::vector<int> count_;
};

void fill_candidates(const Partition& mu, const Partition& nu, std::size_t row, std::size_t rows,
                     int remaining, int prev, std::vector<int>& cur, std::vector<Partition>& out) {
    if (row == rows) {
        if (remaining == 0) out.emplace_back(cur);
        return;
    }
    int lo = std::max(mu[row], nu[row]);
    int hi = std::min({prev, mu[row] + nu[0], nu[row] + mu[0], remaining});
    for (int v = hi; v >= lo; --v) {
        // Rows below can hold at most v each.
        if (static_cast<long>(remaining - v) > static_cast<long>(v) * static_cast<long>(rows - row - 1)) break;
        cur.push_back(v);
        fill_candidates(mu, nu, row + 1, rows, remaining - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::uint64_t lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda) {
    if (mu.is_generalized() || nu.is_generalized() || lambda.is_generalized()) return 0;
    if (lambda.size() != mu.size() + nu.size()) return 0;
    if (!contains(lambda, mu) || !contains(lambda, nu)) return 0;
    if (mu.empty() || nu.empty()) return 1;
    // Symmetric in μ,ν; the larger one as inner shape leaves fewer cells.
    const bool swap = nu.size() > mu.size() || (nu.size() == mu.size() && nu > mu);
    const Partition& inner = swap ? nu : mu;
    const Partition& content = swap ? mu : nu;
    std::string key = inner.str() + "|" + content.str() + "|" + lambda.str();
    if (auto hit = cache().find(key)) return *hit;
    std::uint64_t value = TableauCounter(lambda, inner, content).run();
    cache().insert(key, value);
    return value;
}

LRMap product_expand(const Partition& mu, const Partition& nu, std::optional<Box> box) {
    LRMap out;
    std::vector<Partition> candidates;
    std::vector<int> cur;
    const std::size_t rows = static_cast<std::size_t>(mu.length() + nu.length());
    fill_candidates(mu, nu, 0, rows, mu.size() + nu.size(), mu[0] + nu[0], cur, candidates);
    for (const auto& lambda : candidates) {
        if (box && !box->contains(lambda)) continue;
        if (auto c = lr_coefficient(mu, nu, lambda)) out.emplace(lambda, c);
    }
    return out;
}

LRMap skew_expand(const Partition& lambda, const Partition& mu) {
    LRMap out;
    if (!contains(lambda, mu)) return out;
    for (const auto& nu : partitions_of(lambda.size() - mu.size(), lambda.length(), lambda[0])) {
        if (!contains(lambda, nu)) continue;
        if (auto c = lr_coefficient(mu, nu, lambda)) out.emplace(nu, c);
    }
    return out;
}

std::size_t lr_cache_load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return 0;
    auto read_block = [&](std::string& s) {
        std::uint32_t len = 0;
        if (!in.read(reinterpret_cast<char*>(&len), sizeof len)) return false;
        s.resize(len);
        return static_cast<bool>(in.read(s.data(), len));
    };
    std::size_t n = 0;
    std::string key, value;
    while (read_block(key) && read_block(value)) {
        cache().insert(key, std::stoull(value));
        ++n;
    }
    return n;
}

std::size_t lr_cache_save(const std::string& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write LR cache " + path);
    auto write_block = [&](const std::string& s) {
        auto len = static_cast<std::uint32_t>(s.size());
        out.write(reinterpret_cast<const char*>(&len), sizeof len);
        out.write(s.data(), len);
    };
    auto entries = cache().snapshot();
    for (const auto& [key, value] : entries) {
        write_block(key);
        write_block(std::to_string(value));
    }
    return entries.size();
}

std::size_t lr_cache_size() { return cache().size(); }
void lr_cache_clear() { cache().clear(); }

}  // namespace qs
