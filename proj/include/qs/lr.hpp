#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "qs/partition.hpp"

namespace qs {

using LRMap = std::map<Partition, std::uint64_t>;

// c^λ_{μν}: LR skew tableaux of shape λ/μ and content ν with lattice reverse
// reading word. Memoized; safe to call concurrently.
std::uint64_t lr_coefficient(const Partition& mu, const Partition& nu, const Partition& lambda);

// Δ_μ·Δ_ν = Σ c^λ_{μν} Δ_λ, optionally restricted to a box.
LRMap product_expand(const Partition& mu, const Partition& nu, std::optional<Box> box = std::nullopt);

// Δ_{λ/μ} = Σ_ν c^λ_{μν} Δ_ν; empty when μ ⊄ λ.
LRMap skew_expand(const Partition& lambda, const Partition& mu);

// Persisted memo. The file is a sequence of records
//   u32 key_len, key bytes ("mu|nu|lambda"), u32 value_len, value bytes (decimal).
// A missing file is a cold start. Both return the number of records handled.
std::size_t lr_cache_load(const std::string& path);
std::size_t lr_cache_save(const std::string& path);
std::size_t lr_cache_size();
void lr_cache_clear();

}  // namespace qs
