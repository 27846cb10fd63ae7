#pragma once

#include <cstdint>

#include "prefopt/types.hpp"

namespace prefopt {

// Distinct-completion rejection bound per record; hitting it means the
// sampler row is effectively a point mass.
inline constexpr int kMaxDistinctRetries = 1000;

// Random world: pi_ref rows from a symmetric Dirichlet, ground-truth rewards
// i.i.d. uniform on [-reward_scale, +reward_scale]. Bit-identical for
// identical arguments.
Instance gen_instance(int n_prompts, int n_completions, double reward_scale, double ref_concentration,
                      std::uint64_t seed);

// (x, y_w, y_l) records: prompt uniform, two distinct completions from the
// sampler, winner by Bradley-Terry under the ground-truth reward.
PreferenceDataset sample_pairs(const Instance& inst, const PolicyTable& sampler, int n, std::uint64_t seed);

// K-way rankings: K distinct completions from the sampler, then a full
// Plackett-Luce ranking under the ground-truth reward drawn by sequential
// sampling without replacement.
PreferenceDataset sample_rankings(const Instance& inst, const PolicyTable& sampler, int n, int k,
                                  std::uint64_t seed);

// Population dataset: one record per prompt per unordered completion pair
// with the exact Bradley-Terry win probability.
PreferenceDataset enumerate_soft_dataset(const Instance& inst);

}  // namespace prefopt
