#pragma once

#include <span>

#include "prefopt/types.hpp"

namespace prefopt {

// Numerically stable sigma(z) = 1 / (1 + exp(-z)).
double sigmoid(double z);

// softplus(z) = log(1 + exp(z)); -log sigma(z) == softplus(-z).
double softplus(double z);

// log sum_i exp(v_i); -inf entries are allowed and contribute nothing.
double log_sum_exp(std::span<const double> v);

// Sum with Neumaier compensation above this row length; plain below. Tables
// here are tiny, the compensated path is exercised by stress tests only.
inline constexpr size_t kCompensatedSumThreshold = 1024;
double accumulate_row(std::span<const double> v);

// Bradley-Terry win probability sigma(r(x,y1) - r(x,y2)).
double bt_prob(const RewardTable& r, int x, int y1, int y2);

// Plackett-Luce probability of a full ranking (best first) of a completion
// subset, evaluated in log space.
double pl_prob(const RewardTable& r, int x, std::span<const int> order);
double pl_log_prob(const RewardTable& r, int x, std::span<const int> order);

// r'(x,y) = r(x,y) + f(x): a member of the same equivalence class.
RewardTable shift_reward(const RewardTable& r, const RewardShift& f);

// Subtract the per-prompt weights-expectation so each row has zero weighted
// mean. A per-prompt shift, so output stays in the equivalence class of r.
RewardTable normalize_reward(const RewardTable& r, const PolicyTable& weights);

}  // namespace prefopt
