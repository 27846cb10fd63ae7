#include "prefopt/prefmodel.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace prefopt {

double sigmoid(double z) {
  if (z >= 0.0) {
    return 1.0 / (1.0 + std::exp(-z));
  }
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double softplus(double z) {
  if (z > 0.0) return z + std::log1p(std::exp(-z));
  return std::log1p(std::exp(z));
}

double log_sum_exp(std::span<const double> v) {
  double max = -std::numeric_limits<double>::infinity();
  for (double x : v) max = std::max(max, x);
  if (!std::isfinite(max)) return max;  // all -inf (or a stray inf/nan propagates)
  double sum = 0.0;
  for (double x : v) sum += std::exp(x - max);
  return max + std::log(sum);
}

double accumulate_row(std::span<const double> v) {
  if (v.size() <= kCompensatedSumThreshold) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  // Neumaier variant of Kahan summation.
  double s = 0.0, c = 0.0;
  for (double x : v) {
    const double t = s + x;
    if (std::abs(s) >= std::abs(x)) {
      c += (s - t) + x;
    } else {
      c += (x - t) + s;
    }
    s = t;
  }
  return s + c;
}

double bt_prob(const RewardTable& r, int x, int y1, int y2) {
  check_prompt_id(r.values, x);
  check_completion_id(r.values, y1);
  check_completion_id(r.values, y2);
  return sigmoid(r.values(x, y1) - r.values(x, y2));
}

double pl_log_prob(const RewardTable& r, int x, std::span<const int> order) {
  check_prompt_id(r.values, x);
  const int k = static_cast<int>(order.size());
  if (k < 2) throw std::invalid_argument("pl_prob: ranking needs at least two completions");
  for (int i = 0; i < k; ++i) {
    check_completion_id(r.values, order[i]);
    for (int j = i + 1; j < k; ++j) {
      if (order[i] == order[j]) throw std::invalid_argument("pl_prob: duplicate completion id in ranking");
    }
  }
  std::vector<double> rewards(order.size());
  for (int i = 0; i < k; ++i) rewards[i] = r.values(x, order[i]);
  double log_p = 0.0;
  for (int i = 0; i < k; ++i) {
    const std::span<const double> tail(rewards.data() + i, rewards.size() - i);
    log_p += rewards[i] - log_sum_exp(tail);
  }
  return log_p;
}

double pl_prob(const RewardTable& r, int x, std::span<const int> order) {
  return std::exp(pl_log_prob(r, x, order));
}

RewardTable shift_reward(const RewardTable& r, const RewardShift& f) {
  if (static_cast<int>(f.per_prompt.size()) != r.values.rows()) {
    throw std::invalid_argument("shift_reward: shift length does not match prompt count");
  }
  RewardTable out = r;
  for (int x = 0; x < out.values.rows(); ++x) {
    for (int y = 0; y < out.values.cols(); ++y) out.values(x, y) += f.per_prompt[x];
  }
  return out;
}

RewardTable normalize_reward(const RewardTable& r, const PolicyTable& weights) {
  check_same_shape(r.values, weights.probs, "normalize_reward");
  RewardTable out = r;
  std::vector<double> terms(static_cast<size_t>(r.values.cols()));
  for (int x = 0; x < r.values.rows(); ++x) {
    for (int y = 0; y < r.values.cols(); ++y) terms[y] = weights.probs(x, y) * r.values(x, y);
    const double mean = accumulate_row(terms);
    for (int y = 0; y < r.values.cols(); ++y) out.values(x, y) -= mean;
  }
  return out;
}

}  // namespace prefopt
