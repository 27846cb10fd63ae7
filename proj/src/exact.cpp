#include "prefopt/exact.hpp"

#include <cmath>
#include <vector>

#include "prefopt/prefmodel.hpp"

namespace prefopt {

namespace {

void check_beta(double beta) {
  // beta = 0 makes the exponential form singular; reject rather than treat as a limit.
  if (!(beta > 0.0)) throw std::invalid_argument("beta must be strictly positive");
}

void check_weights(std::span<const double> w, int n_prompts, const char* where) {
  if (static_cast<int>(w.size()) != n_prompts) {
    throw std::invalid_argument(std::string(where) + ": prompt weight length mismatch");
  }
}

}  // namespace

std::vector<double> uniform_prompt_weights(int n_prompts) {
  if (n_prompts <= 0) throw std::invalid_argument("uniform_prompt_weights: need at least one prompt");
  return std::vector<double>(static_cast<size_t>(n_prompts), 1.0 / n_prompts);
}

double log_partition(const RewardTable& r, const PolicyTable& pi_ref, double beta, int x) {
  check_beta(beta);
  check_same_shape(r.values, pi_ref.probs, "log_partition");
  check_prompt_id(r.values, x);
  std::vector<double> terms(static_cast<size_t>(r.values.cols()));
  for (int y = 0; y < r.values.cols(); ++y) {
    terms[y] = std::log(pi_ref.probs(x, y)) + r.values(x, y) / beta;
  }
  return log_sum_exp(terms);
}

PolicyTable optimal_policy(const RewardTable& r, const PolicyTable& pi_ref, double beta) {
  check_beta(beta);
  check_same_shape(r.values, pi_ref.probs, "optimal_policy");
  PolicyTable out{Matrix(r.values.rows(), r.values.cols())};
  for (int x = 0; x < r.values.rows(); ++x) {
    const double log_z = log_partition(r, pi_ref, beta, x);
    for (int y = 0; y < r.values.cols(); ++y) {
      out.probs(x, y) = std::exp(std::log(pi_ref.probs(x, y)) + r.values(x, y) / beta - log_z);
    }
  }
  return out;
}

RewardTable reward_from_policy(const PolicyTable& pi, const PolicyTable& pi_ref, double beta,
                               std::span<const double> log_z) {
  check_beta(beta);
  check_same_shape(pi.probs, pi_ref.probs, "reward_from_policy");
  check_weights(log_z, pi.probs.rows(), "reward_from_policy");
  RewardTable out{Matrix(pi.probs.rows(), pi.probs.cols())};
  for (int x = 0; x < pi.probs.rows(); ++x) {
    for (int y = 0; y < pi.probs.cols(); ++y) {
      const double p = pi.probs(x, y);
      const double q = pi_ref.probs(x, y);
      if (p <= 0.0 && q > 0.0) {
        throw std::domain_error("reward_from_policy: zero policy mass where pi_ref is positive");
      }
      out.values(x, y) = beta * (std::log(p) - std::log(q)) + beta * log_z[x];
    }
  }
  return out;
}

RewardTable project_reward(const RewardTable& r, const PolicyTable& pi_ref, double beta) {
  check_beta(beta);
  check_same_shape(r.values, pi_ref.probs, "project_reward");
  RewardTable out = r;
  for (int x = 0; x < r.values.rows(); ++x) {
    const double shift = beta * log_partition(r, pi_ref, beta, x);
    for (int y = 0; y < r.values.cols(); ++y) out.values(x, y) -= shift;
  }
  return out;
}

double kl_to_ref(const PolicyTable& pi, const PolicyTable& pi_ref, std::span<const double> prompt_weights) {
  check_same_shape(pi.probs, pi_ref.probs, "kl_to_ref");
  check_weights(prompt_weights, pi.probs.rows(), "kl_to_ref");
  double total = 0.0;
  std::vector<double> terms(static_cast<size_t>(pi.probs.cols()));
  for (int x = 0; x < pi.probs.rows(); ++x) {
    for (int y = 0; y < pi.probs.cols(); ++y) {
      const double p = pi.probs(x, y);
      const double q = pi_ref.probs(x, y);
      if (p > 0.0 && q <= 0.0) {
        throw std::domain_error("kl_to_ref: pi has mass where pi_ref has none");
      }
      terms[y] = p > 0.0 ? p * (std::log(p) - std::log(q)) : 0.0;
    }
    total += prompt_weights[x] * accumulate_row(terms);
  }
  return total;
}

double rl_objective(const PolicyTable& pi, const RewardTable& r, const PolicyTable& pi_ref, double beta,
                    std::span<const double> prompt_weights) {
  check_beta(beta);
  check_same_shape(pi.probs, r.values, "rl_objective");
  double expected = 0.0;
  std::vector<double> terms(static_cast<size_t>(pi.probs.cols()));
  for (int x = 0; x < pi.probs.rows(); ++x) {
    for (int y = 0; y < pi.probs.cols(); ++y) terms[y] = pi.probs(x, y) * r.values(x, y);
    expected += prompt_weights[x] * accumulate_row(terms);
  }
  return expected - beta * kl_to_ref(pi, pi_ref, prompt_weights);
}

double expected_true_reward(const PolicyTable& pi, const Instance& inst) {
  check_same_shape(pi.probs, inst.reward_true.values, "expected_true_reward");
  const auto w = uniform_prompt_weights(inst.n_prompts);
  double expected = 0.0;
  std::vector<double> terms(static_cast<size_t>(pi.probs.cols()));
  for (int x = 0; x < pi.probs.rows(); ++x) {
    for (int y = 0; y < pi.probs.cols(); ++y) terms[y] = pi.probs(x, y) * inst.reward_true.values(x, y);
    expected += w[x] * accumulate_row(terms);
  }
  return expected;
}

FrontierPoint frontier_point(const PolicyTable& pi, const Instance& inst, double beta, std::string_view tag) {
  const auto w = uniform_prompt_weights(inst.n_prompts);
  FrontierPoint p;
  p.kl = kl_to_ref(pi, inst.pi_ref, w);
  p.expected_reward = expected_true_reward(pi, inst);
  p.beta = beta;
  p.method_tag = std::string(tag);
  return p;
}

}  // namespace prefopt
