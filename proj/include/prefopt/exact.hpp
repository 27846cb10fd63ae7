#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prefopt/types.hpp"

namespace prefopt {

// One point on the reward-KL trade-off curve.
struct FrontierPoint {
  double kl = 0.0;               // nats
  double expected_reward = 0.0;  // under the ground-truth reward
  double beta = 0.0;
  std::string method_tag;
};

std::vector<double> uniform_prompt_weights(int n_prompts);

// log Z(x) = log sum_y pi_ref(y|x) * exp(r(x,y) / beta), via log-sum-exp.
double log_partition(const RewardTable& r, const PolicyTable& pi_ref, double beta, int x);

// pi*(y|x) = pi_ref(y|x) * exp(r(x,y)/beta) / Z(x): the closed-form solution
// of the KL-constrained reward maximization problem.
PolicyTable optimal_policy(const RewardTable& r, const PolicyTable& pi_ref, double beta);

// r(x,y) = beta * log(pi(y|x)/pi_ref(y|x)) + beta * log_z[x]: the inverse map
// from a policy back to the reward that induces it.
RewardTable reward_from_policy(const PolicyTable& pi, const PolicyTable& pi_ref, double beta,
                               std::span<const double> log_z);

// Equivalence-class projection: subtracts beta*log Z(x) per prompt, selecting
// the unique class member whose induced partition function is 1.
RewardTable project_reward(const RewardTable& r, const PolicyTable& pi_ref, double beta);

// sum_x w(x) * KL(pi(.|x) || pi_ref(.|x)); zero pi entries contribute zero,
// pi mass where pi_ref is zero is a domain error.
double kl_to_ref(const PolicyTable& pi, const PolicyTable& pi_ref, std::span<const double> prompt_weights);

// E_{x~w, y~pi}[r(x,y)] - beta * KL(pi || pi_ref).
double rl_objective(const PolicyTable& pi, const RewardTable& r, const PolicyTable& pi_ref, double beta,
                    std::span<const double> prompt_weights);

// Expected ground-truth reward of pi under uniform prompts.
double expected_true_reward(const PolicyTable& pi, const Instance& inst);

// (KL to pi_ref, expected true reward) under uniform prompt weights.
FrontierPoint frontier_point(const PolicyTable& pi, const Instance& inst, double beta, std::string_view tag);

}  // namespace prefopt
