#include "prefopt/taskgen.hpp"

#include <cmath>
#include <vector>

#include "prefopt/prefmodel.hpp"
#include "prefopt/rng.hpp"

namespace prefopt {

namespace {

int draw_distinct(Rng& rng, std::span<const double> row, int avoid) {
  for (int attempt = 0; attempt < kMaxDistinctRetries; ++attempt) {
    const int y = rng.categorical(row);
    if (y != avoid) return y;
  }
  throw DegenerateSamplerError(
      "sampler row is (near-)degenerate: could not draw a distinct completion in " +
      std::to_string(kMaxDistinctRetries) + " tries");
}

}  // namespace

Instance gen_instance(int n_prompts, int n_completions, double reward_scale, double ref_concentration,
                      std::uint64_t seed) {
  if (n_prompts < 1) throw std::invalid_argument("gen_instance: need at least one prompt");
  if (n_completions < 2) throw std::invalid_argument("gen_instance: need at least two completions");
  if (reward_scale < 0.0) throw std::invalid_argument("gen_instance: reward_scale must be nonnegative");
  if (!(ref_concentration > 0.0)) throw std::invalid_argument("gen_instance: concentration must be positive");

  Rng rng(seed);
  Instance inst;
  inst.n_prompts = n_prompts;
  inst.completions_per_prompt = n_completions;
  inst.pi_ref.probs = Matrix(n_prompts, n_completions);
  inst.reward_true.values = Matrix(n_prompts, n_completions);

  for (int x = 0; x < n_prompts; ++x) {
    const auto row = rng.dirichlet(ref_concentration, n_completions);
    for (int y = 0; y < n_completions; ++y) inst.pi_ref.probs(x, y) = row[y];
  }
  for (int x = 0; x < n_prompts; ++x) {
    for (int y = 0; y < n_completions; ++y) {
      inst.reward_true.values(x, y) = reward_scale * (2.0 * rng.uniform01() - 1.0);
    }
  }
  return inst;
}

PreferenceDataset sample_pairs(const Instance& inst, const PolicyTable& sampler, int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_pairs: need at least one record");
  check_same_shape(sampler.probs, inst.pi_ref.probs, "sample_pairs");

  Rng rng(seed);
  PreferenceDataset data;
  data.kind = DatasetKind::pairs;
  data.instance_digest = instance_digest(inst);
  data.pairs.reserve(static_cast<size_t>(n));

  for (int i = 0; i < n; ++i) {
    const int x = rng.uniform_below(inst.n_prompts);
    const auto row = sampler.probs.row(x);
    const int y1 = rng.categorical(row);
    const int y2 = draw_distinct(rng, row, y1);
    const double p1 = bt_prob(inst.reward_true, x, y1, y2);
    const bool first_wins = rng.uniform01() < p1;
    data.pairs.push_back({x, first_wins ? y1 : y2, first_wins ? y2 : y1});
  }
  return data;
}

PreferenceDataset sample_rankings(const Instance& inst, const PolicyTable& sampler, int n, int k,
                                  std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_rankings: need at least one record");
  if (k < 2 || k > inst.completions_per_prompt) {
    throw std::invalid_argument("sample_rankings: K must be in [2, completions_per_prompt]");
  }
  check_same_shape(sampler.probs, inst.pi_ref.probs, "sample_rankings");

  Rng rng(seed);
  PreferenceDataset data;
  data.kind = DatasetKind::rankings;
  data.instance_digest = instance_digest(inst);
  data.rankings.reserve(static_cast<size_t>(n));

  std::vector<int> chosen;
  std::vector<int> remaining;
  std::vector<double> rewards;
  for (int i = 0; i < n; ++i) {
    const int x = rng.uniform_below(inst.n_prompts);
    const auto row = sampler.probs.row(x);

    chosen.clear();
    for (int j = 0; j < k; ++j) {
      int y = -1;
      int attempt = 0;
      for (; attempt < kMaxDistinctRetries; ++attempt) {
        y = rng.categorical(row);
        bool duplicate = false;
        for (int c : chosen) duplicate |= (c == y);
        if (!duplicate) break;
      }
      if (attempt == kMaxDistinctRetries) {
        throw DegenerateSamplerError("sampler row is (near-)degenerate: could not draw " +
                                     std::to_string(k) + " distinct completions");
      }
      chosen.push_back(y);
    }

    // Sequential Plackett-Luce draw: pick the next-ranked completion from the
    // remaining set with probability proportional to exp(r).
    remaining = chosen;
    Ranking rec;
    rec.prompt = x;
    while (!remaining.empty()) {
      rewards.clear();
      for (int y : remaining) rewards.push_back(inst.reward_true.values(x, y));
      const int pick = rng.categorical_from_logits(rewards);
      rec.order.push_back(remaining[pick]);
      remaining.erase(remaining.begin() + pick);
    }
    data.rankings.push_back(std::move(rec));
  }
  return data;
}

PreferenceDataset enumerate_soft_dataset(const Instance& inst) {
  PreferenceDataset data;
  data.kind = DatasetKind::soft;
  data.instance_digest = instance_digest(inst);
  const int m = inst.completions_per_prompt;
  data.soft.reserve(static_cast<size_t>(inst.n_prompts) * m * (m - 1) / 2);
  for (int x = 0; x < inst.n_prompts; ++x) {
    for (int y1 = 0; y1 < m; ++y1) {
      for (int y2 = y1 + 1; y2 < m; ++y2) {
        data.soft.push_back({x, y1, y2, bt_prob(inst.reward_true, x, y1, y2)});
      }
    }
  }
  return data;
}

}  // namespace prefopt
