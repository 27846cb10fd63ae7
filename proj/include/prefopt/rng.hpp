#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

namespace prefopt {

// Deterministic random source. mt19937_64 is fully specified by the standard;
// the distribution transforms are hand-rolled here because the std
// distributions are implementation-defined and would break bit-exact
// reproducibility contracts across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform on (0, 1]; safe as a log() argument.
  double uniform_open01() { return 1.0 - uniform01(); }

  // Uniform integer in [0, n); unbiased via bitmask rejection.
  int uniform_below(int n);

  double normal();

  // Gamma(shape alpha, scale 1), Marsaglia-Tsang.
  double gamma(double alpha);

  // Symmetric Dirichlet draw of dimension m, entries strictly positive.
  std::vector<double> dirichlet(double concentration, int m);

  // Draw an index from an (approximately normalized) probability row.
  int categorical(std::span<const double> probs);

  // Draw an index from unnormalized log-weights (softmax sampling).
  int categorical_from_logits(std::span<const double> logits);

 private:
  std::mt19937_64 eng_;
};

// Named sub-stream derivation so one master seed can drive independent
// instance/dataset/train/eval streams.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream);

std::uint64_t fnv1a64(const void* bytes, size_t len, std::uint64_t basis = 0xcbf29ce484222325ull);

}  // namespace prefopt
