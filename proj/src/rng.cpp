#include "prefopt/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace prefopt {

int Rng::uniform_below(int n) {
  if (n <= 0) throw std::invalid_argument("uniform_below: n must be positive");
  const std::uint64_t un = static_cast<std::uint64_t>(n);
  std::uint64_t mask = un - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    const std::uint64_t v = eng_() & mask;
    if (v < un) return static_cast<int>(v);
  }
}

double Rng::normal() {
  // Basic Box-Muller; two uniforms per draw, no cached second sample so the
  // stream position is a pure function of the call count.
  const double u1 = uniform_open01();
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

double Rng::gamma(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("gamma: alpha must be positive");
  if (alpha < 1.0) {
    // Boost: Gamma(a) = Gamma(a+1) * U^(1/a)
    const double g = gamma(alpha + 1.0);
    const double u = uniform_open01();
    return g * std::pow(u, 1.0 / alpha);
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x = normal();
    double v = 1.0 + c * x;
    if (v <= 0.0) continue;
    v = v * v * v;
    const double u = uniform_open01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

std::vector<double> Rng::dirichlet(double concentration, int m) {
  if (m <= 0) throw std::invalid_argument("dirichlet: dimension must be positive");
  std::vector<double> draw(static_cast<size_t>(m));
  double sum = 0.0;
  for (auto& g : draw) {
    g = gamma(concentration);
    // Keep every coordinate strictly positive even when tiny concentrations
    // underflow the gamma draw.
    if (g < 1e-300) g = 1e-300;
    sum += g;
  }
  for (auto& g : draw) g /= sum;
  return draw;
}

int Rng::categorical(std::span<const double> probs) {
  if (probs.empty()) throw std::invalid_argument("categorical: empty row");
  double u = uniform01();
  for (size_t k = 0; k + 1 < probs.size(); ++k) {
    if (u < probs[k]) return static_cast<int>(k);
    u -= probs[k];
  }
  return static_cast<int>(probs.size()) - 1;
}

int Rng::categorical_from_logits(std::span<const double> logits) {
  if (logits.empty()) throw std::invalid_argument("categorical_from_logits: empty row");
  double max = logits[0];
  for (double v : logits) max = std::max(max, v);
  double sum = 0.0;
  std::vector<double> w(logits.size());
  for (size_t k = 0; k < logits.size(); ++k) {
    w[k] = std::exp(logits[k] - max);
    sum += w[k];
  }
  double u = uniform01() * sum;
  for (size_t k = 0; k + 1 < w.size(); ++k) {
    if (u < w[k]) return static_cast<int>(k);
    u -= w[k];
  }
  return static_cast<int>(w.size()) - 1;
}

std::uint64_t fnv1a64(const void* bytes, size_t len, std::uint64_t basis) {
  const auto* p = static_cast<const unsigned char*>(bytes);
  std::uint64_t h = basis;
  for (size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

namespace {
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}
}  // namespace

std::uint64_t derive_seed(std::uint64_t master, std::string_view stream) {
  return splitmix64(master ^ fnv1a64(stream.data(), stream.size()));
}

}  // namespace prefopt
