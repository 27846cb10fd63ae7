#include "prefopt/types.hpp"

#include <bit>
#include <cstring>

#include "prefopt/rng.hpp"

namespace prefopt {

namespace {

std::uint64_t hash_doubles(std::uint64_t h, const std::vector<double>& values) {
  for (double v : values) {
    const std::uint64_t bits = std::bit_cast<std::uint64_t>(v);
    unsigned char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xff);
    h = fnv1a64(buf, sizeof buf, h);
  }
  return h;
}

}  // namespace

std::uint64_t instance_digest(const Instance& inst) {
  const std::uint32_t dims[2] = {static_cast<std::uint32_t>(inst.n_prompts),
                                 static_cast<std::uint32_t>(inst.completions_per_prompt)};
  std::uint64_t h = fnv1a64(dims, sizeof dims);
  h = hash_doubles(h, inst.pi_ref.probs.data());
  h = hash_doubles(h, inst.reward_true.values.data());
  return h;
}

std::string digest_hex(std::uint64_t digest) {
  static const char* hexdigits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hexdigits[digest & 0xf];
    digest >>= 4;
  }
  return out;
}

std::uint64_t digest_from_hex(const std::string& hex) {
  if (hex.size() != 16) throw std::invalid_argument("digest_from_hex: expected 16 hex chars");
  std::uint64_t v = 0;
  for (char c : hex) {
    v <<= 4;
    if (c >= '0' && c <= '9') v |= static_cast<std::uint64_t>(c - '0');
    else if (c >= 'a' && c <= 'f') v |= static_cast<std::uint64_t>(c - 'a' + 10);
    else if (c >= 'A' && c <= 'F') v |= static_cast<std::uint64_t>(c - 'A' + 10);
    else throw std::invalid_argument("digest_from_hex: bad hex character");
  }
  return v;
}

std::string kind_name(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::pairs: return "pairs";
    case DatasetKind::rankings: return "rankings";
    case DatasetKind::soft: return "soft";
  }
  throw std::invalid_argument("kind_name: unknown kind");
}

DatasetKind parse_kind(const std::string& name) {
  if (name == "pairs") return DatasetKind::pairs;
  if (name == "rankings") return DatasetKind::rankings;
  if (name == "soft") return DatasetKind::soft;
  throw std::invalid_argument("parse_kind: unknown dataset kind '" + name + "'");
}

void check_prompt_id(const Matrix& table, int x) {
  if (x < 0 || x >= table.rows()) throw std::invalid_argument("prompt id out of range");
}

void check_completion_id(const Matrix& table, int y) {
  if (y < 0 || y >= table.cols()) throw std::invalid_argument("completion id out of range");
}

void check_same_shape(const Matrix& a, const Matrix& b, const char* where) {
  if (!a.same_shape(b)) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

void check_dataset_bound(const PreferenceDataset& data, const Instance& inst) {
  if (data.instance_digest != instance_digest(inst)) {
    throw std::invalid_argument("dataset is bound to a different instance (digest mismatch)");
  }
}

}  // namespace prefopt
