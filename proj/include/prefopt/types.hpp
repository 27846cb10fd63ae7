#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace prefopt {

// Dense row-major [prompt][completion] table. All tables in this project are
// small (desk scale), so everything is plain double storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimensions");
  }

  double& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  double operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  std::span<double> row(int r) { return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)}; }
  std::span<const double> row(int r) const {
    return {data_.data() + static_cast<size_t>(r) * cols_, static_cast<size_t>(cols_)};
  }

  std::vector<double>& data() { return data_; }
  const std::vector<double>& data() const { return data_; }

  bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

// r(x, y) values; also used for implicit and learned rewards.
struct RewardTable {
  Matrix values;
};

// Per-prompt shift f(x); rewards differing by one are equivalent.
struct RewardShift {
  std::vector<double> per_prompt;
};

// Explicit conditional distribution pi(y|x). Rows sum to 1 within 1e-12.
struct PolicyTable {
  Matrix probs;
};

// A finite preference world: prompts, completions, reference policy and the
// ground-truth reward that generates preferences.
struct Instance {
  int n_prompts = 0;
  int completions_per_prompt = 0;
  PolicyTable pi_ref;
  RewardTable reward_true;
};

// Checksum binding datasets to the instance they were sampled from.
std::uint64_t instance_digest(const Instance& inst);
std::string digest_hex(std::uint64_t digest);
std::uint64_t digest_from_hex(const std::string& hex);

struct PreferencePair {
  int prompt = 0;
  int winner = 0;
  int loser = 0;
};

struct Ranking {
  int prompt = 0;
  std::vector<int> order;  // best first, distinct ids
};

// Population-mode record: exact win probability for the canonical pair y1 < y2.
struct SoftPairRecord {
  int prompt = 0;
  int y1 = 0;
  int y2 = 0;
  double p_y1_wins = 0.5;
};

enum class DatasetKind { pairs, rankings, soft };

std::string kind_name(DatasetKind kind);
DatasetKind parse_kind(const std::string& name);

struct PreferenceDataset {
  DatasetKind kind = DatasetKind::pairs;
  std::vector<PreferencePair> pairs;
  std::vector<Ranking> rankings;
  std::vector<SoftPairRecord> soft;
  std::uint64_t instance_digest = 0;

  size_t size() const {
    switch (kind) {
      case DatasetKind::pairs: return pairs.size();
      case DatasetKind::rankings: return rankings.size();
      case DatasetKind::soft: return soft.size();
    }
    return 0;
  }
};

// A dataset of the wrong kind was passed to a loss or trainer.
class WrongKindError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Distinct-pair rejection sampling hit its retry bound on a near-degenerate row.
class DegenerateSamplerError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Training produced a non-finite loss or gradient.
class DivergenceError : public std::runtime_error {
 public:
  DivergenceError(const std::string& what, int step) : std::runtime_error(what), step(step) {}
  int step = 0;
};

// Validation helpers shared across modules.
void check_prompt_id(const Matrix& table, int x);
void check_completion_id(const Matrix& table, int y);
void check_same_shape(const Matrix& a, const Matrix& b, const char* where);
void check_dataset_bound(const PreferenceDataset& data, const Instance& inst);

}  // namespace prefopt
