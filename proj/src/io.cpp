#include "prefopt/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace prefopt {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j, int rows, int cols) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) {
    throw std::runtime_error("instance file: bad table row count");
  }
  Matrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const auto& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols) {
      throw std::runtime_error("instance file: bad table column count");
    }
    for (int c = 0; c < cols; ++c) m(r, c) = row[c].get<double>();
  }
  return m;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open for reading: " + path);
  return in;
}

}  // namespace

void save_instance(const Instance& inst, const std::string& path) {
  json j;
  j["n_prompts"] = inst.n_prompts;
  j["completions_per_prompt"] = inst.completions_per_prompt;
  j["pi_ref"] = matrix_to_json(inst.pi_ref.probs);
  j["reward_true"] = matrix_to_json(inst.reward_true.values);
  j["digest"] = digest_hex(instance_digest(inst));
  auto out = open_out(path);
  out << j.dump() << "\n";
}

Instance load_instance(const std::string& path) {
  auto in = open_in(path);
  json j = json::parse(in);
  Instance inst;
  inst.n_prompts = j.at("n_prompts").get<int>();
  inst.completions_per_prompt = j.at("completions_per_prompt").get<int>();
  inst.pi_ref.probs = matrix_from_json(j.at("pi_ref"), inst.n_prompts, inst.completions_per_prompt);
  inst.reward_true.values = matrix_from_json(j.at("reward_true"), inst.n_prompts, inst.completions_per_prompt);
  const auto stored = digest_from_hex(j.at("digest").get<std::string>());
  if (stored != instance_digest(inst)) {
    throw std::runtime_error("instance file is corrupt: digest mismatch in " + path);
  }
  return inst;
}

void save_dataset(const PreferenceDataset& data, const std::string& path) {
  auto out = open_out(path);
  json header;
  header["kind"] = kind_name(data.kind);
  header["instance_digest"] = digest_hex(data.instance_digest);
  out << header.dump() << "\n";
  switch (data.kind) {
    case DatasetKind::pairs:
      for (const auto& p : data.pairs) {
        out << json{{"x", p.prompt}, {"yw", p.winner}, {"yl", p.loser}}.dump() << "\n";
      }
      break;
    case DatasetKind::rankings:
      for (const auto& r : data.rankings) {
        out << json{{"x", r.prompt}, {"order", r.order}}.dump() << "\n";
      }
      break;
    case DatasetKind::soft:
      for (const auto& s : data.soft) {
        out << json{{"x", s.prompt}, {"y1", s.y1}, {"y2", s.y2}, {"p1", s.p_y1_wins}}.dump() << "\n";
      }
      break;
  }
}

PreferenceDataset load_dataset(const std::string& path) {
  auto in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("dataset file is empty: " + path);
  json header = json::parse(line);
  PreferenceDataset data;
  data.kind = parse_kind(header.at("kind").get<std::string>());
  data.instance_digest = digest_from_hex(header.at("instance_digest").get<std::string>());
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    switch (data.kind) {
      case DatasetKind::pairs:
        data.pairs.push_back({j.at("x").get<int>(), j.at("yw").get<int>(), j.at("yl").get<int>()});
        break;
      case DatasetKind::rankings: {
        Ranking r;
        r.prompt = j.at("x").get<int>();
        r.order = j.at("order").get<std::vector<int>>();
        data.rankings.push_back(std::move(r));
        break;
      }
      case DatasetKind::soft:
        data.soft.push_back({j.at("x").get<int>(), j.at("y1").get<int>(), j.at("y2").get<int>(),
                             j.at("p1").get<double>()});
        break;
    }
  }
  if (data.size() == 0) throw std::runtime_error("dataset file has no records: " + path);
  return data;
}

PreferenceDataset load_dataset_for(const Instance& inst, const std::string& path) {
  auto data = load_dataset(path);
  check_dataset_bound(data, inst);
  return data;
}

void save_policy(const PolicyTable& policy, std::uint64_t digest, const std::string& path) {
  json j;
  j["n_prompts"] = policy.probs.rows();
  j["completions_per_prompt"] = policy.probs.cols();
  j["probs"] = matrix_to_json(policy.probs);
  j["instance_digest"] = digest_hex(digest);
  auto out = open_out(path);
  out << j.dump() << "\n";
}

PolicyTable load_policy_for(const Instance& inst, const std::string& path) {
  auto in = open_in(path);
  json j = json::parse(in);
  const int rows = j.at("n_prompts").get<int>();
  const int cols = j.at("completions_per_prompt").get<int>();
  if (rows != inst.n_prompts || cols != inst.completions_per_prompt) {
    throw std::invalid_argument("policy file shape does not match instance: " + path);
  }
  const auto stored = digest_from_hex(j.at("instance_digest").get<std::string>());
  if (stored != instance_digest(inst)) {
    throw std::invalid_argument("policy file is bound to a different instance: " + path);
  }
  return PolicyTable{matrix_from_json(j.at("probs"), rows, cols)};
}

}  // namespace prefopt
