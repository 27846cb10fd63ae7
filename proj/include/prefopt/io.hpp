#pragma once

#include <string>

#include "prefopt/types.hpp"

namespace prefopt {

// Locale-independent shortest round-trip formatting (std::to_chars); the only
// double-to-text path used in CSV emission.
std::string format_double(double v);

// Instance file: one JSON object with row-major tables and the digest.
void save_instance(const Instance& inst, const std::string& path);
Instance load_instance(const std::string& path);

// Dataset file: JSON Lines, header {"kind", "instance_digest"} then one
// record per line.
void save_dataset(const PreferenceDataset& data, const std::string& path);
PreferenceDataset load_dataset(const std::string& path);

// Loads a dataset and rejects it unless its digest matches the instance.
PreferenceDataset load_dataset_for(const Instance& inst, const std::string& path);

// Policy file: JSON object mirroring the instance table layout.
void save_policy(const PolicyTable& policy, std::uint64_t digest, const std::string& path);
PolicyTable load_policy_for(const Instance& inst, const std::string& path);

}  // namespace prefopt
