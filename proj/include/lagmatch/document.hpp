/**
 * Input documents: JSON with optional top-level keys "fibration", "spinc",
 * "morse_cycle" and "query". Every integer field must be a JSON integer (or a
 * decimal string for values beyond 53 bits); floats are accepted only in
 * sampled matrices of a Conley-Zehnder query.
 */
#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lagmatch/cobordism_tqft.hpp"
#include "lagmatch/conley_zehnder.hpp"
#include "lagmatch/spinc_index.hpp"

namespace lagmatch {

struct SpinCEntry {
  SpinC spinc;
  std::optional<IntVector> beta;  ///< set when the entry was given by its Taubes class
};

struct GradingsQuery {
  IntVector c1;
  std::int64_t n_gamma = 0;
  int n = 0;
  int g = 0;
  std::optional<int> g1;
  std::optional<int> g2;
};

struct DescriptorDocument {
  std::optional<FibrationDescriptor> fibration;
  std::vector<SpinCEntry> spinc;
  std::optional<MorseCycle> morse_cycle;
  std::vector<std::vector<RealMatrix>> cz_paths;
  std::optional<GradingsQuery> gradings;
};

/// Throws SchemaError on shape or type violations, and the module errors
/// (NotSymplectic, InconsistentDescriptor, ...) on semantic ones.
DescriptorDocument parse_document(const nlohmann::json& doc);
DescriptorDocument parse_document_text(const std::string& text);

/// Fixture documents compiled into the binary.
std::vector<std::string> fixture_names();
/// std::out_of_range for an unknown name.
const std::string& fixture_text(const std::string& name);

}  // namespace lagmatch
