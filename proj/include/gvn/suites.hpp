#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "gvn/algebra.hpp"

namespace gvn {

struct Failure {
  std::string case_id;
  std::string expected;
  std::string got;
  double deviation = 0.0;
};

struct SuiteReport {
  std::string suite;
  nlohmann::json params = nlohmann::json::object();
  std::size_t cases = 0;
  std::vector<Failure> failures;
  double max_error = 0.0;
  /// Only filled in when timing is requested; it would break byte-identical reports.
  std::optional<double> wall_seconds;

  bool pass() const { return failures.empty(); }
  /// Records one check; a failure when deviation exceeds tolerance.
  void check(const std::string& case_id, double deviation, double tolerance,
             const std::string& expected = {}, const std::string& got = {});
  /// Records an exact check.
  void check(const std::string& case_id, bool ok, const std::string& expected = {},
             const std::string& got = {});
  nlohmann::json to_json() const;
};

/// Inputs a suite may use; unset values fall back to the suite's defaults.
struct SuiteParams {
  std::optional<std::pair<std::size_t, std::size_t>> tree;  // N, depth
  GraphPtr graph;                                           // from --graph
  std::optional<std::size_t> maxlen;
  std::optional<std::size_t> size;
  std::optional<std::size_t> cases;
  std::optional<std::size_t> n;
  std::optional<std::size_t> depth;
  std::optional<std::size_t> margin;
  std::uint64_t seed = 0;
};

const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
/// Throws InvalidParameter for an unknown suite.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

SuiteReport run_groupoid_axioms(const SuiteParams& p);
SuiteReport run_representation_homomorphism(const SuiteParams& p);
SuiteReport run_toeplitz_embed(const SuiteParams& p);
SuiteReport run_toeplitz_rewrite(const SuiteParams& p);
SuiteReport run_fock_relations(const SuiteParams& p);
SuiteReport run_anti_iso(const SuiteParams& p);
SuiteReport run_tree_fock_correspondence(const SuiteParams& p);

/// Vertices v, w; a loop at v; two parallel edges v -> w with tags 0 and 1.
DirectedGraph loop_multiedge_fixture();

}  // namespace gvn
