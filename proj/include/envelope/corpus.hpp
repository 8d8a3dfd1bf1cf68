#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "envelope/casestudy.hpp"
#include "envelope/finite_group.hpp"
#include "envelope/harness.hpp"

namespace envelope {

/// ENVELOPE_ORDER_CAP if set to a positive integer, else kDefaultOrderCap.
std::size_t order_cap_from_env();

/// Catalog groups that are built from a multiplication table (everything but
/// S_n and A_n) stop at this order so the dense table stays bounded.
inline constexpr std::size_t kCatalogTableLimit = 4096;

/// Catalog constructors. Names: "C" (n), "D" (n = order, even), "Q" (n =
/// order, a power of two >= 8), "S" and "A" (n <= 6), "Heis" (p prime <= 7).
///
/// Labels: C_n uses e, r, r^2, ...; D_n and Q_n use r^k and r^k s (Q: x, y);
/// Heis_p uses [a,b,c] for the matrix with a, b above the diagonal and c in
/// the corner; S_n and A_n use cycle notation.
GroupPtr catalog(const std::string& name, const std::map<std::string, std::uint64_t>& parameters,
                 std::size_t order_cap = order_cap_from_env());

/// Names accepted by catalog().
const std::vector<std::string>& catalog_names();

/// Direct product with labels "(a,b,...)"; element ids are mixed radix with
/// the first factor most significant.
GroupPtr direct_product(const std::vector<GroupPtr>& factors,
                        std::size_t order_cap = order_cap_from_env());

struct GroupSpec {
  enum class Kind { Catalog, CayleyFile, PermutationFile };

  Kind kind = Kind::Catalog;
  std::string name_or_path;
  std::map<std::string, std::uint64_t> parameters;
  /// Non-empty for a direct product; the other fields are then unused.
  std::vector<GroupSpec> factors;

  bool is_product() const { return !factors.empty(); }

  /// "catalog:NAME:n", "cayley:PATH", "perm:PATH", factors joined by " x ".
  static GroupSpec parse(std::string_view text);
  /// {"kind": "catalog"|"cayley_file"|"permutation_file", "name"|"path",
  ///  "parameters": {...}} or {"factors": [...]}; a plain string is parsed.
  static GroupSpec from_json(const nlohmann::json& doc);
  nlohmann::json to_json() const;

  /// The parse() form, used as the cache key.
  std::string canonical() const;
  /// Short name for reports: C_5, D_8, Heis_3, C_2 x Q_8, or the file path.
  std::string display_name() const;
};

/// Dispatches to the catalog or a file loader. Results are cached by
/// canonical spec and cap; loader errors carry the file and line or row.
GroupPtr resolve(const GroupSpec& spec, std::size_t order_cap = order_cap_from_env());

/// Cayley-table JSON: {"order": n, "table": [[...]], "labels": [...]}.
GroupPtr load_cayley_file(const std::string& path);
GroupPtr parse_cayley_json(const nlohmann::json& doc, const std::string& source = "<json>");
nlohmann::json cayley_json(const FiniteGroup& group);
void save_cayley_file(const FiniteGroup& group, const std::string& path);

/// Text file: "degree d" then one generator per line in cycle notation.
/// Blank lines and lines starting with '#' are ignored.
GroupPtr load_permutation_file(const std::string& path, std::size_t order_cap = order_cap_from_env());
GroupPtr parse_permutation_text(std::string_view text, const std::string& source = "<text>",
                                std::size_t order_cap = order_cap_from_env());

/// Every catalog group of order <= 64, a set of small direct products,
/// S_5 and Heis_3.
std::vector<GroupSpec> default_corpus();

struct CaseStudyRunConfig {
  std::size_t samples = 1000;
  std::uint64_t seed = 7;
};

struct RunConfig {
  std::vector<GroupSpec> corpus = default_corpus();
  SubgroupPolicy subgroup_policy;
  std::vector<std::string> checks;  ///< empty means all
  std::uint32_t probe_depth = kDefaultProbeDepth;
  std::uint64_t seed = 0;
  std::string output_path = "-";  ///< "-" is stdout
  std::size_t order_cap = order_cap_from_env();
  unsigned threads = 0;
  bool timings = false;
  std::optional<CaseStudyRunConfig> casestudy;

  /// Unknown keys and ill-typed values are Config errors. A missing
  /// "corpus" key keeps the default corpus; an empty list means none.
  static RunConfig from_json(const nlohmann::json& doc);
  static RunConfig load(const std::string& path);
  nlohmann::json to_json() const;
};

struct RunOutcome {
  std::vector<CheckReport> reports;
  ReportSummary summary;
  std::string casestudy_table;
};

/// Resolves the corpus, sweeps it and runs the case-study audit if asked.
/// Throws Error on configuration or loading problems.
RunOutcome execute(const RunConfig& config);

/// execute() plus report writing. Returns 0 when nothing failed, 1 on any
/// Fail or Error report, 2 on configuration or loading errors. Diagnostics go
/// to `diagnostics`.
int run(const RunConfig& config, std::ostream& diagnostics);

}  // namespace envelope
