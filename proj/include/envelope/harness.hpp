#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "envelope/chain.hpp"

namespace envelope {

enum class Verdict { Pass, Fail, Skipped, Error };

const char* to_string(Verdict verdict);
Verdict parse_verdict(const std::string& text);

struct CheckReport {
  std::string check_id;
  std::string group_name;
  std::vector<std::string> subgroup_generators;
  nlohmann::json parameters = nlohmann::json::object();
  Verdict verdict = Verdict::Pass;
  /// Skip reason, error message, or a description of the violated relation.
  std::string reason;
  /// Element labels; present on every Fail.
  std::vector<std::string> witness;
  double runtime_ms = 0.0;

  /// Keys are emitted sorted. runtime_ms is included only on request, so
  /// that report bodies stay byte-identical across runs.
  nlohmann::json to_json(bool with_timing = false) const;
  static CheckReport from_json(const nlohmann::json& doc);
};

struct ReportSummary {
  std::size_t pass = 0, fail = 0, skipped = 0, error = 0;
  std::size_t total() const { return pass + fail + skipped + error; }
  bool ok() const { return fail == 0 && error == 0; }
  void add(Verdict v);
  nlohmann::json to_json() const;
};

ReportSummary summarize(const std::vector<CheckReport>& reports);

/// JSON lines: one header line (timestamp and run metadata), one line per
/// report, one summary line. Everything after the header is deterministic.
void write_report_lines(std::ostream& out, const std::vector<CheckReport>& reports,
                        const nlohmann::json& run_info, bool with_timing);

// ---- Checks -------------------------------------------------------------

namespace check_id {
inline constexpr const char* kDoubleCentralizerAbelian = "double_centralizer_abelian";
inline constexpr const char* kTowerRestriction = "tower_restriction";
inline constexpr const char* kCentralizerCenterAgreement = "centralizer_center_agreement";
inline constexpr const char* kEnvelopeNilpotency = "envelope_nilpotency";
inline constexpr const char* kEnvelopeStabilization = "envelope_stabilization";
inline constexpr const char* kEnvelopeSolvable = "envelope_solvable";
inline constexpr const char* kChainShape = "chain_shape";
inline constexpr const char* kHypercenterContainment = "hypercenter_containment";
inline constexpr const char* kHypercenterAscent = "hypercenter_ascent";
}  // namespace check_id

const std::vector<std::string>& all_check_ids();
bool is_check_id(const std::string& id);

inline constexpr std::uint32_t kDefaultProbeDepth = 5;

/// C(C(H)) is abelian whenever H is. Skipped for non-abelian H.
CheckReport check_double_centralizer_abelian(const Subgroup& h);

/// For A <= B <= C and lambda such that C^a_C(A) = Z_a(C) for all a <= lambda:
///   (i)   C^a_C(A) = C^a_C(B) = Z_a(C),
///   (ii)  C^a_B(A) = Z_a(B) = Z_a(C) meet B,
///   (iii) C^(lambda+1)_B(A) = C^(lambda+1)_C(A) meet B.
/// Skipped when the tower or the hypothesis fails.
CheckReport check_tower_restriction(const Subgroup& c, const Subgroup& b, const Subgroup& a,
                                    SmallOrdinal lambda);

/// C^a inside E_lambda(H) equals Z_a(E_lambda(H)) for every a <= lambda.
CheckReport check_centralizer_center_agreement(const Subgroup& h, SmallOrdinal lambda);

/// For H nilpotent of class c >= 1: class(E_c) = c and class(E_(c+1)) <= c.
CheckReport check_envelope_nilpotency(const Subgroup& h);

/// For H nilpotent of class c >= 1: E_j = E_c for c <= j <= c + probe_depth
/// (terms produced by repeated envelope_step) and E_w = E_c.
CheckReport check_envelope_stabilization(const Subgroup& h,
                                         std::uint32_t probe_depth = kDefaultProbeDepth);

/// For H nilpotent of class c: E_(c+1) is solvable.
CheckReport check_envelope_solvable(const Subgroup& h);

/// Monotonicity of both chains, H inside every envelope term, limit terms
/// equal to the union/intersection below them, successor first entries.
CheckReport check_chain_shape(const Subgroup& h);
CheckReport check_chain_shape(const Subgroup& h, const ChainRecord& envelopes,
                              const ChainRecord& centralizers);

/// Z_a(E_a) <= E_l for a <= l over the computed range.
CheckReport check_hypercenter_containment(const Subgroup& h);
/// Z_a(E_a) <= Z_l(E_l) for a <= l over the computed range.
CheckReport check_hypercenter_ascent(const Subgroup& h);

/// Re-runs the relation named by a Fail report on its witness. Returns true
/// when the witness still exhibits the violation.
bool replay_witness(const Subgroup& h, const CheckReport& report);
bool replay_witness(const Subgroup& h, const ChainRecord& envelopes,
                    const ChainRecord& centralizers, const CheckReport& report);

/// Re-checks the precondition a Skipped report names. True when the stated
/// precondition really is unmet.
bool replay_skip(const Subgroup& h, const CheckReport& report);

// ---- Subgroup enumeration and sweeps ------------------------------------

struct SubgroupPolicy {
  enum class Kind { All, Representatives, Random };
  Kind kind = Kind::Representatives;
  std::size_t count = 0;      ///< Random only
  std::uint64_t seed = 0;     ///< Random, and the fallback above kRepresentativesLimit

  static SubgroupPolicy parse(const std::string& text);  ///< "all", "representatives", "random(n, seed)"
  std::string to_string() const;
};

inline constexpr std::size_t kExhaustiveLimit = 64;
inline constexpr std::size_t kRepresentativesLimit = 2000;
inline constexpr std::size_t kFallbackSampleCount = 16;

/// Subgroups of `group` selected by `policy`, in a deterministic order
/// (by order, then member list). `all` degrades to representatives above
/// kExhaustiveLimit, and both degrade to kFallbackSampleCount random
/// subgroups drawn with `policy.seed` above kRepresentativesLimit.
std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, const SubgroupPolicy& policy);

/// Conjugacy-class representatives of all subgroups.
std::vector<Subgroup> subgroup_class_representatives(const GroupPtr& group);

struct NamedGroup {
  std::string name;
  GroupPtr group;
};

struct SweepOptions {
  SubgroupPolicy policy;
  std::vector<std::string> checks;  ///< empty means all
  std::uint32_t probe_depth = kDefaultProbeDepth;
  std::uint64_t seed = 0;
  unsigned threads = 0;  ///< 0 = hardware concurrency
};

/// Runs every selected check on every (group, subgroup) pair. Exceptions in
/// one item become Error reports; the sweep itself never aborts. Report
/// order is corpus order, then subgroup order, then check order.
std::vector<CheckReport> sweep(const std::vector<NamedGroup>& corpus, const SweepOptions& options);

/// All reports for one (group, subgroup) pair.
std::vector<CheckReport> run_checks(const std::string& group_name, const Subgroup& h,
                                    const SweepOptions& options);

}  // namespace envelope
