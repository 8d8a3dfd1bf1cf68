#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <json.hpp>

#include "envelope/ordinal.hpp"
#include "envelope/subgroup.hpp"

namespace envelope {

enum class ChainDirection { Ascending, Descending };

const char* to_string(ChainDirection direction);

struct ChainTerm {
  SmallOrdinal index;
  Subgroup subgroup;
};

/// Ordinal-indexed monotone sequence of subgroups of one parent group.
///
/// Terms are recorded for every index up to the point where the chain is
/// known to be constant, plus the limit ordinals (and their successors) up to
/// the requested maximum. Indices past the stabilization index that were not
/// recorded resolve to the stabilized term.
class ChainRecord {
 public:
  ChainRecord(ChainDirection direction, GroupPtr parent);

  ChainDirection direction() const { return direction_; }
  const GroupPtr& parent() const { return parent_; }
  const std::vector<ChainTerm>& terms() const { return terms_; }
  SmallOrdinal last_index() const { return terms_.back().index; }

  /// Indices must be appended in strictly increasing order.
  void append(SmallOrdinal index, Subgroup subgroup);
  /// Replaces the subgroup stored at a recorded index (used for fixtures).
  void replace(SmallOrdinal index, Subgroup subgroup);

  const Subgroup* find(SmallOrdinal index) const;
  /// Recorded term, or the stabilized term for indices beyond the
  /// stabilization index. Throws IndexOutOfRange otherwise.
  const Subgroup& term(SmallOrdinal index) const;

  const std::optional<SmallOrdinal>& stabilization() const { return stabilization_; }
  void set_stabilization(std::optional<SmallOrdinal> index) { stabilization_ = index; }

  /// Ascending chains only: element -> least recorded index containing it,
  /// for every element outside the initial term.
  const std::map<ElementId, SmallOrdinal>& first_entry() const { return first_entry_; }
  void compute_first_entry();
  void set_first_entry(std::map<ElementId, SmallOrdinal> entries) { first_entry_ = std::move(entries); }

  nlohmann::json to_json() const;
  static ChainRecord from_json(const GroupPtr& parent, const nlohmann::json& doc);

 private:
  ChainDirection direction_;
  GroupPtr parent_;
  std::vector<ChainTerm> terms_;
  std::optional<SmallOrdinal> stabilization_;
  std::map<ElementId, SmallOrdinal> first_entry_;
};

/// min(|G|, w), i.e. |G| for every finite group.
SmallOrdinal default_max_index(const FiniteGroup& group);

struct CentralSeries {
  ChainRecord chain;
  /// Least k with Z_k = ambient; absent when the series stops short of it.
  std::optional<std::uint64_t> nilpotency_class;
};

/// Z_0 = 1, Z_a = {g | [g, X] in Z_(a-1)}, unions at limits.
CentralSeries upper_central_series(const Subgroup& ambient,
                                   std::optional<SmallOrdinal> max_index = std::nullopt);
CentralSeries upper_central_series(const GroupPtr& group,
                                   std::optional<SmallOrdinal> max_index = std::nullopt);

/// Nilpotency class of a subgroup regarded as a group in its own right.
std::optional<std::uint64_t> nilpotency_class(const Subgroup& h);

/// Iterated centralizers of `h` inside `ambient`:
///   C^0 = 1,
///   C^a = {x in meet of N(C^b), b < a | [x, h] in C^(a-1)} for successor a,
///   C^l = union of C^b, b < l, for limit l.
ChainRecord iterated_centralizer_chain(const Subgroup& ambient, const Subgroup& h,
                                       std::optional<SmallOrdinal> max_index = std::nullopt);

struct EnvelopeStep {
  Subgroup envelope;
  Subgroup upper;  ///< C^a of h inside prev
  Subgroup lower;  ///< C^(a-1) of h inside prev
};

/// {g in prev | [g, C^a_prev(h)] in C^(a-1)_prev(h)} for successor a.
Subgroup envelope_step(const Subgroup& prev, const Subgroup& h, SmallOrdinal alpha);
EnvelopeStep envelope_step_detail(const Subgroup& prev, const Subgroup& h, SmallOrdinal alpha);

/// E_0 = ambient, successor terms by envelope_step, intersections at limits.
ChainRecord envelope_chain(const Subgroup& ambient, const Subgroup& h,
                           std::optional<SmallOrdinal> max_index = std::nullopt);

/// Least recorded index from which every recorded term is equal. Requires the
/// last two recorded terms to coincide; throws NotYetStable otherwise.
SmallOrdinal stabilization_index(const ChainRecord& chain);

}  // namespace envelope
