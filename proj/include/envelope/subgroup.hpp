#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "envelope/finite_group.hpp"

namespace envelope {

/// Membership bitsets are kept when the parent order is at most this.
inline constexpr std::size_t kBitsetLimit = 4096;

/// A closed subset of a parent group, stored as a sorted id list.
///
/// Two subgroups compare only within the same parent; comparing subgroups of
/// different parents is an InvalidArgument error.
class Subgroup {
 public:
  /// Takes ownership of an id set already known to be closed. Members are
  /// sorted and deduplicated; closure is not re-verified (see validate()).
  Subgroup(GroupPtr parent, std::vector<ElementId> members);

  static Subgroup whole(const GroupPtr& parent);
  static Subgroup trivial(const GroupPtr& parent);

  const GroupPtr& parent() const { return parent_; }
  const FiniteGroup& group() const { return *parent_; }
  std::span<const ElementId> members() const { return members_; }
  std::size_t order() const { return members_.size(); }
  bool is_trivial() const { return members_.size() == 1; }

  bool contains(ElementId x) const;
  bool is_subset_of(const Subgroup& other) const;
  Subgroup intersect(const Subgroup& other) const;

  /// Re-checks identity, closure under products and inverses, id range and
  /// Lagrange. Throws InvalidArgument naming the first violation.
  void validate() const;

  std::vector<std::string> member_labels() const;

  friend bool operator==(const Subgroup& a, const Subgroup& b);

 private:
  void require_same_parent(const Subgroup& other) const;

  GroupPtr parent_;
  std::vector<ElementId> members_;
  std::vector<std::uint64_t> bits_;
};

struct SubgroupHash {
  std::size_t operator()(const Subgroup& h) const noexcept;
};

}  // namespace envelope
