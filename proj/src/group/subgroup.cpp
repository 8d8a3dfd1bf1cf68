#include "envelope/subgroup.hpp"

#include <algorithm>

#include "envelope/error.hpp"

namespace envelope {

Subgroup::Subgroup(GroupPtr parent, std::vector<ElementId> members)
    : parent_(std::move(parent)), members_(std::move(members)) {
  if (!parent_) throw Error(ErrorCode::InvalidArgument, "subgroup needs a parent group");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!members_.empty() && members_.back() >= parent_->order()) {
    throw Error(ErrorCode::InvalidArgument,
                "element id " + std::to_string(members_.back()) + " is outside the parent group");
  }
  if (parent_->order() <= kBitsetLimit) {
    bits_.assign((parent_->order() + 63) / 64, 0);
    for (auto x : members_) bits_[x >> 6] |= std::uint64_t{1} << (x & 63);
  }
}

Subgroup Subgroup::whole(const GroupPtr& parent) {
  std::vector<ElementId> all(parent->order());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ElementId>(i);
  return Subgroup(parent, std::move(all));
}

Subgroup Subgroup::trivial(const GroupPtr& parent) {
  return Subgroup(parent, {parent->identity()});
}

bool Subgroup::contains(ElementId x) const {
  if (x >= parent_->order()) return false;
  if (!bits_.empty()) return (bits_[x >> 6] >> (x & 63)) & 1u;
  return std::binary_search(members_.begin(), members_.end(), x);
}

bool Subgroup::is_subset_of(const Subgroup& other) const {
  require_same_parent(other);
  if (members_.size() > other.members_.size()) return false;
  for (auto x : members_) {
    if (!other.contains(x)) return false;
  }
  return true;
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  require_same_parent(other);
  std::vector<ElementId> out;
  std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                        other.members_.end(), std::back_inserter(out));
  return Subgroup(parent_, std::move(out));
}

void Subgroup::validate() const {
  const auto& g = *parent_;
  if (!contains(g.identity())) {
    throw Error(ErrorCode::InvalidArgument, "subgroup does not contain the identity");
  }
  for (auto a : members_) {
    if (!contains(g.inv(a))) {
      throw Error(ErrorCode::InvalidArgument,
                  "subgroup not closed under inverse at " + g.label(a));
    }
    for (auto b : members_) {
      if (!contains(g.mul(a, b))) {
        throw Error(ErrorCode::InvalidArgument,
                    "subgroup not closed under product at (" + g.label(a) + ", " + g.label(b) + ")");
      }
    }
  }
  if (g.order() % members_.size() != 0) {
    throw Error(ErrorCode::InvalidArgument, "subgroup order does not divide the group order");
  }
}

std::vector<std::string> Subgroup::member_labels() const {
  std::vector<std::string> out;
  out.reserve(members_.size());
  for (auto x : members_) out.push_back(parent_->label(x));
  return out;
}

void Subgroup::require_same_parent(const Subgroup& other) const {
  if (parent_ != other.parent_) {
    throw Error(ErrorCode::InvalidArgument, "subgroups of different parent groups are not comparable");
  }
}

bool operator==(const Subgroup& a, const Subgroup& b) {
  a.require_same_parent(b);
  return a.members_ == b.members_;
}

std::size_t SubgroupHash::operator()(const Subgroup& h) const noexcept {
  std::size_t seed = h.order();
  for (auto x : h.members()) seed ^= x + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2);
  return seed;
}

}  // namespace envelope
