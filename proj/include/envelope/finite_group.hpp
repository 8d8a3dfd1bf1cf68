#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace envelope {

using ElementId = std::uint32_t;

/// Dense tables are kept up to this order; above it the permutation backend
/// fills product rows on demand.
inline constexpr std::size_t kDenseTableLimit = 512;
inline constexpr std::size_t kDefaultOrderCap = 20000;

/// Permutation of {0, ..., degree-1}, stored as its image list.
/// Products compose left to right: (p * q)(i) = q(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::uint32_t> images);
  static Permutation identity(std::size_t degree);

  /// Parses "(1 2 3)(4 5)" over points 1..degree. "()" and "" give the identity.
  static Permutation parse_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const { return images_.size(); }
  std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
  const std::vector<std::uint32_t>& images() const { return images_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;

  /// Cycle notation over 1-based points; identity prints as "()".
  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<std::uint32_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group on element ids 0..order-1. Immutable after construction
/// and safe to share between threads.
class FiniteGroup {
 public:
  using Table = std::vector<std::vector<ElementId>>;

  /// Validates closure, identity, inverses and associativity (exhaustive up
  /// to kDenseTableLimit, 10*order seeded random triples above).
  static GroupPtr from_cayley_table(const Table& table,
                                    std::vector<std::string> labels = {});

  /// Breadth-first closure of the generators; element 0 is the identity and
  /// labels are cycle notation.
  static GroupPtr from_permutation_generators(
      std::size_t degree, const std::vector<std::string>& generators,
      std::size_t order_cap = kDefaultOrderCap);
  static GroupPtr from_permutations(std::size_t degree,
                                    const std::vector<Permutation>& generators,
                                    std::size_t order_cap = kDefaultOrderCap);

  FiniteGroup(const FiniteGroup&) = delete;
  FiniteGroup& operator=(const FiniteGroup&) = delete;

  std::size_t order() const { return order_; }
  ElementId identity() const { return identity_; }
  ElementId mul(ElementId a, ElementId b) const;
  ElementId inv(ElementId a) const { return inverse_[a]; }
  /// [a,b] = a^-1 b^-1 a b
  ElementId commutator(ElementId a, ElementId b) const;
  /// b^-1 a b
  ElementId conjugate(ElementId a, ElementId by) const;
  bool commute(ElementId a, ElementId b) const { return mul(a, b) == mul(b, a); }

  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<ElementId> find_label(std::string_view label) const;

  bool has_dense_table() const { return !dense_.empty(); }
  bool is_permutation_group() const { return !perms_.empty(); }
  const Permutation& permutation(ElementId a) const { return perms_[a]; }
  std::size_t degree() const { return perms_.empty() ? 0 : perms_[0].degree(); }

  Table cayley_table() const;

 private:
  FiniteGroup() = default;
  void finish_labels();
  void build_permutation_backend();
  const std::vector<ElementId>& lazy_row(ElementId a) const;

  std::size_t order_ = 0;
  ElementId identity_ = 0;
  std::vector<ElementId> dense_;
  std::vector<ElementId> inverse_;
  std::vector<std::string> labels_;
  std::unordered_map<std::string, ElementId> label_index_;

  std::vector<Permutation> perms_;
  std::unordered_map<Permutation, ElementId, PermutationHash> perm_index_;
  mutable std::unique_ptr<std::once_flag[]> row_once_;
  mutable std::vector<std::vector<ElementId>> rows_;
};

}  // namespace envelope
