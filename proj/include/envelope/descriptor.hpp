#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "envelope/monomial.hpp"
#include "envelope/ordinal.hpp"

namespace envelope {

/// One of the scalar subgroups 1 = mu(1) < mu(2) < mu(4) < ... < mu(2^inf) < A,
/// where A is every SymScalar. These are totally ordered by inclusion.
class ScalarLevel {
 public:
  enum class Kind : std::uint8_t { Finite, AllTorsion, All };

  static ScalarLevel roots(std::uint32_t log2_order) { return {Kind::Finite, log2_order}; }
  static ScalarLevel all_torsion() { return {Kind::AllTorsion, 0}; }
  static ScalarLevel all() { return {Kind::All, 0}; }

  Kind kind() const { return kind_; }
  /// log2 of the order; meaningful for Finite levels only.
  std::uint32_t log2_order() const { return j_; }

  bool contains(const SymScalar& s) const;
  /// {a | a^2 in this}
  ScalarLevel sqrt_preimage() const;

  std::string to_string() const;

  friend auto operator<=>(const ScalarLevel&, const ScalarLevel&) = default;
  friend bool operator==(const ScalarLevel&, const ScalarLevel&) = default;

 private:
  ScalarLevel(Kind k, std::uint32_t j) : kind_(k), j_(j) {}
  Kind kind_;
  std::uint32_t j_;
};

/// {diag(a, b) w^s | a, b in entries, b/a in ratio, s in {0} or {0, 1}}.
/// Kept canonical with ratio <= entries, so equality and inclusion are
/// componentwise.
class MonomialSubgroup {
 public:
  static MonomialSubgroup make(ScalarLevel entries, ScalarLevel ratio, bool swap);
  static MonomialSubgroup trivial() { return make(ScalarLevel::roots(0), ScalarLevel::roots(0), false); }
  static MonomialSubgroup scalars() { return make(ScalarLevel::all(), ScalarLevel::roots(0), false); }
  static MonomialSubgroup diagonal() { return make(ScalarLevel::all(), ScalarLevel::all(), false); }
  static MonomialSubgroup monomial() { return make(ScalarLevel::all(), ScalarLevel::all(), true); }

  const ScalarLevel& entries() const { return entries_; }
  const ScalarLevel& ratio() const { return ratio_; }
  bool swap() const { return swap_; }

  bool contains(const MonomialElem& x) const;
  bool is_subset_of(const MonomialSubgroup& o) const;

  std::string to_string() const;

  friend bool operator==(const MonomialSubgroup&, const MonomialSubgroup&) = default;

 private:
  MonomialSubgroup(ScalarLevel e, ScalarLevel r, bool s) : entries_(e), ratio_(r), swap_(s) {}
  ScalarLevel entries_, ratio_;
  bool swap_;
};

MonomialSubgroup meet(const MonomialSubgroup& a, const MonomialSubgroup& b);
/// {x in X | x normalizes Y}
MonomialSubgroup normalizer_in(const MonomialSubgroup& x, const MonomialSubgroup& y);
/// {x in X | [x, k] in Y for all k in K}. K must normalize Y (checked;
/// throws Internal otherwise), which lets the quantifier over K reduce to its
/// diagonal part and the swap.
MonomialSubgroup commutator_condition(const MonomialSubgroup& x, const MonomialSubgroup& k,
                                      const MonomialSubgroup& y);

/// Largest index the descriptor chains evaluate: w+2.
SmallOrdinal descriptor_index_cap();

/// Finite levels computed before a limit is read off, and the trailing window
/// over which each component must be constant (or, ascending, translating
/// through mu(2^j) one step at a time, which converges to mu(2^inf)).
inline constexpr std::size_t kLimitDepth = 32;
inline constexpr std::size_t kLimitWindow = 8;

/// Iterated centralizers of K inside an ambient descriptor (with the
/// normalizer side-condition), or the upper central series when
/// `upper_central` is set (K = ambient, no normalizer meet).
class DescriptorSeries {
 public:
  DescriptorSeries(MonomialSubgroup ambient, MonomialSubgroup k, bool upper_central = false);

  /// Term at alpha <= w+2; IndexOutOfRange beyond.
  MonomialSubgroup at(SmallOrdinal alpha);
  /// Domain filtered at successor alpha: ambient meet N(T_b) for b < alpha.
  MonomialSubgroup domain(SmallOrdinal alpha);

 private:
  void grow(std::size_t n);
  void grow_tail(std::size_t n);

  MonomialSubgroup ambient_, k_;
  bool upper_central_;
  std::vector<MonomialSubgroup> finite_, domains_;
  std::vector<MonomialSubgroup> tail_, tail_domains_;  // indices w, w+1, ...
};

/// E_alpha of H inside the ambient descriptor, alpha <= w+2.
class DescriptorEnvelopes {
 public:
  DescriptorEnvelopes(MonomialSubgroup ambient, MonomialSubgroup h);

  MonomialSubgroup at(SmallOrdinal alpha);
  const MonomialSubgroup& h() const { return h_; }

 private:
  MonomialSubgroup step(const MonomialSubgroup& prev, SmallOrdinal alpha) const;

  MonomialSubgroup ambient_, h_;
  std::vector<MonomialSubgroup> finite_, tail_;
};

/// Least alpha <= w+2 with Z_alpha(x) = x, if any.
std::optional<SmallOrdinal> descriptor_hypercentral_degree(const MonomialSubgroup& x);

}  // namespace envelope
