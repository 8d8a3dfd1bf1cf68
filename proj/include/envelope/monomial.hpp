#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace envelope {

/// exp(2 pi i * numerator / 2^log2_denominator), always stored reduced:
/// numerator is odd, or the value is (0, 0).
class DyadicRoot {
 public:
  static constexpr std::uint32_t kMaxLog2 = 62;

  DyadicRoot() = default;
  /// Reduces numerator modulo 2^log2_denominator and to lowest terms.
  static DyadicRoot make(std::uint64_t numerator, std::uint32_t log2_denominator);
  /// Primitive 2^k-th root exp(2 pi i / 2^k).
  static DyadicRoot primitive(std::uint32_t k) { return make(1, k); }

  std::uint64_t numerator() const { return num_; }
  std::uint32_t log2_denominator() const { return log2_; }
  bool is_one() const { return log2_ == 0; }
  /// Multiplicative order, as a power of two exponent.
  std::uint32_t order_log2() const { return log2_; }

  DyadicRoot operator*(const DyadicRoot& o) const;
  DyadicRoot inverse() const;
  DyadicRoot pow(std::int64_t e) const;

  std::string to_string() const;

  friend bool operator==(const DyadicRoot&, const DyadicRoot&) = default;

 private:
  std::uint64_t num_ = 0;
  std::uint32_t log2_ = 0;
};

/// t_1^e_1 ... t_m^e_m * zeta, with t_i free transcendentals and zeta a
/// dyadic root of unity.
class SymScalar {
 public:
  static constexpr std::size_t kDefaultArity = 3;

  explicit SymScalar(std::size_t arity = kDefaultArity) : exps_(arity, 0) {}
  SymScalar(std::vector<std::int64_t> exps, DyadicRoot root) : exps_(std::move(exps)), root_(root) {}

  static SymScalar one(std::size_t arity = kDefaultArity) { return SymScalar(arity); }
  static SymScalar root_of_unity(DyadicRoot root, std::size_t arity = kDefaultArity) {
    return SymScalar(std::vector<std::int64_t>(arity, 0), root);
  }
  /// t_i (0-based index).
  static SymScalar generator(std::size_t i, std::size_t arity = kDefaultArity);

  std::size_t arity() const { return exps_.size(); }
  const std::vector<std::int64_t>& exponents() const { return exps_; }
  const DyadicRoot& root() const { return root_; }

  bool is_one() const;
  /// No transcendental part: a root of unity.
  bool is_torsion() const;

  /// Throws ArityMismatch for different arities.
  SymScalar operator*(const SymScalar& o) const;
  SymScalar operator/(const SymScalar& o) const;
  SymScalar inverse() const;
  SymScalar pow(std::int64_t e) const;

  std::string to_string() const;

  friend bool operator==(const SymScalar&, const SymScalar&) = default;

 private:
  std::vector<std::int64_t> exps_;
  DyadicRoot root_;
};

/// 2x2 monomial matrix diag(a, b) * w^swap with w = [[0,1],[1,0]]. With swap
/// set the matrix is [[0, a], [b, 0]].
struct MonomialElem {
  bool swap = false;
  SymScalar a, b;

  static MonomialElem identity(std::size_t arity = SymScalar::kDefaultArity);
  static MonomialElem diag(SymScalar a, SymScalar b);
  static MonomialElem anti(SymScalar a, SymScalar b);
  /// w itself.
  static MonomialElem swap_matrix(std::size_t arity = SymScalar::kDefaultArity);

  std::size_t arity() const { return a.arity(); }
  bool is_identity() const { return !swap && a.is_one() && b.is_one(); }
  /// b / a, the ratio of the diagonal factor.
  SymScalar ratio() const { return b / a; }

  std::string to_string() const;

  friend bool operator==(const MonomialElem&, const MonomialElem&) = default;
};

MonomialElem sym_mul(const MonomialElem& x, const MonomialElem& y);
MonomialElem sym_inv(const MonomialElem& x);
/// x^-1 y^-1 x y
MonomialElem sym_commutator(const MonomialElem& x, const MonomialElem& y);

}  // namespace envelope
