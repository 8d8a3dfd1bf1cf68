#include "envelope/monomial.hpp"

#include "envelope/error.hpp"

namespace envelope {

DyadicRoot DyadicRoot::make(std::uint64_t numerator, std::uint32_t log2_denominator) {
  if (log2_denominator > kMaxLog2) {
    throw Error(ErrorCode::InvalidArgument,
                "dyadic denominator 2^" + std::to_string(log2_denominator) + " is too large");
  }
  std::uint64_t mask = (std::uint64_t{1} << log2_denominator) - 1;
  numerator &= mask;
  while (log2_denominator > 0 && numerator % 2 == 0) {
    numerator /= 2;
    --log2_denominator;
  }
  if (numerator == 0) log2_denominator = 0;
  DyadicRoot out;
  out.num_ = numerator;
  out.log2_ = log2_denominator;
  return out;
}

DyadicRoot DyadicRoot::operator*(const DyadicRoot& o) const {
  auto k = std::max(log2_, o.log2_);
  return make((num_ << (k - log2_)) + (o.num_ << (k - o.log2_)), k);
}

DyadicRoot DyadicRoot::inverse() const {
  return make((std::uint64_t{1} << log2_) - num_, log2_);
}

DyadicRoot DyadicRoot::pow(std::int64_t e) const {
  std::uint64_t mod = std::uint64_t{1} << log2_;
  // Exponent reduced modulo the order keeps the product within 64 bits.
  std::int64_t r = e % static_cast<std::int64_t>(mod);
  if (r < 0) r += static_cast<std::int64_t>(mod);
  unsigned __int128 prod = static_cast<unsigned __int128>(num_) * static_cast<std::uint64_t>(r);
  return make(static_cast<std::uint64_t>(prod % mod), log2_);
}

std::string DyadicRoot::to_string() const {
  if (is_one()) return "1";
  return "z(" + std::to_string(num_) + "/" + std::to_string(std::uint64_t{1} << log2_) + ")";
}

SymScalar SymScalar::generator(std::size_t i, std::size_t arity) {
  if (i >= arity) throw Error(ErrorCode::InvalidArgument, "generator index out of range");
  SymScalar s(arity);
  s.exps_[i] = 1;
  return s;
}

bool SymScalar::is_one() const { return is_torsion() && root_.is_one(); }

bool SymScalar::is_torsion() const {
  for (auto e : exps_) {
    if (e != 0) return false;
  }
  return true;
}

SymScalar SymScalar::operator*(const SymScalar& o) const {
  if (arity() != o.arity()) {
    throw Error(ErrorCode::ArityMismatch, "scalar arities " + std::to_string(arity()) + " and " +
                                              std::to_string(o.arity()) + " differ");
  }
  SymScalar out(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] += o.exps_[i];
  out.root_ = root_ * o.root_;
  return out;
}

SymScalar SymScalar::inverse() const {
  SymScalar out(*this);
  for (auto& e : out.exps_) e = -e;
  out.root_ = root_.inverse();
  return out;
}

SymScalar SymScalar::operator/(const SymScalar& o) const { return *this * o.inverse(); }

SymScalar SymScalar::pow(std::int64_t e) const {
  SymScalar out(*this);
  for (auto& x : out.exps_) x *= e;
  out.root_ = root_.pow(e);
  return out;
}

std::string SymScalar::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += "t" + std::to_string(i + 1);
    if (exps_[i] != 1) out += "^" + std::to_string(exps_[i]);
  }
  if (!root_.is_one()) {
    if (!out.empty()) out += "*";
    out += root_.to_string();
  }
  return out.empty() ? "1" : out;
}

MonomialElem MonomialElem::identity(std::size_t arity) {
  return {false, SymScalar::one(arity), SymScalar::one(arity)};
}

MonomialElem MonomialElem::diag(SymScalar a, SymScalar b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "entry arities differ");
  return {false, std::move(a), std::move(b)};
}

MonomialElem MonomialElem::anti(SymScalar a, SymScalar b) {
  if (a.arity() != b.arity()) throw Error(ErrorCode::ArityMismatch, "entry arities differ");
  return {true, std::move(a), std::move(b)};
}

MonomialElem MonomialElem::swap_matrix(std::size_t arity) {
  return {true, SymScalar::one(arity), SymScalar::one(arity)};
}

std::string MonomialElem::to_string() const {
  return std::string(swap ? "anti(" : "diag(") + a.to_string() + ", " + b.to_string() + ")";
}

// diag(a,b) w^s * diag(c,d) w^t = diag(a,b) * sigma^s(diag(c,d)) * w^(s+t),
// where sigma swaps the diagonal entries.
MonomialElem sym_mul(const MonomialElem& x, const MonomialElem& y) {
  const auto& c = x.swap ? y.b : y.a;
  const auto& d = x.swap ? y.a : y.b;
  return {x.swap != y.swap, x.a * c, x.b * d};
}

// (d w^s)^-1 = w^s d^-1 = sigma^s(d^-1) w^s
MonomialElem sym_inv(const MonomialElem& x) {
  if (x.swap) return {true, x.b.inverse(), x.a.inverse()};
  return {false, x.a.inverse(), x.b.inverse()};
}

MonomialElem sym_commutator(const MonomialElem& x, const MonomialElem& y) {
  return sym_mul(sym_mul(sym_inv(x), sym_inv(y)), sym_mul(x, y));
}

}  // namespace envelope
