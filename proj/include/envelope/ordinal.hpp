#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace envelope {

/// Ordinal omega*a + b with a <= 3; omega*3 itself is the largest value.
/// Anything larger is an OrdinalOutOfRange error, never truncated.
class SmallOrdinal {
 public:
  static constexpr std::uint32_t kOmegaCap = 3;

  constexpr SmallOrdinal() = default;
  /// Finite ordinal n.
  constexpr SmallOrdinal(std::uint64_t n) : finite_(n) {}  // NOLINT(implicit)

  static SmallOrdinal make(std::uint32_t omega_coeff, std::uint64_t finite_part);
  static SmallOrdinal omega(std::uint32_t coeff = 1) { return make(coeff, 0); }

  /// Grammar: "0", "3", "w", "w+1", "w*2", "w*2+5".
  static SmallOrdinal parse(std::string_view text);

  std::uint32_t omega_coeff() const { return omega_; }
  std::uint64_t finite_part() const { return finite_; }

  bool is_zero() const { return omega_ == 0 && finite_ == 0; }
  bool is_finite() const { return omega_ == 0; }
  bool is_limit() const { return omega_ > 0 && finite_ == 0; }
  bool is_successor() const { return finite_ > 0; }

  SmallOrdinal successor() const;
  /// Only defined for successor ordinals; throws IndexNotSuccessor otherwise.
  SmallOrdinal predecessor() const;

  std::string to_string() const;

  friend constexpr auto operator<=>(const SmallOrdinal&, const SmallOrdinal&) = default;
  friend constexpr bool operator==(const SmallOrdinal&, const SmallOrdinal&) = default;

 private:
  std::uint32_t omega_ = 0;
  std::uint64_t finite_ = 0;
};

}  // namespace envelope
