#include "envelope/ordinal.hpp"

#include <cctype>
#include <limits>

#include "envelope/error.hpp"

namespace envelope {

SmallOrdinal SmallOrdinal::make(std::uint32_t omega_coeff, std::uint64_t finite_part) {
  if (omega_coeff > kOmegaCap || (omega_coeff == kOmegaCap && finite_part > 0)) {
    throw Error(ErrorCode::OrdinalOutOfRange,
                "ordinal w*" + std::to_string(omega_coeff) +
                    (finite_part ? "+" + std::to_string(finite_part) : std::string()) +
                    " exceeds the cap w*" + std::to_string(kOmegaCap));
  }
  SmallOrdinal out;
  out.omega_ = omega_coeff;
  out.finite_ = finite_part;
  return out;
}

SmallOrdinal SmallOrdinal::parse(std::string_view text) {
  auto fail = [&] {
    return Error(ErrorCode::InvalidArgument, "malformed ordinal literal \"" + std::string(text) + "\"");
  };
  std::size_t pos = 0;
  auto number = [&]() -> std::uint64_t {
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) throw fail();
    std::uint64_t value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      auto digit = static_cast<std::uint64_t>(text[pos] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) throw fail();
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  };

  if (text.empty()) throw fail();
  if (text[0] != 'w') {
    auto n = number();
    if (pos != text.size()) throw fail();
    return SmallOrdinal(n);
  }
  pos = 1;
  std::uint64_t coeff = 1;
  if (pos < text.size() && text[pos] == '*') {
    ++pos;
    coeff = number();
    if (coeff == 0) throw fail();
  }
  std::uint64_t finite = 0;
  if (pos < text.size() && text[pos] == '+') {
    ++pos;
    finite = number();
  }
  if (pos != text.size()) throw fail();
  if (coeff > kOmegaCap) return make(kOmegaCap + 1, finite);  // raises OrdinalOutOfRange
  return make(static_cast<std::uint32_t>(coeff), finite);
}

SmallOrdinal SmallOrdinal::successor() const {
  if (finite_ == std::numeric_limits<std::uint64_t>::max()) {
    throw Error(ErrorCode::OrdinalOutOfRange, "finite part overflow");
  }
  return make(omega_, finite_ + 1);
}

SmallOrdinal SmallOrdinal::predecessor() const {
  if (!is_successor()) {
    throw Error(ErrorCode::IndexNotSuccessor, to_string() + " is not a successor ordinal");
  }
  return make(omega_, finite_ - 1);
}

std::string SmallOrdinal::to_string() const {
  if (omega_ == 0) return std::to_string(finite_);
  std::string out = "w";
  if (omega_ > 1) out += "*" + std::to_string(omega_);
  if (finite_ > 0) out += "+" + std::to_string(finite_);
  return out;
}

}  // namespace envelope
