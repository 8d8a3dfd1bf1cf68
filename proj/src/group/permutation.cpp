#include <algorithm>
#include <cctype>
#include <sstream>

#include "envelope/error.hpp"
#include "envelope/finite_group.hpp"

namespace envelope {

Permutation::Permutation(std::vector<std::uint32_t> images)
    : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto image : images_) {
    if (image >= images_.size() || seen[image]) {
      throw Error(ErrorCode::InvalidArgument, "image list is not a bijection");
    }
    seen[image] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::size_t degree) {
  auto fail = [&](const std::string& why) {
    return Error(ErrorCode::MalformedCycleNotation,
                 "malformed cycle notation \"" + std::string(text) + "\": " + why);
  };

  std::vector<std::uint32_t> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<std::uint32_t>(i);
  std::vector<bool> moved(degree, false);

  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };

  skip_space();
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('");
    ++pos;
    std::vector<std::uint32_t> cycle;
    while (true) {
      skip_space();
      if (pos >= text.size()) throw fail("unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) {
        throw fail(std::string("unexpected character '") + text[pos] + "'");
      }
      std::uint64_t point = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        point = point * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (point > degree) throw fail("point exceeds degree " + std::to_string(degree));
        ++pos;
      }
      if (point == 0) throw fail("points are numbered from 1");
      cycle.push_back(static_cast<std::uint32_t>(point - 1));
    }
    for (auto p : cycle) {
      if (moved[p]) throw fail("point " + std::to_string(p + 1) + " appears twice");
      moved[p] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space();
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = next.images_[images_[i]];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out;
  out.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    out.images_[images_[i]] = static_cast<std::uint32_t>(i);
  }
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(images_.size(), false);
  bool any = false;
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    any = true;
    out << '(';
    std::size_t p = start;
    bool first = true;
    while (!done[p]) {
      done[p] = true;
      if (!first) out << ' ';
      out << (p + 1);
      first = false;
      p = images_[p];
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto v : p.images()) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

}  // namespace envelope
