#include "envelope/finite_group.hpp"

#include <random>
#include <sstream>

#include "envelope/error.hpp"

namespace envelope {

namespace {

std::string triple_text(std::size_t a, std::size_t b, std::size_t c) {
  std::ostringstream out;
  out << "(" << a << ", " << b << ", " << c << ")";
  return out.str();
}

}  // namespace

GroupPtr FiniteGroup::from_cayley_table(const Table& table, std::vector<std::string> labels) {
  const std::size_t n = table.size();
  if (n == 0) throw Error(ErrorCode::MalformedInput, "Cayley table is empty");
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      throw Error(ErrorCode::MalformedInput,
                  "Cayley table row " + std::to_string(i) + " has " +
                      std::to_string(table[i].size()) + " entries, expected " +
                      std::to_string(n));
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] >= n) {
        throw Error(ErrorCode::MalformedInput,
                    "Cayley table row " + std::to_string(i) + " column " +
                        std::to_string(j) + " holds " + std::to_string(table[i][j]) +
                        ", outside 0.." + std::to_string(n - 1));
      }
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::MalformedInput,
                "expected " + std::to_string(n) + " labels, got " + std::to_string(labels.size()));
  }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = n;
  g->dense_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g->dense_[i * n + j] = table[i][j];
  }
  auto at = [&](std::size_t a, std::size_t b) { return g->dense_[a * n + b]; };

  std::optional<ElementId> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) identity = static_cast<ElementId>(e);
  }
  if (!identity) throw Error(ErrorCode::NoIdentity, "Cayley table has no two-sided identity");
  g->identity_ = *identity;

  g->inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < n && !found; ++b) {
      if (at(a, b) == *identity && at(b, a) == *identity) {
        g->inverse_[a] = static_cast<ElementId>(b);
        found = true;
      }
    }
    if (!found) {
      throw Error(ErrorCode::MissingInverse,
                  "element " + std::to_string(a) + " has no two-sided inverse");
    }
  }

  auto check = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (at(at(a, b), c) != at(a, at(b, c))) {
      throw Error(ErrorCode::NotAssociative,
                  "associativity fails for triple " + triple_text(a, b, c));
    }
  };
  if (n <= kDenseTableLimit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c) check(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed0fa55u);
    for (std::size_t t = 0; t < 10 * n; ++t) check(rng() % n, rng() % n, rng() % n);
  }

  g->labels_ = std::move(labels);
  g->finish_labels();
  return g;
}

GroupPtr FiniteGroup::from_permutation_generators(std::size_t degree,
                                                  const std::vector<std::string>& generators,
                                                  std::size_t order_cap) {
  std::vector<Permutation> perms;
  perms.reserve(generators.size());
  for (const auto& text : generators) perms.push_back(Permutation::parse_cycles(text, degree));
  return from_permutations(degree, perms, order_cap);
}

GroupPtr FiniteGroup::from_permutations(std::size_t degree,
                                        const std::vector<Permutation>& generators,
                                        std::size_t order_cap) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  for (const auto& p : generators) {
    if (p.degree() != degree) {
      throw Error(ErrorCode::InvalidArgument, "generator degree does not match group degree");
    }
  }

  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->perms_.push_back(Permutation::identity(degree));
  g->perm_index_.emplace(g->perms_[0], 0);
  for (std::size_t head = 0; head < g->perms_.size(); ++head) {
    for (const auto& gen : generators) {
      Permutation next = g->perms_[head].then(gen);
      if (g->perm_index_.count(next)) continue;
      if (g->perms_.size() >= order_cap) {
        throw Error(ErrorCode::OrderCapExceeded,
                    "generated group exceeds the order cap of " + std::to_string(order_cap));
      }
      g->perm_index_.emplace(next, static_cast<ElementId>(g->perms_.size()));
      g->perms_.push_back(std::move(next));
    }
  }
  g->order_ = g->perms_.size();
  g->identity_ = 0;
  g->build_permutation_backend();
  for (const auto& p : g->perms_) g->labels_.push_back(p.to_cycles());
  g->finish_labels();
  return g;
}

void FiniteGroup::build_permutation_backend() {
  const std::size_t n = order_;
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = perm_index_.at(perms_[a].inverse());
  if (n <= kDenseTableLimit) {
    dense_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) dense_[a * n + b] = perm_index_.at(perms_[a].then(perms_[b]));
    }
  } else {
    row_once_ = std::make_unique<std::once_flag[]>(n);
    rows_.resize(n);
  }
}

void FiniteGroup::finish_labels() {
  if (labels_.empty()) {
    for (std::size_t a = 0; a < order_; ++a) labels_.push_back(std::to_string(a));
  }
  for (std::size_t a = 0; a < order_; ++a) {
    if (!label_index_.emplace(labels_[a], static_cast<ElementId>(a)).second) {
      throw Error(ErrorCode::MalformedInput, "duplicate element label \"" + labels_[a] + "\"");
    }
  }
}

const std::vector<ElementId>& FiniteGroup::lazy_row(ElementId a) const {
  std::call_once(row_once_[a], [this, a] {
    std::vector<ElementId> row(order_);
    for (std::size_t b = 0; b < order_; ++b) row[b] = perm_index_.at(perms_[a].then(perms_[b]));
    rows_[a] = std::move(row);
  });
  return rows_[a];
}

ElementId FiniteGroup::mul(ElementId a, ElementId b) const {
  if (!dense_.empty()) return dense_[static_cast<std::size_t>(a) * order_ + b];
  return lazy_row(a)[b];
}

ElementId FiniteGroup::commutator(ElementId a, ElementId b) const {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

ElementId FiniteGroup::conjugate(ElementId a, ElementId by) const {
  return mul(mul(inv(by), a), by);
}

std::optional<ElementId> FiniteGroup::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

FiniteGroup::Table FiniteGroup::cayley_table() const {
  Table table(order_, std::vector<ElementId>(order_));
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = 0; b < order_; ++b) {
      table[a][b] = mul(static_cast<ElementId>(a), static_cast<ElementId>(b));
    }
  }
  return table;
}

}  // namespace envelope
