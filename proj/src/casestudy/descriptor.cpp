#include "envelope/descriptor.hpp"

#include <algorithm>

#include "envelope/error.hpp"

namespace envelope {

bool ScalarLevel::contains(const SymScalar& s) const {
  switch (kind_) {
    case Kind::All: return true;
    case Kind::AllTorsion: return s.is_torsion();
    case Kind::Finite: return s.is_torsion() && s.root().log2_denominator() <= j_;
  }
  return false;
}

ScalarLevel ScalarLevel::sqrt_preimage() const {
  if (kind_ == Kind::Finite) return roots(j_ + 1);
  return *this;
}

std::string ScalarLevel::to_string() const {
  switch (kind_) {
    case Kind::All: return "A";
    case Kind::AllTorsion: return "mu(2^inf)";
    case Kind::Finite: return "mu(2^" + std::to_string(j_) + ")";
  }
  return "";
}

MonomialSubgroup MonomialSubgroup::make(ScalarLevel entries, ScalarLevel ratio, bool swap) {
  return MonomialSubgroup(entries, std::min(ratio, entries), swap);
}

bool MonomialSubgroup::contains(const MonomialElem& x) const {
  if (x.swap && !swap_) return false;
  return entries_.contains(x.a) && entries_.contains(x.b) && ratio_.contains(x.ratio());
}

bool MonomialSubgroup::is_subset_of(const MonomialSubgroup& o) const {
  return entries_ <= o.entries_ && ratio_ <= o.ratio_ && (!swap_ || o.swap_);
}

std::string MonomialSubgroup::to_string() const {
  return "{entries " + entries_.to_string() + ", ratio " + ratio_.to_string() +
         (swap_ ? ", with swap}" : ", diagonal}");
}

MonomialSubgroup meet(const MonomialSubgroup& a, const MonomialSubgroup& b) {
  return MonomialSubgroup::make(std::min(a.entries(), b.entries()), std::min(a.ratio(), b.ratio()),
                                a.swap() && b.swap());
}

namespace {

// Ratios r for which diag(r^-1, r) lies in Y: both entries in E_Y and r^2 in R_Y.
ScalarLevel swap_ratio_bound(const MonomialSubgroup& y) {
  return std::min(y.entries(), y.ratio().sqrt_preimage());
}

}  // namespace

// Diagonal elements normalize Y exactly when conjugating Y's swap coset
// stays in Y: d^-1 (f w) d = f diag(b/a, a/b) w. The swap always normalizes.
MonomialSubgroup normalizer_in(const MonomialSubgroup& x, const MonomialSubgroup& y) {
  if (!y.swap()) return x;
  return MonomialSubgroup::make(x.entries(), std::min(x.ratio(), swap_ratio_bound(y)), x.swap());
}

// For x = d w^s and k in K:
//   [d, f]   = 1
//   [d, f w] = diag(b/a, a/b)   needs b/a within swap_ratio_bound(Y)
//   [d w, f] = diag(u/v, v/u)   needs R_K within swap_ratio_bound(Y)
// with d = diag(a, b), f = diag(u, v),
// and [x, k1 k2] = [x, k2] k2^-1 [x, k1] k2 reduces K to these generators.
MonomialSubgroup commutator_condition(const MonomialSubgroup& x, const MonomialSubgroup& k,
                                      const MonomialSubgroup& y) {
  if (!k.is_subset_of(normalizer_in(MonomialSubgroup::monomial(), y))) {
    throw Error(ErrorCode::Internal, "commutator condition needs K to normalize Y: K = " +
                                         k.to_string() + ", Y = " + y.to_string());
  }
  auto bound = swap_ratio_bound(y);
  auto ratio = k.swap() ? std::min(x.ratio(), bound) : x.ratio();
  bool swap = x.swap() && k.ratio() <= bound;
  return MonomialSubgroup::make(x.entries(), ratio, swap);
}

SmallOrdinal descriptor_index_cap() { return SmallOrdinal::make(1, 2); }

namespace {

void require_in_range(SmallOrdinal alpha) {
  if (descriptor_index_cap() < alpha) {
    throw Error(ErrorCode::IndexOutOfRange,
                "descriptor chains stop at w+2, asked for " + alpha.to_string());
  }
}

ScalarLevel level_limit(const std::vector<ScalarLevel>& window, bool ascending) {
  if (std::all_of(window.begin(), window.end(), [&](const ScalarLevel& l) { return l == window.front(); })) {
    return window.front();
  }
  if (ascending) {
    bool translating = true;
    for (std::size_t i = 1; i < window.size(); ++i) {
      translating = translating && window[i - 1].kind() == ScalarLevel::Kind::Finite &&
                    window[i].kind() == ScalarLevel::Kind::Finite &&
                    window[i].log2_order() == window[i - 1].log2_order() + 1;
    }
    if (translating) return ScalarLevel::all_torsion();
  }
  throw Error(ErrorCode::Internal, "limit of the descriptor chain is not determined");
}

MonomialSubgroup limit_of(const std::vector<MonomialSubgroup>& seq, bool ascending) {
  if (seq.size() < kLimitWindow) throw Error(ErrorCode::Internal, "too few terms for a limit");
  std::vector<ScalarLevel> entries, ratios;
  std::vector<bool> swaps;
  for (std::size_t i = seq.size() - kLimitWindow; i < seq.size(); ++i) {
    entries.push_back(seq[i].entries());
    ratios.push_back(seq[i].ratio());
    swaps.push_back(seq[i].swap());
  }
  if (!std::all_of(swaps.begin(), swaps.end(), [&](bool s) { return s == swaps.front(); })) {
    throw Error(ErrorCode::Internal, "swap component of the descriptor chain does not settle");
  }
  return MonomialSubgroup::make(level_limit(entries, ascending), level_limit(ratios, ascending),
                                swaps.front());
}

}  // namespace

DescriptorSeries::DescriptorSeries(MonomialSubgroup ambient, MonomialSubgroup k, bool upper_central)
    : ambient_(ambient), k_(k), upper_central_(upper_central) {
  finite_.push_back(MonomialSubgroup::trivial());
  domains_.push_back(ambient_);
}

void DescriptorSeries::grow(std::size_t n) {
  while (finite_.size() <= n) {
    std::size_t i = finite_.size();
    auto domain = upper_central_ ? ambient_ : normalizer_in(domains_[i - 1], finite_[i - 1]);
    domains_.push_back(domain);
    finite_.push_back(commutator_condition(domain, k_, finite_[i - 1]));
  }
}

void DescriptorSeries::grow_tail(std::size_t n) {
  if (tail_.empty()) {
    grow(kLimitDepth);
    tail_.push_back(limit_of(finite_, true));
    // Domain before w: the meet of N(T_b) over every finite b, a descending
    // sequence read off the same way.
    std::vector<MonomialSubgroup> ds(domains_.begin() + 1, domains_.end());
    tail_domains_.push_back(upper_central_ ? ambient_ : limit_of(ds, false));
  }
  while (tail_.size() <= n) {
    auto domain = upper_central_ ? ambient_ : normalizer_in(tail_domains_.back(), tail_.back());
    tail_domains_.push_back(domain);
    tail_.push_back(commutator_condition(domain, k_, tail_[tail_.size() - 1]));
  }
}

MonomialSubgroup DescriptorSeries::at(SmallOrdinal alpha) {
  require_in_range(alpha);
  if (alpha.is_finite()) {
    grow(alpha.finite_part());
    return finite_[alpha.finite_part()];
  }
  grow_tail(alpha.finite_part());
  return tail_[alpha.finite_part()];
}

MonomialSubgroup DescriptorSeries::domain(SmallOrdinal alpha) {
  require_in_range(alpha);
  if (!alpha.is_successor()) {
    throw Error(ErrorCode::IndexNotSuccessor, "domains exist at successor indices only");
  }
  if (alpha.is_finite()) {
    grow(alpha.finite_part());
    return domains_[alpha.finite_part()];
  }
  grow_tail(alpha.finite_part());
  return tail_domains_[alpha.finite_part()];
}

DescriptorEnvelopes::DescriptorEnvelopes(MonomialSubgroup ambient, MonomialSubgroup h)
    : ambient_(ambient), h_(h) {
  finite_.push_back(ambient_);
}

MonomialSubgroup DescriptorEnvelopes::step(const MonomialSubgroup& prev, SmallOrdinal alpha) const {
  DescriptorSeries inner(prev, h_);
  return commutator_condition(prev, inner.at(alpha), inner.at(alpha.predecessor()));
}

MonomialSubgroup DescriptorEnvelopes::at(SmallOrdinal alpha) {
  require_in_range(alpha);
  if (alpha.is_finite()) {
    while (finite_.size() <= alpha.finite_part()) {
      finite_.push_back(step(finite_.back(), finite_.size()));
    }
    return finite_[alpha.finite_part()];
  }
  if (tail_.empty()) {
    at(kLimitDepth);
    std::vector<MonomialSubgroup> seq(finite_.begin(), finite_.begin() + kLimitDepth + 1);
    tail_.push_back(limit_of(seq, false));
  }
  while (tail_.size() <= alpha.finite_part()) {
    tail_.push_back(step(tail_.back(), SmallOrdinal::make(1, tail_.size())));
  }
  return tail_[alpha.finite_part()];
}

std::optional<SmallOrdinal> descriptor_hypercentral_degree(const MonomialSubgroup& x) {
  DescriptorSeries z(x, x, true);
  for (std::uint64_t k = 0; k <= kLimitDepth; ++k) {
    if (z.at(k) == x) return SmallOrdinal(k);
  }
  for (std::uint64_t k = 0; k <= 2; ++k) {
    auto alpha = SmallOrdinal::make(1, k);
    if (z.at(alpha) == x) return alpha;
  }
  return std::nullopt;
}

}  // namespace envelope
