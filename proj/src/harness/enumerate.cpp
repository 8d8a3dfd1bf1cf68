#include <algorithm>
#include <random>
#include <regex>
#include <unordered_set>

#include "envelope/error.hpp"
#include "envelope/group_ops.hpp"
#include "envelope/harness.hpp"

namespace envelope {

SubgroupPolicy SubgroupPolicy::parse(const std::string& text) {
  SubgroupPolicy p;
  if (text == "all") {
    p.kind = Kind::All;
    return p;
  }
  if (text == "representatives") {
    p.kind = Kind::Representatives;
    return p;
  }
  static const std::regex random_form(R"(\s*random\s*\(\s*(\d+)\s*,\s*(?:seed\s*=\s*)?(\d+)\s*\)\s*)");
  std::smatch m;
  if (std::regex_match(text, m, random_form)) {
    p.kind = Kind::Random;
    p.count = std::stoull(m[1]);
    p.seed = std::stoull(m[2]);
    return p;
  }
  throw Error(ErrorCode::Config, "unknown subgroup policy \"" + text + "\"");
}

std::string SubgroupPolicy::to_string() const {
  switch (kind) {
    case Kind::All: return "all";
    case Kind::Representatives: return "representatives";
    case Kind::Random: return "random(" + std::to_string(count) + ", " + std::to_string(seed) + ")";
  }
  return "";
}

namespace {

void sort_subgroups(std::vector<Subgroup>& subs) {
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return std::lexicographical_compare(a.members().begin(), a.members().end(),
                                        b.members().begin(), b.members().end());
  });
}

std::vector<std::uint32_t> element_orders(const FiniteGroup& g) {
  std::vector<std::uint32_t> orders(g.order());
  for (std::size_t x = 0; x < g.order(); ++x) {
    ElementId y = static_cast<ElementId>(x);
    std::uint32_t k = 1;
    while (y != g.identity()) {
      y = g.mul(y, static_cast<ElementId>(x));
      ++k;
    }
    orders[x] = k;
  }
  return orders;
}

std::vector<Subgroup> cyclic_subgroups(const GroupPtr& group) {
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> out;
  for (std::size_t x = 0; x < group->order(); ++x) {
    ElementId id = static_cast<ElementId>(x);
    auto c = generated_subgroup(group, std::span<const ElementId>(&id, 1));
    if (seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

// Joins with cyclic subgroups reach every subgroup: a subgroup generated by
// k elements is the join of one generated by k-1 of them and a cyclic one.
// With `reps`, only one member of each conjugacy class is expanded, which
// still reaches every class since conjugation commutes with joins.
std::vector<Subgroup> explore(const GroupPtr& group, bool reps) {
  const auto& g = *group;
  auto cyclics = cyclic_subgroups(group);
  auto orders = element_orders(g);

  auto signature = [&](const Subgroup& s) {
    std::vector<std::uint32_t> sig;
    sig.reserve(s.order());
    for (auto x : s.members()) sig.push_back(orders[x]);
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  auto conjugate_to = [&](const Subgroup& a, const Subgroup& b) {
    for (std::size_t x = 0; x < g.order(); ++x) {
      bool ok = true;
      for (auto m : a.members()) {
        if (!b.contains(g.conjugate(m, static_cast<ElementId>(x)))) {
          ok = false;
          break;
        }
      }
      if (ok) return true;
    }
    return false;
  };

  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> found;
  std::vector<std::vector<std::uint32_t>> signatures;
  auto admit = [&](Subgroup s) {
    if (!seen.insert(s).second) return;
    if (reps) {
      auto sig = signature(s);
      for (std::size_t i = 0; i < found.size(); ++i) {
        if (found[i].order() == s.order() && signatures[i] == sig && conjugate_to(s, found[i])) return;
      }
      signatures.push_back(std::move(sig));
    }
    found.push_back(std::move(s));
  };

  admit(Subgroup::trivial(group));
  for (std::size_t head = 0; head < found.size(); ++head) {
    auto base = small_generating_set(found[head]);
    for (const auto& c : cyclics) {
      if (c.is_subset_of(found[head])) continue;
      auto seed = base;
      auto cgens = small_generating_set(c);
      seed.insert(seed.end(), cgens.begin(), cgens.end());
      admit(generated_subgroup(group, seed));
    }
  }
  sort_subgroups(found);
  return found;
}

std::vector<Subgroup> random_subgroups(const GroupPtr& group, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&] { return static_cast<ElementId>(rng() % group->order()); };
  std::unordered_set<Subgroup, SubgroupHash> seen;
  std::vector<Subgroup> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<ElementId> gens{pick()};
    if (rng() & 1) gens.push_back(pick());
    auto s = generated_subgroup(group, gens);
    if (seen.insert(s).second) out.push_back(std::move(s));
  }
  sort_subgroups(out);
  return out;
}

}  // namespace

std::vector<Subgroup> subgroup_class_representatives(const GroupPtr& group) {
  return explore(group, true);
}

std::vector<Subgroup> enumerate_subgroups(const GroupPtr& group, const SubgroupPolicy& policy) {
  const auto n = group->order();
  switch (policy.kind) {
    case SubgroupPolicy::Kind::Random:
      return random_subgroups(group, policy.count, policy.seed);
    case SubgroupPolicy::Kind::All:
      if (n <= kExhaustiveLimit) return explore(group, false);
      [[fallthrough]];
    case SubgroupPolicy::Kind::Representatives:
      if (n <= kRepresentativesLimit) return explore(group, true);
      return random_subgroups(group, kFallbackSampleCount, policy.seed);
  }
  return {};
}

}  // namespace envelope
