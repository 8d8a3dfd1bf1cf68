#include <algorithm>
#include <unordered_map>

#include "envelope/error.hpp"
#include "envelope/group_ops.hpp"

namespace envelope {

CentralizerLattice centralizer_lattice(const GroupPtr& group, std::size_t order_cap) {
  const auto& g = *group;
  if (g.order() > order_cap) {
    throw Error(ErrorCode::OrderCapExceeded,
                "group of order " + std::to_string(g.order()) +
                    " exceeds the lattice cap of " + std::to_string(order_cap));
  }

  std::vector<CentralizerLatticeEntry> entries;
  std::unordered_map<Subgroup, std::size_t, SubgroupHash> index;
  auto add = [&](Subgroup s, std::vector<ElementId> witnesses) {
    if (index.count(s)) return false;
    index.emplace(s, entries.size());
    entries.push_back({std::move(s), std::move(witnesses)});
    return true;
  };

  // C_G({}) = G, witnessed by the identity.
  add(Subgroup::whole(group), {g.identity()});
  std::vector<std::size_t> singles;
  for (std::size_t x = 0; x < g.order(); ++x) {
    ElementId id = static_cast<ElementId>(x);
    if (add(centralizer(group, std::span<const ElementId>(&id, 1)), {id})) {
      singles.push_back(entries.size() - 1);
    }
  }

  // Intersection closure: meeting every entry with every single-element
  // centralizer reaches all finite intersections.
  for (std::size_t head = 0; head < entries.size(); ++head) {
    for (auto s : singles) {
      auto meet = entries[head].subgroup.intersect(entries[s].subgroup);
      if (index.count(meet)) continue;
      auto witnesses = entries[head].witnesses;
      witnesses.insert(witnesses.end(), entries[s].witnesses.begin(), entries[s].witnesses.end());
      std::sort(witnesses.begin(), witnesses.end());
      witnesses.erase(std::unique(witnesses.begin(), witnesses.end()), witnesses.end());
      add(std::move(meet), std::move(witnesses));
    }
  }

  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    if (a.subgroup.order() != b.subgroup.order()) return a.subgroup.order() > b.subgroup.order();
    return std::lexicographical_compare(a.subgroup.members().begin(), a.subgroup.members().end(),
                                        b.subgroup.members().begin(), b.subgroup.members().end());
  });

  // Longest strictly descending chain: entries are sorted by decreasing
  // order, so every proper superset precedes its subsets.
  std::vector<std::size_t> longest(entries.size(), 1);
  std::size_t best = entries.empty() ? 0 : 1;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const auto& big = entries[j].subgroup;
      const auto& small = entries[i].subgroup;
      if (big.order() > small.order() && small.is_subset_of(big)) {
        longest[i] = std::max(longest[i], longest[j] + 1);
      }
    }
    best = std::max(best, longest[i]);
  }

  CentralizerLattice lattice;
  lattice.entries = std::move(entries);
  lattice.max_chain_length = best;
  return lattice;
}

}  // namespace envelope
