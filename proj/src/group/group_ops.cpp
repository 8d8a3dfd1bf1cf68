#include "envelope/group_ops.hpp"

#include <algorithm>

#include "envelope/error.hpp"

namespace envelope {

namespace {

void require_ids(const FiniteGroup& g, std::span<const ElementId> ids) {
  for (auto x : ids) {
    if (x >= g.order()) {
      throw Error(ErrorCode::InvalidArgument,
                  "element id " + std::to_string(x) + " is outside 0.." +
                      std::to_string(g.order() - 1));
    }
  }
}

// Breadth-first closure under right multiplication by the generators.
std::vector<ElementId> close(const FiniteGroup& g, const std::vector<ElementId>& gens,
                             std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<ElementId> members{g.identity()};
  seen[g.identity()] = 1;
  for (std::size_t head = 0; head < members.size(); ++head) {
    for (auto s : gens) {
      auto next = g.mul(members[head], s);
      if (!seen[next]) {
        seen[next] = 1;
        members.push_back(next);
      }
    }
  }
  return members;
}

}  // namespace

Subgroup generated_subgroup(const GroupPtr& group, std::span<const ElementId> seed) {
  const auto& g = *group;
  require_ids(g, seed);
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementId> gens;
  std::vector<ElementId> members{g.identity()};
  std::vector<char> in_span(g.order(), 0);
  in_span[g.identity()] = 1;
  for (auto s : seed) {
    if (in_span[s]) continue;
    gens.push_back(s);
    members = close(g, gens, seen);
    in_span = seen;
  }
  return Subgroup(group, std::move(members));
}

std::vector<ElementId> small_generating_set(const Subgroup& h) {
  const auto& g = h.group();
  std::vector<char> seen(g.order(), 0);
  std::vector<char> in_span(g.order(), 0);
  in_span[g.identity()] = 1;
  std::vector<ElementId> gens;
  std::size_t span_size = 1;
  for (auto x : h.members()) {
    if (span_size == h.order()) break;
    if (in_span[x]) continue;
    gens.push_back(x);
    span_size = close(g, gens, seen).size();
    in_span = seen;
  }
  return gens;
}

Subgroup centralizer(const Subgroup& ambient, std::span<const ElementId> s) {
  const auto& g = ambient.group();
  require_ids(g, s);
  std::vector<ElementId> out;
  for (auto x : ambient.members()) {
    bool ok = true;
    for (auto y : s) {
      if (!g.commute(x, y)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(ambient.parent(), std::move(out));
}

Subgroup centralizer(const GroupPtr& group, std::span<const ElementId> s) {
  return centralizer(Subgroup::whole(group), s);
}

Subgroup centralizer_of(const Subgroup& ambient, const Subgroup& h) {
  auto gens = small_generating_set(h);
  return centralizer(ambient, gens);
}

Subgroup center(const Subgroup& ambient) { return centralizer_of(ambient, ambient); }

Subgroup normalizer(const Subgroup& ambient, const Subgroup& h) {
  const auto& g = ambient.group();
  auto gens = small_generating_set(h);
  std::vector<ElementId> out;
  for (auto x : ambient.members()) {
    bool ok = true;
    for (auto y : gens) {
      if (!h.contains(g.conjugate(y, x))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return Subgroup(ambient.parent(), std::move(out));
}

Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b) {
  const auto& g = a.group();
  if (a.parent() != b.parent()) {
    throw Error(ErrorCode::InvalidArgument, "commutator of subgroups of different groups");
  }
  std::vector<char> seen(g.order(), 0);
  std::vector<ElementId> commutators;
  for (auto x : a.members()) {
    for (auto y : b.members()) {
      auto c = g.commutator(x, y);
      if (!seen[c]) {
        seen[c] = 1;
        commutators.push_back(c);
      }
    }
  }
  return generated_subgroup(a.parent(), commutators);
}

Subgroup conjugate(const Subgroup& h, ElementId by) {
  const auto& g = h.group();
  std::vector<ElementId> out;
  out.reserve(h.order());
  for (auto x : h.members()) out.push_back(g.conjugate(x, by));
  return Subgroup(h.parent(), std::move(out));
}

bool is_abelian(const Subgroup& h) {
  const auto& g = h.group();
  auto gens = small_generating_set(h);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      if (!g.commute(gens[i], gens[j])) return false;
    }
  }
  return true;
}

DerivedSeries derived_series(const Subgroup& x) {
  DerivedSeries series;
  series.terms.push_back(x);
  while (true) {
    const auto& last = series.terms.back();
    auto next = commutator_subgroup(last, last);
    if (next == last) break;
    series.terms.push_back(std::move(next));
  }
  series.solvable = series.terms.back().is_trivial();
  return series;
}

DerivedSeries derived_series(const GroupPtr& group) {
  return derived_series(Subgroup::whole(group));
}

}  // namespace envelope
