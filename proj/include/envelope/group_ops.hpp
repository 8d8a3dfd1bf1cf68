#pragma once

#include <span>
#include <vector>

#include "envelope/finite_group.hpp"
#include "envelope/subgroup.hpp"

namespace envelope {

/// Smallest subgroup containing `seed`.
Subgroup generated_subgroup(const GroupPtr& group, std::span<const ElementId> seed);

/// Greedy generating set: each element is not in the span of the previous ones.
std::vector<ElementId> small_generating_set(const Subgroup& h);

/// {g in ambient | gs = sg for all s in S}
Subgroup centralizer(const Subgroup& ambient, std::span<const ElementId> s);
Subgroup centralizer(const GroupPtr& group, std::span<const ElementId> s);
/// Centralizer of a subgroup, tested against a generating set only.
Subgroup centralizer_of(const Subgroup& ambient, const Subgroup& h);

Subgroup center(const Subgroup& ambient);

/// {g in ambient | g^-1 H g = H}
Subgroup normalizer(const Subgroup& ambient, const Subgroup& h);

/// <[a,b] : a in A, b in B>
Subgroup commutator_subgroup(const Subgroup& a, const Subgroup& b);

Subgroup conjugate(const Subgroup& h, ElementId by);

bool is_abelian(const Subgroup& h);

struct DerivedSeries {
  std::vector<Subgroup> terms;  ///< X, X', X'', ... up to the first repeat
  bool solvable = false;
};

DerivedSeries derived_series(const Subgroup& x);
DerivedSeries derived_series(const GroupPtr& group);

struct CentralizerLatticeEntry {
  Subgroup subgroup;
  std::vector<ElementId> witnesses;  ///< C_G(witnesses) == subgroup
};

struct CentralizerLattice {
  std::vector<CentralizerLatticeEntry> entries;  ///< sorted by descending order
  std::size_t max_chain_length = 0;              ///< subgroups in a longest strict chain
};

/// All centralizers C_G(S), built as the intersection closure of the
/// single-element centralizers.
CentralizerLattice centralizer_lattice(const GroupPtr& group,
                                       std::size_t order_cap = kDefaultOrderCap);

}  // namespace envelope
