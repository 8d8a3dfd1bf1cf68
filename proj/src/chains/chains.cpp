#include <functional>

#include "envelope/chain.hpp"
#include "envelope/error.hpp"
#include "envelope/group_ops.hpp"

namespace envelope {

namespace {

using StepFn = std::function<Subgroup(const ChainRecord&, SmallOrdinal)>;
using PermanentFn = std::function<bool(const ChainRecord&, SmallOrdinal)>;

Subgroup limit_term(const ChainRecord& record) {
  const auto& parent = record.parent();
  if (record.direction() == ChainDirection::Descending) {
    Subgroup meet = Subgroup::whole(parent);
    for (const auto& t : record.terms()) meet = meet.intersect(t.subgroup);
    return meet;
  }
  std::vector<ElementId> join;
  for (const auto& t : record.terms()) {
    join.insert(join.end(), t.subgroup.members().begin(), t.subgroup.members().end());
  }
  return Subgroup(parent, std::move(join));
}

std::optional<SmallOrdinal> next_limit(SmallOrdinal after, SmallOrdinal max) {
  auto coeff = after.omega_coeff() + 1;
  if (coeff > SmallOrdinal::kOmegaCap) return std::nullopt;
  auto limit = SmallOrdinal::omega(coeff);
  if (max < limit) return std::nullopt;
  return limit;
}

bool repeats_at(const ChainRecord& record, std::size_t i) {
  const auto& terms = record.terms();
  return i > 0 && terms[i].subgroup == terms[i - 1].subgroup;
}

// Records successor terms until `permanent` proves the chain constant from
// then on, then the following limit ordinal, and so on up to `max`.
ChainRecord drive(ChainDirection direction, const GroupPtr& parent, Subgroup initial,
                  SmallOrdinal max, const StepFn& step, const PermanentFn& permanent) {
  ChainRecord record(direction, parent);
  record.append(0, std::move(initial));
  const std::size_t step_limit = 4 * parent->order() + 8;

  SmallOrdinal alpha = 0;
  bool settled = false;
  for (;;) {
    std::size_t steps = 0;
    while (alpha < max) {
      auto next = alpha.successor();
      record.append(next, step(record, next));
      alpha = next;
      settled = permanent(record, next);
      if (settled) break;
      if (++steps > step_limit) {
        throw Error(ErrorCode::NotYetStable,
                    "chain did not settle within " + std::to_string(step_limit) + " steps");
      }
    }
    if (!settled) break;
    auto limit = next_limit(alpha, max);
    if (!limit) break;
    record.append(*limit, limit_term(record));
    settled = repeats_at(record, record.terms().size() - 1);
    alpha = *limit;
  }

  if (settled) record.set_stabilization(stabilization_index(record));
  if (direction == ChainDirection::Ascending) record.compute_first_entry();
  return record;
}

bool repeats(const ChainRecord& record, SmallOrdinal alpha) {
  return record.term(alpha) == record.term(alpha.predecessor());
}

}  // namespace

SmallOrdinal default_max_index(const FiniteGroup& group) { return SmallOrdinal(group.order()); }

CentralSeries upper_central_series(const Subgroup& ambient, std::optional<SmallOrdinal> max_index) {
  const auto& group = ambient.group();
  auto step = [&](const ChainRecord& record, SmallOrdinal alpha) {
    const auto& prev = record.term(alpha.predecessor());
    std::vector<ElementId> out;
    for (auto g : ambient.members()) {
      bool ok = true;
      for (auto x : ambient.members()) {
        if (!prev.contains(group.commutator(g, x))) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(g);
    }
    return Subgroup(ambient.parent(), std::move(out));
  };
  CentralSeries series{
      drive(ChainDirection::Ascending, ambient.parent(), Subgroup::trivial(ambient.parent()),
            max_index.value_or(default_max_index(group)), step, repeats),
      std::nullopt};
  for (const auto& t : series.chain.terms()) {
    if (!t.index.is_finite()) break;
    if (t.subgroup == ambient) {
      series.nilpotency_class = t.index.finite_part();
      break;
    }
  }
  return series;
}

CentralSeries upper_central_series(const GroupPtr& group, std::optional<SmallOrdinal> max_index) {
  return upper_central_series(Subgroup::whole(group), max_index);
}

std::optional<std::uint64_t> nilpotency_class(const Subgroup& h) {
  return upper_central_series(h).nilpotency_class;
}

ChainRecord iterated_centralizer_chain(const Subgroup& ambient, const Subgroup& h,
                                       std::optional<SmallOrdinal> max_index) {
  const auto& group = ambient.group();
  // Running meet of the normalizers of every recorded term.
  Subgroup meet = ambient;
  std::size_t folded = 0;
  auto step = [&](const ChainRecord& record, SmallOrdinal alpha) {
    const auto& terms = record.terms();
    for (; folded < terms.size(); ++folded) meet = normalizer(meet, terms[folded].subgroup);
    const auto& prev = record.term(alpha.predecessor());
    std::vector<ElementId> out;
    for (auto x : meet.members()) {
      bool ok = true;
      for (auto y : h.members()) {
        if (!prev.contains(group.commutator(x, y))) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(x);
    }
    return Subgroup(ambient.parent(), std::move(out));
  };
  return drive(ChainDirection::Ascending, ambient.parent(), Subgroup::trivial(ambient.parent()),
               max_index.value_or(default_max_index(group)), step, repeats);
}

EnvelopeStep envelope_step_detail(const Subgroup& prev, const Subgroup& h, SmallOrdinal alpha) {
  if (!alpha.is_successor()) {
    throw Error(ErrorCode::IndexNotSuccessor,
                "envelope step needs a successor index, got " + alpha.to_string());
  }
  auto inner = iterated_centralizer_chain(prev, h, alpha);
  const auto& group = prev.group();
  Subgroup upper = inner.term(alpha);
  Subgroup lower = inner.term(alpha.predecessor());
  std::vector<ElementId> out;
  for (auto g : prev.members()) {
    bool ok = true;
    for (auto c : upper.members()) {
      if (!lower.contains(group.commutator(g, c))) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(g);
  }
  return {Subgroup(prev.parent(), std::move(out)), std::move(upper), std::move(lower)};
}

Subgroup envelope_step(const Subgroup& prev, const Subgroup& h, SmallOrdinal alpha) {
  return envelope_step_detail(prev, h, alpha).envelope;
}

ChainRecord envelope_chain(const Subgroup& ambient, const Subgroup& h,
                           std::optional<SmallOrdinal> max_index) {
  if (!h.is_subset_of(ambient)) {
    throw Error(ErrorCode::InvalidArgument, "subgroup is not contained in the ambient group");
  }
  // For E_(k+1) = E_k to persist, the centralizer chain of h inside E_k must
  // also have settled: C^(k+1) = C^k there.
  std::vector<std::pair<SmallOrdinal, bool>> inner_settled;
  auto step = [&](const ChainRecord& record, SmallOrdinal alpha) {
    auto detail = envelope_step_detail(record.term(alpha.predecessor()), h, alpha);
    inner_settled.emplace_back(alpha, detail.upper == detail.lower);
    return detail.envelope;
  };
  auto permanent = [&](const ChainRecord& record, SmallOrdinal alpha) {
    return repeats(record, alpha) && inner_settled.back().first == alpha &&
           inner_settled.back().second;
  };
  return drive(ChainDirection::Descending, ambient.parent(), ambient,
               max_index.value_or(default_max_index(ambient.group())), step, permanent);
}

SmallOrdinal stabilization_index(const ChainRecord& chain) {
  const auto& terms = chain.terms();
  if (terms.size() < 2 || !(terms.back().subgroup == terms[terms.size() - 2].subgroup)) {
    throw Error(ErrorCode::NotYetStable, "the last recorded terms of the chain differ");
  }
  std::size_t i = terms.size() - 1;
  while (i > 0 && terms[i - 1].subgroup == terms.back().subgroup) --i;
  return terms[i].index;
}

}  // namespace envelope
