#pragma once

#include <string>
#include <vector>

#include "envelope/corpus.hpp"
#include "envelope/group_ops.hpp"
#include "oracle.hpp"

namespace fixtures {

using envelope::GroupPtr;
using envelope::Subgroup;

inline GroupPtr group(const std::string& spec) { return envelope::resolve(envelope::GroupSpec::parse(spec)); }

inline oracle::Table table(const GroupPtr& g) {
  oracle::Table t(g->order(), std::vector<int>(g->order()));
  for (std::size_t a = 0; a < g->order(); ++a)
    for (std::size_t b = 0; b < g->order(); ++b)
      t[a][b] = static_cast<int>(g->mul(static_cast<envelope::ElementId>(a), static_cast<envelope::ElementId>(b)));
  return t;
}

inline oracle::Set to_set(const Subgroup& h) {
  return oracle::Set(h.members().begin(), h.members().end());
}

inline Subgroup from_set(const GroupPtr& g, const oracle::Set& s) {
  return Subgroup(g, std::vector<envelope::ElementId>(s.begin(), s.end()));
}

inline envelope::ElementId id(const GroupPtr& g, const std::string& label) {
  auto x = g->find_label(label);
  if (!x) throw std::runtime_error("no element " + label);
  return *x;
}

/// Subgroup generated by labelled elements.
inline Subgroup gen(const GroupPtr& g, const std::vector<std::string>& labels) {
  std::vector<envelope::ElementId> seed;
  for (const auto& l : labels) seed.push_back(id(g, l));
  return envelope::generated_subgroup(g, seed);
}

inline oracle::Set labels_to_set(const GroupPtr& g, const std::vector<std::string>& labels) {
  oracle::Set s;
  for (const auto& l : labels) s.insert(static_cast<int>(id(g, l)));
  return s;
}

/// Small groups the property tests sweep over exhaustively.
inline std::vector<std::string> small_specs() {
  return {"catalog:C:1",  "catalog:C:6",  "catalog:D:6",   "catalog:D:8",
          "catalog:Q:8",  "catalog:D:12", "catalog:A:4",   "catalog:Q:16",
          "catalog:D:16", "catalog:S:4",  "catalog:Heis:3", "catalog:C:2 x catalog:D:8",
          "catalog:C:3 x catalog:S:3"};
}

}  // namespace fixtures
