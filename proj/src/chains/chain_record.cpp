#include <algorithm>

#include "envelope/chain.hpp"
#include "envelope/error.hpp"

namespace envelope {

const char* to_string(ChainDirection direction) {
  return direction == ChainDirection::Ascending ? "ascending" : "descending";
}

ChainRecord::ChainRecord(ChainDirection direction, GroupPtr parent)
    : direction_(direction), parent_(std::move(parent)) {}

void ChainRecord::append(SmallOrdinal index, Subgroup subgroup) {
  if (!terms_.empty() && !(terms_.back().index < index)) {
    throw Error(ErrorCode::InvalidArgument,
                "chain indices must increase: " + index.to_string() + " after " +
                    terms_.back().index.to_string());
  }
  if (subgroup.parent() != parent_) {
    throw Error(ErrorCode::InvalidArgument, "chain term belongs to a different group");
  }
  terms_.push_back({index, std::move(subgroup)});
}

void ChainRecord::replace(SmallOrdinal index, Subgroup subgroup) {
  for (auto& t : terms_) {
    if (t.index == index) {
      t.subgroup = std::move(subgroup);
      return;
    }
  }
  throw Error(ErrorCode::IndexOutOfRange, "no recorded term at " + index.to_string());
}

const Subgroup* ChainRecord::find(SmallOrdinal index) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                             [](const ChainTerm& t, SmallOrdinal i) { return t.index < i; });
  if (it == terms_.end() || it->index != index) return nullptr;
  return &it->subgroup;
}

const Subgroup& ChainRecord::term(SmallOrdinal index) const {
  if (auto* s = find(index)) return *s;
  if (stabilization_ && *stabilization_ <= index) {
    if (auto* s = find(*stabilization_)) return *s;
  }
  throw Error(ErrorCode::IndexOutOfRange,
              "chain has no term at " + index.to_string() +
                  (stabilization_ ? "" : " and is not known to be stable"));
}

void ChainRecord::compute_first_entry() {
  first_entry_.clear();
  if (direction_ != ChainDirection::Ascending || terms_.empty()) return;
  const auto& initial = terms_.front().subgroup;
  for (const auto& t : terms_) {
    for (auto x : t.subgroup.members()) {
      if (initial.contains(x)) continue;
      first_entry_.emplace(x, t.index);  // keeps the earliest
    }
  }
}

nlohmann::json ChainRecord::to_json() const {
  nlohmann::json doc;
  doc["direction"] = to_string(direction_);
  auto terms = nlohmann::json::array();
  for (const auto& t : terms_) {
    terms.push_back({{"ordinal", t.index.to_string()},
                     {"members", std::vector<ElementId>(t.subgroup.members().begin(),
                                                        t.subgroup.members().end())}});
  }
  doc["terms"] = std::move(terms);
  doc["stabilization"] = stabilization_ ? nlohmann::json(stabilization_->to_string()) : nlohmann::json();
  auto first = nlohmann::json::object();
  for (const auto& [x, idx] : first_entry_) first[std::to_string(x)] = idx.to_string();
  if (direction_ == ChainDirection::Ascending) doc["first_entry"] = std::move(first);
  return doc;
}

ChainRecord ChainRecord::from_json(const GroupPtr& parent, const nlohmann::json& doc) {
  try {
    auto dir_text = doc.at("direction").get<std::string>();
    ChainDirection dir;
    if (dir_text == "ascending") {
      dir = ChainDirection::Ascending;
    } else if (dir_text == "descending") {
      dir = ChainDirection::Descending;
    } else {
      throw Error(ErrorCode::MalformedInput, "unknown chain direction \"" + dir_text + "\"");
    }
    ChainRecord record(dir, parent);
    for (const auto& t : doc.at("terms")) {
      record.append(SmallOrdinal::parse(t.at("ordinal").get<std::string>()),
                    Subgroup(parent, t.at("members").get<std::vector<ElementId>>()));
    }
    if (doc.contains("stabilization") && !doc["stabilization"].is_null()) {
      record.stabilization_ = SmallOrdinal::parse(doc["stabilization"].get<std::string>());
    }
    if (doc.contains("first_entry")) {
      for (const auto& [key, value] : doc["first_entry"].items()) {
        record.first_entry_.emplace(static_cast<ElementId>(std::stoul(key)),
                                    SmallOrdinal::parse(value.get<std::string>()));
      }
    }
    return record;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::MalformedInput, std::string("malformed chain record: ") + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::MalformedInput) throw;
    throw Error(ErrorCode::MalformedInput, std::string("malformed chain record: ") + e.what());
  }
}

}  // namespace envelope
