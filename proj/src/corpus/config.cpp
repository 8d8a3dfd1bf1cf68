#include <fstream>
#include <limits>
#include <set>

#include "envelope/corpus.hpp"
#include "envelope/error.hpp"

namespace envelope {

namespace {

using nlohmann::json;

template <typename T>
T unsigned_field(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_number_unsigned()) {
    throw Error(ErrorCode::Config, std::string("\"") + key + "\" must be a non-negative integer");
  }
  auto raw = v.get<std::uint64_t>();
  if (raw > std::numeric_limits<T>::max()) {
    throw Error(ErrorCode::Config, std::string("\"") + key + "\" is too large");
  }
  return static_cast<T>(raw);
}

std::string string_field(const json& doc, const char* key) {
  const auto& v = doc.at(key);
  if (!v.is_string()) throw Error(ErrorCode::Config, std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

void reject_unknown(const json& doc, const std::set<std::string>& known, const std::string& where) {
  for (const auto& [k, _] : doc.items()) {
    if (!known.count(k)) throw Error(ErrorCode::Config, "unknown key \"" + k + "\" in " + where);
  }
}

}  // namespace

RunConfig RunConfig::from_json(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::Config, "run config must be a JSON object");
  reject_unknown(doc,
                 {"corpus", "subgroup_policy", "checks", "probe_depth", "seed", "output", "order_cap",
                  "threads", "timings", "casestudy"},
                 "run config");
  RunConfig c;
  try {
    if (doc.contains("corpus")) {
      if (!doc["corpus"].is_array()) throw Error(ErrorCode::Config, "\"corpus\" must be a list");
      c.corpus.clear();
      for (const auto& s : doc["corpus"]) c.corpus.push_back(GroupSpec::from_json(s));
    }
    if (doc.contains("subgroup_policy")) {
      c.subgroup_policy = SubgroupPolicy::parse(string_field(doc, "subgroup_policy"));
    }
    if (doc.contains("checks")) {
      if (!doc["checks"].is_array()) throw Error(ErrorCode::Config, "\"checks\" must be a list");
      for (const auto& id : doc["checks"]) {
        if (!id.is_string() || !is_check_id(id.get<std::string>())) {
          throw Error(ErrorCode::Config, "unknown check id " + id.dump());
        }
        c.checks.push_back(id.get<std::string>());
      }
    }
    if (doc.contains("probe_depth")) c.probe_depth = unsigned_field<std::uint32_t>(doc, "probe_depth");
    if (doc.contains("seed")) c.seed = unsigned_field<std::uint64_t>(doc, "seed");
    if (doc.contains("output")) c.output_path = string_field(doc, "output");
    if (doc.contains("order_cap")) {
      c.order_cap = unsigned_field<std::size_t>(doc, "order_cap");
      if (c.order_cap == 0) throw Error(ErrorCode::Config, "\"order_cap\" must be positive");
    }
    if (doc.contains("threads")) c.threads = unsigned_field<unsigned>(doc, "threads");
    if (doc.contains("timings")) {
      if (!doc["timings"].is_boolean()) throw Error(ErrorCode::Config, "\"timings\" must be a boolean");
      c.timings = doc["timings"].get<bool>();
    }
    if (doc.contains("casestudy")) {
      const auto& cs = doc["casestudy"];
      if (cs.is_boolean()) {
        if (cs.get<bool>()) c.casestudy = CaseStudyRunConfig{};
      } else if (cs.is_object()) {
        reject_unknown(cs, {"samples", "seed"}, "\"casestudy\"");
        CaseStudyRunConfig cc;
        if (cs.contains("samples")) cc.samples = unsigned_field<std::size_t>(cs, "samples");
        if (cs.contains("seed")) cc.seed = unsigned_field<std::uint64_t>(cs, "seed");
        c.casestudy = cc;
      } else {
        throw Error(ErrorCode::Config, "\"casestudy\" must be a boolean or an object");
      }
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Config) throw;
    throw Error(ErrorCode::Config, e.what());
  }
  return c;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Config, "cannot open config " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::Config, path + ": invalid JSON: " + e.what());
  }
  try {
    return from_json(doc);
  } catch (const Error& e) {
    throw Error(ErrorCode::Config, path + ": " + e.what());
  }
}

json RunConfig::to_json() const {
  json corpus_doc = json::array();
  for (const auto& s : corpus) corpus_doc.push_back(s.canonical());
  json doc{{"corpus", corpus_doc},
           {"subgroup_policy", subgroup_policy.to_string()},
           {"checks", checks},
           {"probe_depth", probe_depth},
           {"seed", seed},
           {"output", output_path},
           {"order_cap", order_cap},
           {"threads", threads},
           {"timings", timings}};
  if (casestudy) doc["casestudy"] = {{"samples", casestudy->samples}, {"seed", casestudy->seed}};
  return doc;
}

}  // namespace envelope
