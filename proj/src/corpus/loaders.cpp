#include <fstream>
#include <mutex>
#include <sstream>

#include "envelope/corpus.hpp"
#include "envelope/error.hpp"

namespace envelope {

namespace {

using nlohmann::json;

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

[[noreturn]] void rethrow_with(const std::string& source, const Error& e) {
  throw Error(e.code(), source + ": " + e.what());
}

std::uint64_t parse_count(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 18) {
    throw Error(ErrorCode::InvalidArgument, "bad " + what + " \"" + text + "\"");
  }
  return std::stoull(text);
}

GroupSpec parse_factor(const std::string& text) {
  GroupSpec spec;
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "group spec \"" + text + "\" needs a catalog:, cayley: or perm: prefix");
  }
  auto prefix = text.substr(0, colon);
  auto rest = text.substr(colon + 1);
  if (prefix == "cayley" || prefix == "perm") {
    if (rest.empty()) throw Error(ErrorCode::InvalidArgument, "group spec \"" + text + "\" has no path");
    spec.kind = prefix == "cayley" ? GroupSpec::Kind::CayleyFile : GroupSpec::Kind::PermutationFile;
    spec.name_or_path = rest;
    return spec;
  }
  if (prefix != "catalog") {
    throw Error(ErrorCode::InvalidArgument, "unknown group spec prefix \"" + prefix + "\"");
  }
  spec.kind = GroupSpec::Kind::Catalog;
  auto sep = rest.find(':');
  spec.name_or_path = rest.substr(0, sep);
  if (sep != std::string::npos) {
    spec.parameters[spec.name_or_path == "Heis" ? "p" : "n"] =
        parse_count(rest.substr(sep + 1), "catalog parameter");
  }
  return spec;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  std::vector<std::string> parts;
  std::string s(text);
  for (std::size_t pos = 0;;) {
    auto next = s.find(" x ", pos);
    parts.push_back(trim(s.substr(pos, next == std::string::npos ? std::string::npos : next - pos)));
    if (next == std::string::npos) break;
    pos = next + 3;
  }
  if (parts.size() == 1) return parse_factor(parts[0]);
  GroupSpec out;
  for (const auto& p : parts) out.factors.push_back(parse_factor(p));
  return out;
}

GroupSpec GroupSpec::from_json(const json& doc) {
  if (doc.is_string()) return parse(doc.get<std::string>());
  if (!doc.is_object()) throw Error(ErrorCode::Config, "group spec must be a string or an object");
  GroupSpec spec;
  if (doc.contains("factors")) {
    if (!doc["factors"].is_array() || doc["factors"].empty()) {
      throw Error(ErrorCode::Config, "\"factors\" must be a non-empty list");
    }
    for (const auto& f : doc["factors"]) spec.factors.push_back(from_json(f));
    return spec;
  }
  auto kind = doc.value("kind", std::string("catalog"));
  auto name_field = [&](const char* key) {
    for (const char* k : {key, "name_or_path"}) {
      if (doc.contains(k) && doc[k].is_string()) return doc[k].get<std::string>();
    }
    throw Error(ErrorCode::Config, std::string("group spec needs \"") + key + "\"");
  };
  if (kind == "catalog") {
    spec.kind = Kind::Catalog;
    spec.name_or_path = name_field("name");
    if (doc.contains("parameters")) {
      if (!doc["parameters"].is_object()) throw Error(ErrorCode::Config, "\"parameters\" must be an object");
      for (const auto& [k, v] : doc["parameters"].items()) {
        if (!v.is_number_unsigned()) {
          throw Error(ErrorCode::Config, "catalog parameter " + k + " must be a non-negative integer");
        }
        spec.parameters[k] = v.get<std::uint64_t>();
      }
    }
  } else if (kind == "cayley_file" || kind == "permutation_file") {
    spec.kind = kind == "cayley_file" ? Kind::CayleyFile : Kind::PermutationFile;
    spec.name_or_path = name_field("path");
  } else {
    throw Error(ErrorCode::Config, "unknown group spec kind \"" + kind + "\"");
  }
  return spec;
}

json GroupSpec::to_json() const {
  if (is_product()) {
    json fs = json::array();
    for (const auto& f : factors) fs.push_back(f.to_json());
    return {{"factors", fs}};
  }
  switch (kind) {
    case Kind::Catalog: return {{"kind", "catalog"}, {"name", name_or_path}, {"parameters", parameters}};
    case Kind::CayleyFile: return {{"kind", "cayley_file"}, {"path", name_or_path}};
    case Kind::PermutationFile: return {{"kind", "permutation_file"}, {"path", name_or_path}};
  }
  return {};
}

std::string GroupSpec::canonical() const {
  if (is_product()) {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].canonical();
    return s;
  }
  switch (kind) {
    case Kind::CayleyFile: return "cayley:" + name_or_path;
    case Kind::PermutationFile: return "perm:" + name_or_path;
    case Kind::Catalog: break;
  }
  std::string s = "catalog:" + name_or_path;
  if (parameters.size() == 1) return s + ":" + std::to_string(parameters.begin()->second);
  for (const auto& [k, v] : parameters) s += ":" + k + "=" + std::to_string(v);
  return s;
}

std::string GroupSpec::display_name() const {
  if (is_product()) {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].display_name();
    return s;
  }
  if (kind != Kind::Catalog) return name_or_path;
  if (parameters.size() == 1) return name_or_path + "_" + std::to_string(parameters.begin()->second);
  return canonical();
}

GroupPtr resolve(const GroupSpec& spec, std::size_t order_cap) {
  static std::mutex mutex;
  static std::map<std::string, GroupPtr> cache;
  const auto key = spec.canonical() + "#" + std::to_string(order_cap);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  GroupPtr g;
  if (spec.is_product()) {
    std::vector<GroupPtr> fs;
    for (const auto& f : spec.factors) fs.push_back(resolve(f, order_cap));
    g = direct_product(fs, order_cap);
  } else if (spec.kind == GroupSpec::Kind::Catalog) {
    g = catalog(spec.name_or_path, spec.parameters, order_cap);
  } else if (spec.kind == GroupSpec::Kind::CayleyFile) {
    g = load_cayley_file(spec.name_or_path);
    if (g->order() > order_cap) {
      throw Error(ErrorCode::OrderCapExceeded, spec.name_or_path + ": order " +
                                                   std::to_string(g->order()) + " is above the cap");
    }
  } else {
    g = load_permutation_file(spec.name_or_path, order_cap);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, g).first->second;
}

GroupPtr parse_cayley_json(const json& doc, const std::string& source) {
  auto bad = [&](const std::string& msg) { return Error(ErrorCode::MalformedInput, source + ": " + msg); };
  if (!doc.is_object()) throw bad("Cayley file must hold a JSON object");
  if (!doc.contains("table") || !doc["table"].is_array()) throw bad("missing \"table\" array");
  const auto& rows = doc["table"];
  FiniteGroup::Table table;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw bad("row " + std::to_string(i) + " is not a list");
    std::vector<ElementId> row;
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      const auto& v = rows[i][j];
      if (!v.is_number_unsigned() || v.get<std::uint64_t>() > 0xffffffffULL) {
        throw bad("row " + std::to_string(i) + " column " + std::to_string(j) +
                  " is not a non-negative element id");
      }
      row.push_back(v.get<ElementId>());
    }
    table.push_back(std::move(row));
  }
  if (doc.contains("order")) {
    if (!doc["order"].is_number_unsigned() || doc["order"].get<std::uint64_t>() != table.size()) {
      throw bad("\"order\" does not match the " + std::to_string(table.size()) + " table rows");
    }
  }
  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    if (!doc["labels"].is_array()) throw bad("\"labels\" must be a list");
    for (std::size_t i = 0; i < doc["labels"].size(); ++i) {
      if (!doc["labels"][i].is_string()) throw bad("label " + std::to_string(i) + " is not a string");
      labels.push_back(doc["labels"][i].get<std::string>());
    }
  }
  try {
    return FiniteGroup::from_cayley_table(table, std::move(labels));
  } catch (const Error& e) {
    rethrow_with(source, e);
  }
}

GroupPtr load_cayley_file(const std::string& path) {
  auto text = read_file(path);
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedInput, path + ": invalid JSON: " + e.what());
  }
  return parse_cayley_json(doc, path);
}

json cayley_json(const FiniteGroup& group) {
  return {{"order", group.order()}, {"table", group.cayley_table()}, {"labels", group.labels()}};
}

void save_cayley_file(const FiniteGroup& group, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path);
  out << cayley_json(group).dump() << "\n";
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path);
}

GroupPtr parse_permutation_text(std::string_view text, const std::string& source,
                                std::size_t order_cap) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> degree;
  std::vector<Permutation> gens;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    auto t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    auto where = source + ":" + std::to_string(lineno);
    if (!degree) {
      std::istringstream words(t);
      std::string kw, value, extra;
      words >> kw >> value;
      if (kw != "degree" || (words >> extra)) {
        throw Error(ErrorCode::MalformedInput, where + ": expected \"degree d\"");
      }
      try {
        degree = parse_count(value, "degree");
      } catch (const Error&) {
        throw Error(ErrorCode::MalformedInput, where + ": bad degree \"" + value + "\"");
      }
      if (*degree == 0) throw Error(ErrorCode::MalformedInput, where + ": degree must be positive");
      continue;
    }
    try {
      gens.push_back(Permutation::parse_cycles(t, *degree));
    } catch (const Error& e) {
      rethrow_with(where, e);
    }
  }
  if (!degree) throw Error(ErrorCode::MalformedInput, source + ": missing \"degree d\" line");
  try {
    return FiniteGroup::from_permutations(*degree, gens, order_cap);
  } catch (const Error& e) {
    rethrow_with(source, e);
  }
}

GroupPtr load_permutation_file(const std::string& path, std::size_t order_cap) {
  return parse_permutation_text(read_file(path), path, order_cap);
}

std::vector<GroupSpec> default_corpus() {
  std::vector<std::string> specs;
  auto add = [&](const std::string& name, std::uint64_t n) {
    specs.push_back("catalog:" + name + ":" + std::to_string(n));
  };
  for (std::uint64_t n = 1; n <= 64; ++n) add("C", n);
  for (std::uint64_t n = 4; n <= 64; n += 2) add("D", n);
  for (std::uint64_t n : {8, 16, 32, 64}) add("Q", n);
  for (std::uint64_t n = 1; n <= 5; ++n) add("S", n);
  for (std::uint64_t n = 1; n <= 5; ++n) add("A", n);
  for (std::uint64_t p : {2, 3}) add("Heis", p);
  for (const char* p : {"catalog:C:2 x catalog:C:2", "catalog:C:2 x catalog:C:4",
                        "catalog:C:2 x catalog:C:2 x catalog:C:2", "catalog:C:4 x catalog:C:4",
                        "catalog:C:3 x catalog:S:3", "catalog:S:3 x catalog:S:3",
                        "catalog:C:2 x catalog:D:8", "catalog:C:2 x catalog:Q:8",
                        "catalog:C:3 x catalog:Q:8", "catalog:C:2 x catalog:A:4",
                        "catalog:C:4 x catalog:D:8", "catalog:C:2 x catalog:Heis:3"}) {
    specs.push_back(p);
  }
  std::vector<GroupSpec> out;
  for (const auto& s : specs) out.push_back(GroupSpec::parse(s));
  return out;
}

}  // namespace envelope
