#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "envelope/envelope.h"

namespace {

using nlohmann::json;

constexpr int kExitConfig = 2;

struct CString {
  char* p = nullptr;
  ~CString() { envelope_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GroupDeleter {
  void operator()(envelope_group* g) const { envelope_group_free(g); }
};
struct SubgroupDeleter {
  void operator()(envelope_subgroup* h) const { envelope_subgroup_free(h); }
};
using GroupHandle = std::unique_ptr<envelope_group, GroupDeleter>;
using SubgroupHandle = std::unique_ptr<envelope_subgroup, SubgroupDeleter>;

// Thrown once the C call has failed; carries the exit code.
struct Failed {
  int code;
};

void check(envelope_status s, int exit_code = kExitConfig) {
  if (s == ENVELOPE_OK) return;
  std::cerr << "error [" << envelope_status_name(s) << "]: " << envelope_last_error() << "\n";
  throw Failed{exit_code};
}

GroupHandle open_group(const std::string& spec, std::size_t order_cap) {
  envelope_group* g = nullptr;
  check(envelope_group_resolve(spec.c_str(), order_cap, &g));
  return GroupHandle(g);
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto next = text.find(';', pos);
    auto part = text.substr(pos, next == std::string::npos ? std::string::npos : next - pos);
    auto b = part.find_first_not_of(' ');
    if (b != std::string::npos) out.push_back(part.substr(b, part.find_last_not_of(' ') - b + 1));
    if (next == std::string::npos) break;
    pos = next + 1;
  }
  return out;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    throw Failed{kExitConfig};
  }
  out << text << "\n";
}

json chain_doc(envelope_subgroup* h, envelope_chain_kind kind, const std::optional<std::string>& max) {
  CString s;
  auto status = envelope_chain_json(h, kind, max ? max->c_str() : nullptr, &s.p);
  // A bad --max is a usage error; anything else failed while computing.
  bool bad_index = status == ENVELOPE_E_INVALID_ARGUMENT || status == ENVELOPE_E_ORDINAL_OUT_OF_RANGE;
  check(status, bad_index ? kExitConfig : 1);
  return json::parse(s.str());
}

int run_config(const json& config) {
  int status = 0;
  CString diag;
  check(envelope_run_config(config.dump().c_str(), &status, &diag.p));
  std::cerr << diag.str();
  return status;
}

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot open config " << path << "\n";
    throw Failed{kExitConfig};
  }
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    std::cerr << "error: " << path << ": invalid JSON: " << e.what() << "\n";
    throw Failed{kExitConfig};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Envelope chains, iterated centralizers and upper central series of finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(envelope_version()));

  std::size_t order_cap = 0;
  app.add_option("--order-cap", order_cap, "Largest group order to build (default ENVELOPE_ORDER_CAP or 20000)");

  std::string group_spec, out_path, save_cayley;
  auto* group_cmd = app.add_subcommand("group", "Describe a group");
  group_cmd->add_option("--group,-g", group_spec, "catalog:NAME:n, cayley:PATH, perm:PATH, joined by ' x '")->required();
  group_cmd->add_option("--save-cayley", save_cayley, "Also write the Cayley table here");
  group_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");

  std::string subgroup_labels, kind = "all";
  std::optional<std::string> max_index;
  auto* chain_cmd = app.add_subcommand("chain", "Compute C^a, Z_a and E_a for one subgroup");
  chain_cmd->add_option("--group,-g", group_spec, "Group spec")->required();
  chain_cmd->add_option("--subgroup,-s", subgroup_labels, "Generator labels separated by ';'");
  chain_cmd->add_option("--max", max_index, "Largest index, e.g. 4, w, w+1 (default |G|)");
  chain_cmd->add_option("--kind", kind, "envelope, centralizer, upper or all")
      ->check(CLI::IsMember({"envelope", "centralizer", "upper", "all"}));
  chain_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");

  std::string config_path, policy, output;
  std::vector<std::string> corpus, checks;
  std::optional<std::uint32_t> probe_depth;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
  bool timings = false;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run the harness checks over a corpus");
  sweep_cmd->add_option("--config,-c", config_path, "Run config JSON");
  sweep_cmd->add_option("--group,-g", corpus, "Corpus entry (repeatable; replaces the config corpus)");
  sweep_cmd->add_option("--policy", policy, "all, representatives or random(n, seed)");
  sweep_cmd->add_option("--checks", checks, "Check ids")->delimiter(',');
  sweep_cmd->add_option("--probe-depth", probe_depth, "Stabilization probe depth");
  sweep_cmd->add_option("--seed", seed, "Run seed");
  sweep_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
  sweep_cmd->add_option("--output,-o", output, "Report file (default stdout)");
  sweep_cmd->add_flag("--timings", timings, "Include runtime_ms in reports");

  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> cs_seed;
  auto* case_cmd = app.add_subcommand("casestudy", "Audit the monomial case study");
  case_cmd->add_option("--config,-c", config_path, "Run config JSON");
  case_cmd->add_option("--samples", samples, "Samples per claim (default 1000)");
  case_cmd->add_option("--seed", cs_seed, "Sampling seed (default 7)");
  case_cmd->add_option("--output,-o", output, "Report file (default stdout)");

  auto* lattice_cmd = app.add_subcommand("lattice", "List the centralizer lattice of a group");
  lattice_cmd->add_option("--group,-g", group_spec, "Group spec")->required();
  lattice_cmd->add_option("--out,-o", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (*group_cmd) {
      auto g = open_group(group_spec, order_cap);
      CString info;
      check(envelope_group_info_json(g.get(), &info.p), 1);
      if (!save_cayley.empty()) check(envelope_group_save_cayley(g.get(), save_cayley.c_str()));
      emit(json::parse(info.str()).dump(2), out_path);
      return 0;
    }

    if (*chain_cmd) {
      auto g = open_group(group_spec, order_cap);
      auto labels = split_labels(subgroup_labels);
      std::vector<const char*> ptrs;
      for (const auto& l : labels) ptrs.push_back(l.c_str());
      envelope_subgroup* raw = nullptr;
      check(envelope_subgroup_from_labels(g.get(), ptrs.data(), ptrs.size(), &raw));
      SubgroupHandle h(raw);
      json doc{{"group", group_spec}, {"subgroup_generators", labels},
               {"subgroup_order", envelope_subgroup_order(h.get())}};
      if (kind == "envelope" || kind == "all") doc["envelope"] = chain_doc(h.get(), ENVELOPE_CHAIN_ENVELOPE, max_index);
      if (kind == "centralizer" || kind == "all") doc["centralizer"] = chain_doc(h.get(), ENVELOPE_CHAIN_CENTRALIZER, max_index);
      if (kind == "upper" || kind == "all") doc["upper_central"] = chain_doc(h.get(), ENVELOPE_CHAIN_UPPER_CENTRAL, max_index);
      emit(doc.dump(2), out_path);
      return 0;
    }

    if (*lattice_cmd) {
      auto g = open_group(group_spec, order_cap);
      CString s;
      check(envelope_lattice_json(g.get(), &s.p), 1);
      emit(json::parse(s.str()).dump(2), out_path);
      return 0;
    }

    json config = config_path.empty() ? json::object() : load_config(config_path);
    if (!config.is_object()) {
      std::cerr << "error: run config must be a JSON object\n";
      return kExitConfig;
    }
    if (!output.empty()) config["output"] = output;
    if (order_cap) config["order_cap"] = order_cap;

    if (*sweep_cmd) {
      if (!corpus.empty()) config["corpus"] = corpus;
      if (!policy.empty()) config["subgroup_policy"] = policy;
      if (!checks.empty()) config["checks"] = checks;
      if (probe_depth) config["probe_depth"] = *probe_depth;
      if (seed) config["seed"] = *seed;
      if (threads) config["threads"] = *threads;
      if (timings) config["timings"] = true;
      return run_config(config);
    }

    if (*case_cmd) {
      config["corpus"] = json::array();
      json cs = config.contains("casestudy") && config["casestudy"].is_object() ? config["casestudy"] : json::object();
      if (samples) cs["samples"] = *samples;
      if (cs_seed) cs["seed"] = *cs_seed;
      config["casestudy"] = cs;
      return run_config(config);
    }
  } catch (const Failed& f) {
    return f.code;
  }
  return 0;
}
