#include "envelope/envelope.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <sstream>

#include "envelope/casestudy.hpp"
#include "envelope/chain.hpp"
#include "envelope/corpus.hpp"
#include "envelope/error.hpp"
#include "envelope/group_ops.hpp"

struct envelope_group {
  envelope::GroupPtr group;
};

struct envelope_subgroup {
  envelope::Subgroup sub;
};

namespace {

using nlohmann::json;

thread_local std::string last_error;

envelope_status fail(envelope_status s, const std::string& message) {
  last_error = message;
  return s;
}

template <typename F>
envelope_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    return ENVELOPE_OK;
  } catch (const envelope::Error& e) {
    return fail(static_cast<envelope_status>(static_cast<int>(e.code()) + 1), e.what());
  } catch (const json::exception& e) {
    return fail(ENVELOPE_E_MALFORMED_INPUT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ENVELOPE_E_UNKNOWN, "out of memory");
  } catch (const std::exception& e) {
    return fail(ENVELOPE_E_UNKNOWN, e.what());
  }
}

char* copy_string(const std::string& s) {
  auto* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p == nullptr) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw envelope::Error(envelope::ErrorCode::InvalidArgument, std::string(what) + " is null");
}

json labels_of(const envelope::Subgroup& s) { return s.member_labels(); }

json labelled_chain(const envelope::ChainRecord& chain) {
  auto doc = chain.to_json();
  for (std::size_t i = 0; i < chain.terms().size(); ++i) {
    doc["terms"][i]["labels"] = labels_of(chain.terms()[i].subgroup);
  }
  return doc;
}

}  // namespace

extern "C" {

const char* envelope_version(void) { return "1.0.0"; }

const char* envelope_status_name(envelope_status status) {
  if (status == ENVELOPE_OK) return "ok";
  if (status >= ENVELOPE_E_INVALID_ARGUMENT && status <= ENVELOPE_E_INTERNAL) {
    return envelope::to_string(static_cast<envelope::ErrorCode>(status - 1));
  }
  return "unknown";
}

const char* envelope_last_error(void) { return last_error.c_str(); }

void envelope_string_free(char* s) { std::free(s); }

envelope_status envelope_group_resolve(const char* spec, size_t order_cap, envelope_group** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = nullptr;
    auto cap = order_cap ? order_cap : envelope::order_cap_from_env();
    auto g = envelope::resolve(envelope::GroupSpec::parse(spec), cap);
    *out = new envelope_group{std::move(g)};
  });
}

void envelope_group_free(envelope_group* g) { delete g; }

size_t envelope_group_order(const envelope_group* g) { return g ? g->group->order() : 0; }

envelope_status envelope_group_info_json(const envelope_group* g, char** out_json) {
  return guarded([&] {
    require(g, "group");
    require(out_json, "out_json");
    auto whole = envelope::Subgroup::whole(g->group);
    auto cls = envelope::nilpotency_class(whole);
    auto derived = envelope::derived_series(g->group);
    json orders = json::array();
    for (const auto& t : derived.terms) orders.push_back(t.order());
    std::vector<std::string> gens;
    for (auto x : envelope::small_generating_set(whole)) gens.push_back(g->group->label(x));
    json doc{{"order", g->group->order()},
             {"identity", g->group->label(g->group->identity())},
             {"labels", g->group->labels()},
             {"generators", gens},
             {"abelian", envelope::is_abelian(whole)},
             {"center", labels_of(envelope::center(whole))},
             {"nilpotency_class", cls ? json(*cls) : json()},
             {"derived_series_orders", orders},
             {"solvable", derived.solvable}};
    *out_json = copy_string(doc.dump());
  });
}

envelope_status envelope_group_save_cayley(const envelope_group* g, const char* path) {
  return guarded([&] {
    require(g, "group");
    require(path, "path");
    envelope::save_cayley_file(*g->group, path);
  });
}

envelope_status envelope_subgroup_from_labels(const envelope_group* g, const char* const* labels,
                                              size_t count, envelope_subgroup** out) {
  return guarded([&] {
    require(g, "group");
    require(out, "out");
    if (count > 0) require(labels, "labels");
    *out = nullptr;
    std::vector<envelope::ElementId> seed;
    for (size_t i = 0; i < count; ++i) {
      require(labels[i], "label");
      auto id = g->group->find_label(labels[i]);
      if (!id) {
        throw envelope::Error(envelope::ErrorCode::InvalidArgument,
                              std::string("no element labelled \"") + labels[i] + "\"");
      }
      seed.push_back(*id);
    }
    *out = new envelope_subgroup{envelope::generated_subgroup(g->group, seed)};
  });
}

void envelope_subgroup_free(envelope_subgroup* h) { delete h; }

size_t envelope_subgroup_order(const envelope_subgroup* h) { return h ? h->sub.order() : 0; }

envelope_status envelope_chain_json(const envelope_subgroup* h, envelope_chain_kind kind,
                                    const char* max_index, char** out_json) {
  return guarded([&] {
    require(h, "subgroup");
    require(out_json, "out_json");
    std::optional<envelope::SmallOrdinal> max;
    if (max_index != nullptr) max = envelope::SmallOrdinal::parse(max_index);
    auto whole = envelope::Subgroup::whole(h->sub.parent());
    json doc;
    switch (kind) {
      case ENVELOPE_CHAIN_ENVELOPE:
        doc = labelled_chain(envelope::envelope_chain(whole, h->sub, max));
        break;
      case ENVELOPE_CHAIN_CENTRALIZER:
        doc = labelled_chain(envelope::iterated_centralizer_chain(whole, h->sub, max));
        break;
      case ENVELOPE_CHAIN_UPPER_CENTRAL: {
        auto series = envelope::upper_central_series(h->sub, max);
        doc = labelled_chain(series.chain);
        doc["nilpotency_class"] = series.nilpotency_class ? json(*series.nilpotency_class) : json();
        break;
      }
      default:
        throw envelope::Error(envelope::ErrorCode::InvalidArgument, "unknown chain kind");
    }
    *out_json = copy_string(doc.dump());
  });
}

envelope_status envelope_lattice_json(const envelope_group* g, char** out_json) {
  return guarded([&] {
    require(g, "group");
    require(out_json, "out_json");
    auto lattice = envelope::centralizer_lattice(g->group, envelope::order_cap_from_env());
    json entries = json::array();
    for (const auto& e : lattice.entries) {
      std::vector<std::string> witnesses;
      for (auto x : e.witnesses) witnesses.push_back(g->group->label(x));
      entries.push_back({{"order", e.subgroup.order()},
                         {"members", labels_of(e.subgroup)},
                         {"witnesses", witnesses}});
    }
    json doc{{"entries", entries}, {"max_chain_length", lattice.max_chain_length}};
    *out_json = copy_string(doc.dump());
  });
}

envelope_status envelope_run_config(const char* config_json, int* exit_status, char** diagnostics) {
  return guarded([&] {
    require(config_json, "config_json");
    require(exit_status, "exit_status");
    if (diagnostics) *diagnostics = nullptr;
    json doc;
    try {
      doc = json::parse(config_json);
    } catch (const json::parse_error& e) {
      throw envelope::Error(envelope::ErrorCode::Config, std::string("invalid config JSON: ") + e.what());
    }
    auto config = envelope::RunConfig::from_json(doc);
    std::ostringstream diag;
    *exit_status = envelope::run(config, diag);
    if (diagnostics) *diagnostics = copy_string(diag.str());
  });
}

envelope_status envelope_run_casestudy(size_t samples, uint64_t seed, char** out_reports,
                                       char** out_table, envelope_summary* summary) {
  return guarded([&] {
    envelope::CaseStudyOptions options;
    options.samples = samples;
    options.seed = seed;
    auto result = envelope::audit_claimed_chain(options);
    if (out_reports) {
      std::string lines;
      for (const auto& r : result.reports) lines += r.to_json().dump() + "\n";
      *out_reports = copy_string(lines);
    }
    if (out_table) *out_table = copy_string(result.table);
    if (summary) {
      auto s = envelope::summarize(result.reports);
      *summary = {s.pass, s.fail, s.skipped, s.error};
    }
  });
}

}  // extern "C"
