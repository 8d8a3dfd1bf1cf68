#include <fstream>
#include <iostream>

#include "envelope/corpus.hpp"
#include "envelope/error.hpp"

namespace envelope {

namespace {

std::vector<NamedGroup> resolve_corpus(const RunConfig& config) {
  std::vector<NamedGroup> out;
  for (const auto& spec : config.corpus) out.push_back({spec.display_name(), resolve(spec, config.order_cap)});
  return out;
}

SweepOptions sweep_options(const RunConfig& config) {
  SweepOptions o;
  o.policy = config.subgroup_policy;
  o.checks = config.checks;
  o.probe_depth = config.probe_depth;
  o.seed = config.seed;
  o.threads = config.threads;
  return o;
}

void run_phases(const RunConfig& config, const std::vector<NamedGroup>& corpus, RunOutcome& out) {
  if (!corpus.empty()) out.reports = sweep(corpus, sweep_options(config));
  if (config.casestudy) {
    CaseStudyOptions cs;
    cs.samples = config.casestudy->samples;
    cs.seed = config.casestudy->seed;
    auto result = audit_claimed_chain(cs);
    for (auto& r : result.reports) out.reports.push_back(std::move(r));
    out.casestudy_table = std::move(result.table);
  }
  out.summary = summarize(out.reports);
}

}  // namespace

RunOutcome execute(const RunConfig& config) {
  for (const auto& id : config.checks) {
    if (!is_check_id(id)) throw Error(ErrorCode::Config, "unknown check id \"" + id + "\"");
  }
  RunOutcome out;
  run_phases(config, resolve_corpus(config), out);
  return out;
}

int run(const RunConfig& config, std::ostream& diagnostics) {
  std::vector<NamedGroup> corpus;
  std::ofstream file;
  std::ostream* sink = &std::cout;
  try {
    for (const auto& id : config.checks) {
      if (!is_check_id(id)) throw Error(ErrorCode::Config, "unknown check id \"" + id + "\"");
    }
    corpus = resolve_corpus(config);
    if (config.output_path != "-") {
      file.open(config.output_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::Io, "cannot write " + config.output_path);
      sink = &file;
    }
  } catch (const Error& e) {
    diagnostics << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return 2;
  }

  RunOutcome out;
  int status = 0;
  try {
    run_phases(config, corpus, out);
  } catch (const std::exception& e) {
    diagnostics << "error: run aborted: " << e.what() << "\n";
    out.summary = summarize(out.reports);
    status = 1;
  }
  write_report_lines(*sink, out.reports, config.to_json(), config.timings);
  sink->flush();
  if (!out.casestudy_table.empty()) diagnostics << out.casestudy_table;
  diagnostics << "pass " << out.summary.pass << ", fail " << out.summary.fail << ", skipped "
              << out.summary.skipped << ", error " << out.summary.error << "\n";
  if (!out.summary.ok()) status = 1;
  return status;
}

}  // namespace envelope
