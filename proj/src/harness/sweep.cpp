#include <atomic>
#include <thread>

#include "envelope/error.hpp"
#include "envelope/harness.hpp"

namespace envelope {

namespace {

struct Item {
  const NamedGroup* group;
  std::optional<Subgroup> h;
  std::string enumeration_error;
};

}  // namespace

std::vector<CheckReport> sweep(const std::vector<NamedGroup>& corpus, const SweepOptions& options) {
  for (const auto& id : options.checks) {
    if (!is_check_id(id)) throw Error(ErrorCode::Config, "unknown check id \"" + id + "\"");
  }

  std::vector<Item> items;
  for (std::size_t gi = 0; gi < corpus.size(); ++gi) {
    const auto& ng = corpus[gi];
    auto policy = options.policy;
    // Each group gets its own stream so adding a group never perturbs others.
    // Non-random policies only sample when they fall back, using the run seed.
    auto base = policy.kind == SubgroupPolicy::Kind::Random ? policy.seed : options.seed;
    policy.seed = base ^ (0x9e3779b97f4a7c15ULL * (gi + 1));
    try {
      for (auto& h : enumerate_subgroups(ng.group, policy)) items.push_back({&ng, std::move(h), {}});
    } catch (const std::exception& e) {
      items.push_back({&ng, std::nullopt, e.what()});
    }
  }

  std::vector<std::vector<CheckReport>> results(items.size());
  auto work = [&](std::size_t i) {
    const auto& item = items[i];
    if (!item.h) {
      CheckReport r;
      r.check_id = "enumeration";
      r.group_name = item.group->name;
      r.verdict = Verdict::Error;
      r.reason = item.enumeration_error;
      results[i].push_back(std::move(r));
      return;
    }
    results[i] = run_checks(item.group->name, *item.h, options);
  };

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(items.size(), 1)));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) work(i);
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<CheckReport> out;
  for (auto& r : results) {
    for (auto& rep : r) out.push_back(std::move(rep));
  }
  return out;
}

}  // namespace envelope
