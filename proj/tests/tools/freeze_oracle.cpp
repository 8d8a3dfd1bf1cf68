// Writes brute-force chain data for the small test groups as JSON.
// Regenerate with: envelope_freeze_oracle > tests/data/frozen_oracle.json
#include <iostream>

#include <json.hpp>

#include "support/fixtures.hpp"

int main() {
  nlohmann::json doc = nlohmann::json::object();
  for (const auto& spec : fixtures::small_specs()) {
    auto t = fixtures::table(fixtures::group(spec));
    auto g = oracle::all(t);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& h : oracle::all_subgroups(t)) {
      auto sizes = [](const std::vector<oracle::Set>& v) {
        std::vector<std::size_t> out;
        for (const auto& s : v) out.push_back(s.size());
        return out;
      };
      entries.push_back({{"members", std::vector<int>(h.begin(), h.end())},
                         {"class", oracle::nilpotency_class(t, h)},
                         {"solvable", oracle::is_solvable(t, h)},
                         {"centralizers", sizes(oracle::iterated_centralizers(t, g, h, 6))},
                         {"envelopes", sizes(oracle::envelopes(t, g, h, 4))},
                         {"upper_central", sizes(oracle::upper_central(t, h, 4))}});
    }
    doc[spec] = entries;
  }
  std::cout << doc.dump() << "\n";
}
