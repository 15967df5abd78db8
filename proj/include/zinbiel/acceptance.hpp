#ifndef ZINBIEL_ACCEPTANCE_HPP
#define ZINBIEL_ACCEPTANCE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "zinbiel/catalog.hpp"

namespace zinbiel {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::size_t cases = 0;
  std::size_t failure_count = 0;
  std::vector<std::string> failures;  // the first few, for diagnostics
  std::vector<std::string> notes;
  double seconds = 0;

  bool passed() const { return cases > 0 && failure_count == 0; }
};

struct AcceptanceSummary {
  std::vector<CriterionResult> criteria;

  /// False when nothing ran.
  bool passed() const {
    if (criteria.empty()) return false;
    for (const auto& c : criteria)
      if (!c.passed()) return false;
    return true;
  }
};

inline constexpr std::uint64_t default_acceptance_seed = 20240917;

std::vector<int> all_criteria();
std::string criterion_name(int id);

/// Runs the listed acceptance criteria (1 to 10) against the catalog. All
/// randomness comes from one mt19937_64 seeded with `seed`, so runs repeat exactly.
/// Throws InputError for an unknown criterion number.
AcceptanceSummary verify_paper(const Catalog& catalog, const std::vector<int>& criteria = all_criteria(),
                               std::uint64_t seed = default_acceptance_seed);

/// One "criterion N (name): PASS|FAIL ..." line per criterion, then details of failures.
std::string describe(const AcceptanceSummary& summary, bool verbose = true);
nlohmann::json to_json(const AcceptanceSummary& summary);

}  // namespace zinbiel

#endif  // ZINBIEL_ACCEPTANCE_HPP
