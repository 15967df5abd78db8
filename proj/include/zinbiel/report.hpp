#ifndef ZINBIEL_REPORT_HPP
#define ZINBIEL_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zinbiel/exactlin.hpp"

namespace zinbiel {

/// A basis tuple on which a condition fails, with both sides evaluated.
/// Indices are 0-based here; serialization shifts them to 1-based.
struct Witness {
  std::vector<Index> basis_tuple;
  Vector lhs;
  Vector rhs;
};

struct ConditionResult {
  std::string label;
  std::string variables;  // e.g. "x,v,y": one name per tuple slot
  bool passed = true;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::vector<ConditionResult> results;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& r : results)
      if (!r.passed) return false;
    return true;
  }

  const ConditionResult* find(std::string_view label) const {
    for (const auto& r : results)
      if (r.label == label) return &r;
    return nullptr;
  }

  const ConditionResult* first_failure() const {
    for (const auto& r : results)
      if (!r.passed) return &r;
    return nullptr;
  }

  void append(const CheckReport& other) {
    results.insert(results.end(), other.results.begin(), other.results.end());
    notes.insert(notes.end(), other.notes.begin(), other.notes.end());
  }
};

/// Evaluates `sides(tuple)` on every index tuple of the given ranges in
/// lexicographic order and stops at the first tuple where the two sides differ.
template <typename Sides>
ConditionResult check_condition(std::string label, std::string variables,
                                const std::vector<Index>& ranges, Sides&& sides) {
  ConditionResult result{std::move(label), std::move(variables), true, std::nullopt};
  for (Index r : ranges)
    if (r == 0) return result;

  std::vector<Index> tuple(ranges.size(), 0);
  while (true) {
    auto [lhs, rhs] = sides(tuple);
    if (lhs != rhs) {
      result.passed = false;
      result.witness = Witness{tuple, std::move(lhs), std::move(rhs)};
      return result;
    }
    std::size_t slot = tuple.size();
    while (slot > 0) {
      --slot;
      if (++tuple[slot] < ranges[slot]) break;
      tuple[slot] = 0;
      if (slot == 0) return result;
    }
    if (tuple.empty()) return result;
  }
}

/// Same as check_condition, but hands `sides` the basis vectors themselves:
/// slot i receives the unit vector of length dims[i].
template <typename Sides>
ConditionResult check_on_basis(std::string label, std::string variables,
                               const std::vector<Index>& dims, Sides&& sides) {
  return check_condition(std::move(label), std::move(variables), dims,
                         [&](const std::vector<Index>& t) {
                           std::vector<Vector> e;
                           e.reserve(t.size());
                           for (std::size_t i = 0; i < t.size(); ++i) e.push_back(unit(dims[i], t[i]));
                           return sides(e);
                         });
}

/// Wraps a scalar as a length-1 vector so scalar conditions share the witness format.
inline Vector scalar_vector(const Rational& s) {
  Vector v(1);
  v(0) = s;
  return v;
}

/// Human-readable multi-line rendering; indices are printed 1-based.
std::string describe(const CheckReport& report);

}  // namespace zinbiel

#endif  // ZINBIEL_REPORT_HPP
