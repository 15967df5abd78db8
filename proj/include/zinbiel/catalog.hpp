#ifndef ZINBIEL_CATALOG_HPP
#define ZINBIEL_CATALOG_HPP

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "zinbiel/flag.hpp"

namespace zinbiel {

using Params = std::map<std::string, Rational>;

/// One of the flag families: a base algebra, a μ and a D (D-case) or T (T-case)
/// depending on named parameters, with x0 = 0, k0 = 0 and the other map zero.
struct FlagFamily {
  std::string id;            // D1, D31, T11, ...
  std::string extension_id;  // DA1, DA3.1, TA1.1, ...
  std::string algebra_id;    // A1 ... A6
  FlagMode mode;
  std::vector<std::string> params;   // all required names, including lambda for A5
  std::vector<std::string> nonzero;  // parameters that appear in a denominator
  Params recorded;                   // the fixture's default binding
  std::function<FlagDatum(const Algebra& base, const Params&)> make;
};

/// A fixture id with its recorded parameters and value.
struct Fixture {
  std::string id;
  Params params;
  Algebra value;
};

/// The built-in fixtures A1–A6, the flag families and their 4-dimensional
/// extensions (DA), (TA). Base algebras can be replaced, which is how the
/// acceptance suite is exercised against a corrupted table.
class Catalog {
 public:
  Catalog();
  static Catalog empty();

  bool is_empty() const { return families_.empty() && overrides_.empty() && !builtin_; }

  /// A1..A6 followed by every DA/TA id.
  std::vector<std::string> ids() const;
  const std::vector<FlagFamily>& families() const { return families_; }

  /// Looks a family up by either id (D1 or DA1). Throws InputError when unknown.
  const FlagFamily& family(const std::string& id) const;

  /// Exact structure constants. DA/TA ids are built from their flag datum
  /// through the raw unified product (they need not be Zinbiel).
  /// Throws InputError for an unknown id, a missing or unexpected parameter,
  /// PreconditionError for λ = 0 or a zero parameter used as a denominator.
  Algebra get_algebra(const std::string& id, const Params& params = {}) const;

  FlagDatum get_flag(const std::string& family_id, const Params& params) const;

  /// The parameters each id requires and the recorded binding.
  std::vector<std::string> required_params(const std::string& id) const;
  Params recorded_params(const std::string& id) const;
  Fixture fixture(const std::string& id) const;

  /// The DA/TA tables as printed, with x_i read as e_i.
  Algebra printed_table(const std::string& extension_id, const Params& params) const;

  /// Entries where the printed table and the constructed algebra differ,
  /// one line per product e_i∘e_j (1-based, u = index n+1).
  std::vector<std::string> printed_discrepancies(const std::string& extension_id, const Params& params) const;

  void override_algebra(const std::string& id, Algebra a) { overrides_[id] = std::move(a); }

 private:
  Algebra base_algebra(const std::string& id, const Params& params) const;
  void check_params(const std::vector<std::string>& required, const std::vector<std::string>& nonzero,
                    const Params& params) const;

  bool builtin_ = true;
  std::vector<FlagFamily> families_;
  std::map<std::string, Algebra> overrides_;
};

/// The catalogued 3-dimensional algebras, straight from their tables.
Algebra algebra_A1();
Algebra algebra_A2();
Algebra algebra_A3();
Algebra algebra_A4();
Algebra algebra_A5(const Rational& lambda);
Algebra algebra_A6();

}  // namespace zinbiel

#endif  // ZINBIEL_CATALOG_HPP
