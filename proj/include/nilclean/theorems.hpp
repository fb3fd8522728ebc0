#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nilclean/constructors.hpp"
#include "nilclean/ideals.hpp"

namespace nilclean {

enum class Verdict { Verified, Counterexample, Vacuous, Error };

std::string_view to_string(Verdict v) noexcept;
std::optional<Verdict> verdict_from_string(std::string_view s);

struct Witness {
  std::string ring;            // ring spec
  std::vector<Index> ideal;    // members of the offending ideal (may be empty)
  std::optional<Index> element;
  std::string reason;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct TheoremReport {
  std::string id;
  std::string paper_result;  // plain statement of the checked result
  std::size_t instances_tested = 0;
  std::size_t hypotheses_met = 0;
  Verdict verdict = Verdict::Vacuous;
  std::optional<Witness> witness;
  std::optional<double> millis;  // only recorded when timing is requested
  std::vector<std::string> notes;

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

struct CheckInfo {
  std::string id;
  std::string statement;
  bool commutative_only = false;
  bool iff = false;
};

struct CheckConfig {
  std::vector<std::string> family;  // ring-spec strings
  std::vector<RingPtr> extra_rings;  // e.g. imported table rings
  Index order_cap = kDefaultOrderCap;
  std::size_t ideal_cap = kDefaultIdealCap;
  bool commutative_filter = true;  // false only for exploratory runs
  bool timing = false;

  static CheckConfig defaults();
};

std::vector<std::string> default_family();

/// Registered checks in id order.
const std::vector<CheckInfo>& registered_checks();

/// UnknownCheck for an unregistered id. Family rings are axiom-checked first
/// (AxiomViolation on failure).
TheoremReport run_check(std::string_view id, const CheckConfig& config);

/// Every registered check, in id order. A failing check yields an Error
/// verdict and the rest still run; the axiom gate runs once up front.
std::vector<TheoremReport> run_all(const CheckConfig& config);

/// Runs the selected ids (all when empty) sharing one family build.
std::vector<TheoremReport> run_checks(const std::vector<std::string>& ids,
                                      const CheckConfig& config);

/// Evaluates the commutative-only characterisations on noncommutative
/// triangular rings without the commutativity filter. Findings are reported,
/// not asserted.
std::vector<TheoremReport> explore_noncommutative(const CheckConfig& config);

}  // namespace nilclean
