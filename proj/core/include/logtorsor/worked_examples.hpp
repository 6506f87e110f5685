#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logtorsor/divisors.hpp"
#include "logtorsor/fiber.hpp"

namespace logtorsor {

enum class Provenance { Reference, Derived };
std::string_view to_string(Provenance p) noexcept;

struct NamedIncidence {
  std::string name;
  HorizontalIncidence incidence;
};

/// Embedded data for one of the two hyperelliptic examples
/// y^2 = x^{2p} - (1 + c^2) x^p + c^2.
struct ExampleCase {
  std::string id;  ///< "p-example" or "l-example"
  long p = 0;
  Integer c;
  long residue_prime = 0;  ///< p for the p-example, l = c for the l-example
  IntersectionData fiber;
  std::vector<NamedIncidence> divisors;
  FiniteAbelianGroup expected_group;
  VerdictKind expected_verdict = VerdictKind::FppfExtension;
  /// gamma per divisor, from the exact solve (derived).
  std::vector<RatVector> expected_gamma;
  /// gamma per divisor as printed with the example, when it is printed.
  std::vector<std::optional<RatVector>> printed_gamma;
};

struct ExampleParams {
  std::optional<long> p;  ///< p-example only
  std::optional<long> c;  ///< p-example c, or l for the l-example
};

/// Throws Error(UnknownExample) for ids other than "p-example"/"l-example".
ExampleCase example_case(std::string_view id, const ExampleParams& params = {});

enum class CheckStatus {
  Pass,
  Fail,
  /// The computation contradicts a value printed with the example; the
  /// derived value is reported alongside.
  Discrepancy,
};
std::string_view to_string(CheckStatus s) noexcept;

struct Check {
  std::string name;
  std::string expected;
  std::string computed;
  Provenance provenance = Provenance::Reference;
  CheckStatus status = CheckStatus::Pass;
  std::string note;
};

struct ReproductionReport {
  std::string id;
  long p = 0;
  Integer c;
  long residue_prime = 0;
  FiniteAbelianGroup component_group;
  std::vector<Verdict> verdicts;
  std::vector<Check> checks;

  bool all_pass() const;
  std::size_t count(CheckStatus s) const;
  std::string to_text() const;
};

ReproductionReport reproduce(std::string_view id, const ExampleParams& params = {});

}  // namespace logtorsor
