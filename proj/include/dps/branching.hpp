#pragma once

#include "dps/jacquet.hpp"

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dps {

enum class RuleKind { Golden, A1, A2, A3, D4 };
std::string to_string(RuleKind k);

struct RuleInstance {
  RuleKind kind = RuleKind::Golden;
  std::vector<int> nodes;
  std::vector<std::pair<Exponent, long>> contribution; // aggregated, in generation order
  long d = 1;                                          // multiplicity of the trigger in the contribution
  long size() const;
};

// All instances triggered at lambda, in the order golden, A1, A2, A3, D4.
std::vector<RuleInstance> applicable_rules(const RootDatum& d, const Exponent& lambda);

using BoundMap = std::unordered_map<Exponent, long, ExponentHash>;

struct RuleApplication {
  std::vector<Exponent> raised;
  int clamps = 0;
  std::string trace;
};
// n = ceil(B(lambda)/d); B'(mu) = max(B(mu), n * c(mu)), clamped at the multiplicity in jac.
RuleApplication apply_rule(const RuleInstance& rule, const Exponent& lambda, BoundMap& bounds, const ExponentMultiset& jac);

struct FixpointResult {
  BoundMap bounds;
  long covered = 0;
  long total = 0;
  int clamps = 0;
  std::vector<std::string> trace;
  long bound(const Exponent& e) const;
};
FixpointResult run_fixpoint(const RootDatum& d, const ExponentMultiset& jac, const Exponent& antidominant);

struct IrreducibilityResult {
  bool irreducible = false;
  bool by_endpoint = false;
  std::string method;
  FixpointResult fixpoint;
  Exponent lambda0, lambda1;
  long mult0 = 0, mult1 = 0;
};
IrreducibilityResult irreducibility_test(const RootDatum& d, const Triple& t);
IrreducibilityResult irreducibility_test(const RootDatum& d, const Triple& t, const ExponentMultiset& jac,
                                         const Exponent& antidominant);

enum class SocleKind { UniqueSubCaseI, UniqueSubCaseII, LengthBound, CuratedCaseIII, Unknown };
std::string to_string(SocleKind k);

struct SocleSummary {
  SocleKind kind = SocleKind::Unknown;
  long length_bound = 0;
  std::string notes;
};

struct CuratedAnnotation {
  std::string group;
  int i = 0;
  Rational s;
  int m = 1;
  long socle_length = 1;
  std::uint64_t stab_order = 0;
  long antidominant_mult = 0;
  std::string note;
};
const std::vector<CuratedAnnotation>& curated_annotations();
const CuratedAnnotation* find_curated(const RootDatum& d, const Triple& t);
// Checks the recorded facts against the computation; empty string when they hold.
std::string validate_curated(const RootDatum& d, const CuratedAnnotation& a, const ExponentMultiset& jac,
                             const Exponent& antidominant);

// For a reducible non-regular triple with s <= 0. `fixpoint` is reused when given.
SocleSummary socle_analysis(const RootDatum& d, const Triple& t, const ExponentMultiset& jac,
                            const Exponent& antidominant, const FixpointResult* fixpoint = nullptr);

} // namespace dps
