#pragma once

#include "dps/branching.hpp"

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dps {

class AnalyzerError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

enum class Verdict { Irreducible, Reducible, Inconclusive };
std::string to_string(Verdict v);

struct PartnerDescriptor {
  bool corank2 = false;
  // maximal form (i', s', m') with the torsion class used inside Z/m
  int i = 0;
  Rational s;
  int m = 1;
  int torsion_class = 1;
  // corank-2 form ((i1,i2),(s1,s2),(k1,k2))
  int i1 = 0, i2 = 0;
  Rational s1, s2;
  int k1 = 0, k2 = 0;
  // certificate
  char fired = '?';
  long sigma_size = 0;
  Exponent exponent; // sigma's initial exponent, in the subject's orbit
};
std::string to_string(const PartnerDescriptor& p);

struct ClassificationRecord {
  std::string group;
  Triple t;
  bool regular = false;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::string> methods;
  std::optional<PartnerDescriptor> partner;
  std::vector<PartnerDescriptor> corank2_alternatives;
  std::optional<SocleSummary> socle;
  std::vector<std::string> certificate_lines;
  int clamps = 0;
};

// Data shared by the steps of one classification.
struct TripleData {
  Triple t;
  NodeSet theta = 0;
  Exponent lambda0;
  Word to_ad;
  Exponent antidominant;
  ExponentMultiset jac;
};
TripleData prepare(const RootDatum& d, const Triple& t);

bool is_regular(const RootDatum& d, const Triple& t);

struct CandidateSet {
  std::set<Rational> x;
  std::set<int> y;
  std::vector<std::pair<Rational, int>> non_regular; // subset of X x Y
};
CandidateSet candidate_points(const RootDatum& d, int i);

// Values of s making some root outside Phi_M pair to a unit, for order m.
std::set<Rational> unit_points(const RootDatum& d, int i, int m);

// Witness root (simple-root coordinates) when the regular triple reduces; throws on non-regular input.
std::optional<std::vector<int>> regular_reducibility(const RootDatum& d, const Triple& t);

struct RcOptions {
  bool nonpositive_only = true; // partners with s' <= 0
};
std::optional<PartnerDescriptor> rc_partner_search(const RootDatum& d, const TripleData& data, RcOptions opt = {});
// All certified corank-2 descriptors, in reporting order.
std::vector<PartnerDescriptor> rc_corank2(const RootDatum& d, const TripleData& data);

struct ClassifyOptions {
  bool trace = false;
};
ClassificationRecord classify(const RootDatum& d, const Triple& t, ClassifyOptions opt = {});

} // namespace dps
