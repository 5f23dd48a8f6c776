#pragma once

#include "dps/weyl.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dps {

class JacquetError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

class ExponentMultiset {
public:
  void add(const Exponent& e, long k = 1);
  long multiplicity(const Exponent& e) const;
  long total() const { return total_; }
  std::size_t distinct() const { return map_.size(); }
  const std::unordered_map<Exponent, long, ExponentHash>& entries() const { return map_; }
  std::vector<std::pair<Exponent, long>> sorted() const;
  std::vector<std::string> lines() const; // "k x (exponent)", sorted

private:
  std::unordered_map<Exponent, long, ExponentHash> map_;
  long total_ = 0;
};

// r_T^G i_M^G of the one-dimensional rep of M_Theta with torus exponent lambda0.
ExponentMultiset jacquet_to_torus(const RootDatum& d, NodeSet theta_m, const Exponent& lambda0);
bool is_levi_character(const Exponent& lambda0, NodeSet theta_m);

long multiplicity(const ExponentMultiset& a, const Exponent& e);
bool multiset_leq(const ExponentMultiset& a, const ExponentMultiset& b);

struct AntidominantCheck {
  bool ok = true;
  long value = 0;      // multiplicity of the first anti-dominant exponent met
  int checked = 0;     // anti-dominant exponents inspected
};
AntidominantCheck antidominant_multiplicity_check(const RootDatum& d, NodeSet theta_m, const Exponent& lambda0);
AntidominantCheck antidominant_multiplicity_check(const RootDatum& d, const ExponentMultiset& jac);

} // namespace dps
