#pragma once

#include "dps/root_datum.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace dps {

// Character of T: real part plus finite-order part mu mod m, both in the omega basis.
struct Exponent {
  std::vector<Rational> real;
  std::vector<int> tors;
  int m = 1;

  bool operator==(const Exponent& o) const { return m == o.m && tors == o.tors && real == o.real; }
  bool operator<(const Exponent& o) const;
};

struct ExponentHash {
  std::size_t operator()(const Exponent& e) const;
};

struct Triple {
  int i = 0; // 0-based
  Rational s;
  int m = 1;
};

struct FullPairing {
  Rational real;
  int tors = 0;
  bool operator==(const FullPairing&) const = default;
};

Exponent make_exponent(const RootDatum& d, std::vector<Rational> real, std::vector<int> tors, int m);
Exponent real_exponent(const RootDatum& d, std::vector<Rational> real);

std::string to_string(const Exponent& e);   // "(a1,...,an)" or "(a1,...,an; c1,...,cn mod m)"
std::string to_string(const Triple& t);     // "[i,s,m]", 1-based i
std::string to_string(const FullPairing& p);

// s_i on both parts.
Exponent reflect(const RootDatum& d, int i, const Exponent& e);
void reflect_in_place(const RootDatum& d, int i, Exponent& e);

FullPairing full_pairing(const RootDatum& d, const Exponent& e, const std::vector<int>& root);
FullPairing simple_pairing(const Exponent& e, int i);
bool is_unit_pairing(const FullPairing& p);
bool is_zero_pairing(const FullPairing& p);

Exponent initial_exponent(const RootDatum& d, const Triple& t, int torsion_class = 1);
// initial exponent of (theta(i), -s, m) with the inverse torsion class.
Exponent dual_leading_exponent(const RootDatum& d, const Triple& t);

} // namespace dps
