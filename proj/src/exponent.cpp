#include "dps/exponent.hpp"

#include "dps/weyl.hpp"

#include <stdexcept>

namespace dps {

bool Exponent::operator<(const Exponent& o) const
{
  if (m != o.m) return m < o.m;
  for (std::size_t k = 0; k < real.size(); ++k) {
    int c = cmp(real[k], o.real[k]);
    if (c) return c < 0;
  }
  return tors < o.tors;
}

std::size_t ExponentHash::operator()(const Exponent& e) const
{
  std::size_t h = static_cast<std::size_t>(e.m);
  for (const auto& q : e.real) h = h * 0x100000001b3ull ^ hash_value(q);
  for (int t : e.tors) h = h * 31u + static_cast<std::size_t>(t);
  return h;
}

Exponent make_exponent(const RootDatum& d, std::vector<Rational> real, std::vector<int> tors, int m)
{
  if (m < 1) throw std::invalid_argument("torsion order must be >= 1");
  if (static_cast<int>(real.size()) != d.rank || static_cast<int>(tors.size()) != d.rank)
    throw std::invalid_argument("exponent length does not match rank");
  Exponent e{std::move(real), std::move(tors), m};
  for (auto& t : e.tors) t = ((t % m) + m) % m;
  return e;
}

Exponent real_exponent(const RootDatum& d, std::vector<Rational> real)
{
  return make_exponent(d, std::move(real), std::vector<int>(d.rank, 0), 1);
}

std::string to_string(const Exponent& e)
{
  std::string s = "(";
  for (std::size_t k = 0; k < e.real.size(); ++k) s += (k ? "," : "") + e.real[k].get_str();
  if (e.m > 1) {
    s += "; ";
    for (std::size_t k = 0; k < e.tors.size(); ++k) s += (k ? "," : "") + std::to_string(e.tors[k]);
    s += " mod " + std::to_string(e.m);
  }
  return s + ")";
}

std::string to_string(const Triple& t)
{
  return "[" + std::to_string(t.i + 1) + "," + t.s.get_str() + "," + std::to_string(t.m) + "]";
}

std::string to_string(const FullPairing& p)
{
  return "(" + p.real.get_str() + "," + std::to_string(p.tors) + ")";
}

void reflect_in_place(const RootDatum& d, int i, Exponent& e)
{
  Rational p = e.real[i];
  int q = e.tors[i];
  if (p != 0) {
    e.real[i] -= 2 * p;
    for (int j : d.adj[i]) e.real[j] += p;
  }
  if (q != 0) {
    e.tors[i] = ((e.tors[i] - 2 * q) % e.m + e.m) % e.m;
    for (int j : d.adj[i]) e.tors[j] = (e.tors[j] + q) % e.m;
  }
}

Exponent reflect(const RootDatum& d, int i, const Exponent& e)
{
  Exponent r = e;
  reflect_in_place(d, i, r);
  return r;
}

FullPairing full_pairing(const RootDatum& d, const Exponent& e, const std::vector<int>& root)
{
  FullPairing p{Rational(0), 0};
  long t = 0;
  for (int j = 0; j < d.rank; ++j) {
    if (!root[j]) continue;
    p.real += root[j] * e.real[j];
    t += static_cast<long>(root[j]) * e.tors[j];
  }
  p.tors = static_cast<int>(((t % e.m) + e.m) % e.m);
  return p;
}

FullPairing simple_pairing(const Exponent& e, int i) { return FullPairing{e.real[i], e.tors[i]}; }

bool is_unit_pairing(const FullPairing& p) { return p.tors == 0 && (p.real == 1 || p.real == -1); }

bool is_zero_pairing(const FullPairing& p) { return p.tors == 0 && p.real == 0; }

Exponent initial_exponent(const RootDatum& d, const Triple& t, int torsion_class)
{
  if (t.i < 0 || t.i >= d.rank) throw std::invalid_argument("parabolic index out of range");
  NodeSet theta = complement(d, with(0, t.i));
  std::vector<Rational> real(d.rank, Rational(-1));
  real[t.i] = t.s - rho_pairing(d, theta, t.i);
  std::vector<int> tors(d.rank, 0);
  tors[t.i] = torsion_class;
  return make_exponent(d, std::move(real), std::move(tors), t.m);
}

Exponent dual_leading_exponent(const RootDatum& d, const Triple& t)
{
  auto theta = diagram_automorphism(d);
  Triple dual{theta[t.i], -t.s, t.m};
  Exponent l1 = initial_exponent(d, dual, t.m - 1);
  if (!same_orbit(d, l1, initial_exponent(d, t)))
    throw std::logic_error("dual leading exponent not in the orbit of " + to_string(t));
  return l1;
}

} // namespace dps
