#include "dps/jacquet.hpp"

#include <algorithm>
#include <map>

namespace dps {

void ExponentMultiset::add(const Exponent& e, long k)
{
  if (k <= 0) return;
  map_[e] += k;
  total_ += k;
}

long ExponentMultiset::multiplicity(const Exponent& e) const
{
  auto it = map_.find(e);
  return it == map_.end() ? 0 : it->second;
}

std::vector<std::pair<Exponent, long>> ExponentMultiset::sorted() const
{
  std::vector<std::pair<Exponent, long>> v(map_.begin(), map_.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

std::vector<std::string> ExponentMultiset::lines() const
{
  std::vector<std::string> out;
  for (const auto& [e, k] : sorted()) out.push_back(std::to_string(k) + " x " + to_string(e));
  return out;
}

bool is_levi_character(const Exponent& lambda0, NodeSet theta_m)
{
  for (std::size_t j = 0; j < lambda0.real.size(); ++j)
    if (contains(theta_m, static_cast<int>(j)) && (lambda0.real[j] != -1 || lambda0.tors[j] != 0)) return false;
  return true;
}

ExponentMultiset jacquet_to_torus(const RootDatum& d, NodeSet theta_m, const Exponent& lambda0)
{
  if (!is_levi_character(lambda0, theta_m))
    throw JacquetError("not a valid initial exponent for the Levi " + format_nodes(theta_m) + ": " + to_string(lambda0));

  // marker walk over W^{M,T}, carrying the exponent alongside
  std::vector<int> marker(d.rank, 0);
  for (int k = 0; k < d.rank; ++k)
    if (!contains(theta_m, k)) marker[k] = 1;
  std::map<std::vector<int>, int> seen{{marker, 0}};
  std::vector<std::pair<std::vector<int>, Exponent>> queue{{marker, lambda0}};
  ExponentMultiset out;
  out.add(lambda0);
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int j = 0; j < d.rank; ++j) {
      if (queue[q].first[j] <= 0) continue;
      auto v = queue[q].first;
      int p = v[j];
      v[j] -= 2 * p;
      for (int k : d.adj[j]) v[k] += p;
      if (!seen.emplace(v, 0).second) continue;
      Exponent e = reflect(d, j, queue[q].second);
      out.add(e);
      queue.emplace_back(std::move(v), std::move(e));
    }
  }
  return out;
}

long multiplicity(const ExponentMultiset& a, const Exponent& e) { return a.multiplicity(e); }

bool multiset_leq(const ExponentMultiset& a, const ExponentMultiset& b)
{
  for (const auto& [e, k] : a.entries())
    if (k > b.multiplicity(e)) return false;
  return true;
}

AntidominantCheck antidominant_multiplicity_check(const RootDatum& d, const ExponentMultiset& jac)
{
  AntidominantCheck r;
  for (const auto& [e, k] : jac.sorted()) {
    if (!is_antidominant(e)) continue;
    auto order = static_cast<long>(stabilizer(d, e).order);
    if (r.checked == 0) r.value = k;
    ++r.checked;
    if (k != order) r.ok = false;
  }
  return r;
}

AntidominantCheck antidominant_multiplicity_check(const RootDatum& d, NodeSet theta_m, const Exponent& lambda0)
{
  return antidominant_multiplicity_check(d, jacquet_to_torus(d, theta_m, lambda0));
}

} // namespace dps
