#include "dps/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace dps {

namespace {

constexpr std::uint64_t kMaxTableSize = 3000000;

void reflect_int(const RootDatum& d, int i, std::vector<int>& v)
{
  int p = v[i];
  if (!p) return;
  v[i] -= 2 * p;
  for (int j : d.adj[i]) v[j] += p;
}

bool positive_root(const std::vector<int>& r)
{
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

// Walk from a marker vector, stepping s_j only where marker_j > 0.
std::vector<Word> marker_walk(const RootDatum& d, std::vector<int> marker, NodeSet gens)
{
  std::map<std::vector<int>, std::size_t> seen;
  std::vector<std::vector<int>> verts{marker};
  std::vector<Word> words{Word{}};
  seen.emplace(marker, 0);
  for (std::size_t k = 0; k < verts.size(); ++k) {
    for (int j = 0; j < d.rank; ++j) {
      if (!contains(gens, j) || verts[k][j] <= 0) continue;
      auto u = verts[k];
      reflect_int(d, j, u);
      if (seen.count(u)) continue;
      seen.emplace(u, verts.size());
      Word w{j};
      w.insert(w.end(), words[k].begin(), words[k].end());
      verts.push_back(std::move(u));
      words.push_back(std::move(w));
    }
  }
  return words;
}

} // namespace

std::string format_word(const Word& w)
{
  std::string s = "w[";
  for (std::size_t k = 0; k < w.size(); ++k) s += (k ? "," : "") + std::to_string(w[k] + 1);
  return s + "]";
}

Word inverse(const Word& w) { return Word(w.rbegin(), w.rend()); }

Word concat(const Word& a, const Word& b)
{
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Weight reflect(const RootDatum& d, int i, const Weight& lambda)
{
  Weight r = lambda;
  Rational p = lambda[i];
  if (p != 0) {
    r[i] -= 2 * p;
    for (int j : d.adj[i]) r[j] += p;
  }
  return r;
}

Weight apply(const RootDatum& d, const Word& w, const Weight& lambda)
{
  Weight r = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = reflect(d, *it, r);
  return r;
}

Exponent apply(const RootDatum& d, const Word& w, const Exponent& lambda)
{
  Exponent r = lambda;
  for (auto it = w.rbegin(); it != w.rend(); ++it) reflect_in_place(d, *it, r);
  return r;
}

std::vector<int> apply_to_root(const RootDatum& d, const Word& w, const std::vector<int>& root)
{
  std::vector<int> c = root;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    int i = *it, p = 0;
    for (int j = 0; j < d.rank; ++j) p += d.cartan[i][j] * c[j];
    c[i] -= p;
  }
  return c;
}

WeylElement make_element(const RootDatum& d, const Word& w)
{
  WeylElement e{w, IntMatrix(d.rank, std::vector<int>(d.rank, 0))};
  for (int c = 0; c < d.rank; ++c) {
    std::vector<int> v(d.rank, 0);
    v[c] = 1;
    for (auto it = w.rbegin(); it != w.rend(); ++it) reflect_int(d, *it, v);
    for (int r = 0; r < d.rank; ++r) e.action[r][c] = v[r];
  }
  return e;
}

bool same_element(const RootDatum& d, const Word& a, const Word& b)
{
  return make_element(d, a).action == make_element(d, b).action;
}

int inversion_count(const RootDatum& d, const Word& w)
{
  int n = 0;
  for (const auto& r : d.positive_roots)
    if (!positive_root(apply_to_root(d, w, r))) ++n;
  return n;
}

std::uint64_t weyl_subgroup_order(const RootDatum& d, NodeSet theta)
{
  std::uint64_t n = 1;
  for (const auto& c : subdiagram_components(d, theta)) n *= component_weyl_order(c.type_label);
  return n;
}

std::uint64_t weyl_group_order(const RootDatum& d) { return weyl_subgroup_order(d, full_set(d)); }

bool load_weyl_cache(const RootDatum& d, const std::filesystem::path& dir, WeylGroupTable& out);
void save_weyl_cache(const RootDatum& d, const std::filesystem::path& dir, const WeylGroupTable& table);

WeylGroupTable enumerate_weyl(const RootDatum& d, const std::optional<std::filesystem::path>& cache_dir)
{
  std::uint64_t order = weyl_group_order(d);
  if (order > kMaxTableSize)
    throw RootDatumError("Weyl group of " + d.type_label + " too large to tabulate (" + std::to_string(order) + ")");

  WeylGroupTable t;
  if (cache_dir && load_weyl_cache(d, *cache_dir, t)) return t;

  t.type_label = d.type_label;
  t.words = marker_walk(d, std::vector<int>(d.rank, 1), full_set(d));
  for (std::size_t k = 0; k < t.words.size(); ++k)
    if (t.words[k].size() > t.words[t.longest].size()) t.longest = k;
  if (t.words.size() != order) throw std::logic_error("Weyl enumeration size mismatch");
  if (cache_dir) save_weyl_cache(d, *cache_dir, t);
  return t;
}

std::vector<Word> minimal_coset_reps(const RootDatum& d, const WeylGroupTable& table, NodeSet theta_l, NodeSet theta_m)
{
  std::vector<Word> out;
  for (const auto& w : table.words) {
    bool ok = true;
    for (int j = 0; j < d.rank && ok; ++j) {
      std::vector<int> e(d.rank, 0);
      e[j] = 1;
      if (contains(theta_m, j) && !positive_root(apply_to_root(d, w, e))) ok = false;
      if (ok && contains(theta_l, j) && !positive_root(apply_to_root(d, inverse(w), e))) ok = false;
    }
    if (ok) out.push_back(w);
  }
  return out;
}

std::vector<Word> minimal_right_coset_reps(const RootDatum& d, NodeSet theta_m)
{
  return minimal_right_coset_reps(d, full_set(d), theta_m);
}

std::vector<Word> minimal_right_coset_reps(const RootDatum& d, NodeSet j, NodeSet theta_m)
{
  std::vector<int> marker(d.rank, 0);
  for (int k = 0; k < d.rank; ++k)
    if (contains(j, k) && !contains(theta_m, k)) marker[k] = 1;
  return marker_walk(d, marker, j);
}

std::vector<Word> parabolic_elements(const RootDatum& d, NodeSet j)
{
  std::vector<int> marker(d.rank, 0);
  for (int k = 0; k < d.rank; ++k)
    if (contains(j, k)) marker[k] = 1;
  return marker_walk(d, marker, j);
}

bool is_antidominant(const Exponent& e)
{
  return std::all_of(e.real.begin(), e.real.end(), [](const Rational& x) { return x <= 0; });
}

std::pair<Word, Exponent> to_antidominant(const RootDatum& d, const Exponent& lambda)
{
  Exponent e = lambda;
  Word steps;
  while (true) {
    int i = 0;
    while (i < d.rank && e.real[i] <= 0) ++i;
    if (i == d.rank) break;
    reflect_in_place(d, i, e);
    steps.push_back(i);
  }
  return {inverse(steps), e};
}

Stabilizer stabilizer(const RootDatum& d, const Exponent& lambda)
{
  auto [w, ad] = to_antidominant(d, lambda);
  NodeSet j = 0;
  for (int k = 0; k < d.rank; ++k)
    if (ad.real[k] == 0) j = with(j, k);

  Stabilizer st;
  st.order = 0;
  std::vector<Word> fixers;
  for (const auto& u : parabolic_elements(d, j))
    if (apply(d, u, ad) == ad) fixers.push_back(u);
  st.order = fixers.size();

  // greedy generating set, tracked through the free action on the J-marker
  std::vector<int> marker(d.rank, 0);
  for (int k = 0; k < d.rank; ++k)
    if (contains(j, k)) marker[k] = 1;
  auto act = [&](const Word& u, std::vector<int> v) {
    for (auto it = u.rbegin(); it != u.rend(); ++it) reflect_int(d, *it, v);
    return v;
  };
  std::set<std::vector<int>> generated{marker};
  std::vector<Word> gens;
  for (const auto& u : fixers) {
    if (generated.count(act(u, marker))) continue;
    gens.push_back(u);
    std::deque<std::vector<int>> q(generated.begin(), generated.end());
    while (!q.empty()) {
      auto v = q.front();
      q.pop_front();
      for (const auto& g : gens) {
        auto x = act(g, v);
        if (generated.insert(x).second) q.push_back(x);
      }
    }
  }

  Word wi = inverse(w);
  for (const auto& u : fixers) st.elements.push_back(concat(concat(wi, u), w));
  for (const auto& g : gens) st.generators.push_back(concat(concat(wi, g), w));
  return st;
}

std::vector<Exponent> orbit(const RootDatum& d, const Exponent& lambda)
{
  std::unordered_set<Exponent, ExponentHash> seen{lambda};
  std::vector<Exponent> out{lambda};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int j = 0; j < d.rank; ++j) {
      Exponent y = reflect(d, j, out[k]);
      if (seen.insert(y).second) out.push_back(std::move(y));
    }
  }
  return out;
}

bool same_orbit(const RootDatum& d, const Exponent& a, const Exponent& b)
{
  if (a.m != b.m) return false;
  auto ada = to_antidominant(d, a).second;
  auto adb = to_antidominant(d, b).second;
  if (ada.real != adb.real) return false;
  NodeSet j = 0;
  for (int k = 0; k < d.rank; ++k)
    if (ada.real[k] == 0) j = with(j, k);
  for (const auto& u : parabolic_elements(d, j))
    if (apply(d, u, adb) == ada) return true;
  return false;
}

} // namespace dps
