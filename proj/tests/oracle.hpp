#pragma once
// Brute-force reference computations. Built from a hand-written Cartan matrix and
// plain integer matrices; nothing here calls the library's Weyl routines.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mat = std::vector<int>; // n*n, row major
using Cartan = std::vector<std::vector<int>>;

inline Cartan cartan_a(int n)
{
  Cartan c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    c[i][i] = 2;
    if (i + 1 < n) c[i][i + 1] = c[i + 1][i] = -1;
  }
  return c;
}

// D4 with node 2 (index 1) in the centre.
inline Cartan cartan_d4()
{
  Cartan c(4, std::vector<int>(4, 0));
  for (int i = 0; i < 4; ++i) c[i][i] = 2;
  for (int j : {0, 2, 3}) c[1][j] = c[j][1] = -1;
  return c;
}

// E6, Bourbaki: 1-3-4-5-6 with 2 attached to 4.
inline Cartan cartan_e6()
{
  Cartan c(6, std::vector<int>(6, 0));
  for (int i = 0; i < 6; ++i) c[i][i] = 2;
  auto edge = [&](int a, int b) { c[a - 1][b - 1] = c[b - 1][a - 1] = -1; };
  edge(1, 3);
  edge(3, 4);
  edge(4, 5);
  edge(5, 6);
  edge(2, 4);
  return c;
}

// s_i on fundamental-weight coordinates: lambda_j -> lambda_j - lambda_i * C[i][j].
inline Mat reflection(const Cartan& c, int i)
{
  int n = static_cast<int>(c.size());
  Mat m(n * n, 0);
  for (int j = 0; j < n; ++j) m[j * n + j] = 1;
  for (int j = 0; j < n; ++j) m[j * n + i] -= c[i][j];
  return m;
}

inline Mat mul(const Mat& a, const Mat& b, int n)
{
  Mat r(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      if (int x = a[i * n + k])
        for (int j = 0; j < n; ++j) r[i * n + j] += x * b[k * n + j];
  return r;
}

struct Group {
  int n = 0;
  std::vector<Mat> elems;                // BFS order: lengths are non-decreasing
  std::vector<int> length;
  std::vector<std::vector<int>> word;    // 0-based letters, product left to right
  std::vector<std::vector<int>> right;   // right[s][k] = index of elems[k] * s_s
  std::vector<std::vector<int>> left;    // left[s][k] = index of s_s * elems[k]
};

inline Group build_group(const Cartan& c)
{
  Group g;
  g.n = static_cast<int>(c.size());
  int n = g.n;
  std::vector<Mat> gens;
  for (int i = 0; i < n; ++i) gens.push_back(reflection(c, i));
  std::map<Mat, int> index;
  Mat id(n * n, 0);
  for (int i = 0; i < n; ++i) id[i * n + i] = 1;
  g.elems.push_back(id);
  g.length.push_back(0);
  g.word.push_back({});
  index[id] = 0;
  for (std::size_t k = 0; k < g.elems.size(); ++k)
    for (int s = 0; s < n; ++s) {
      Mat x = mul(g.elems[k], gens[s], n);
      if (index.count(x)) continue;
      index[x] = static_cast<int>(g.elems.size());
      g.elems.push_back(x);
      g.length.push_back(g.length[k] + 1);
      auto w = g.word[k];
      w.push_back(s);
      g.word.push_back(w);
    }
  g.right.assign(n, std::vector<int>(g.elems.size()));
  g.left.assign(n, std::vector<int>(g.elems.size()));
  for (std::size_t k = 0; k < g.elems.size(); ++k)
    for (int s = 0; s < n; ++s) {
      g.right[s][k] = index.at(mul(g.elems[k], gens[s], n));
      g.left[s][k] = index.at(mul(gens[s], g.elems[k], n));
    }
  return g;
}

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void join(int a, int b) { p[find(a)] = find(b); }
};

// Shortest element of each double coset W_L w W_M (masks over 0-based nodes).
inline std::vector<int> shortest_double_coset_reps(const Group& g, std::uint32_t l, std::uint32_t m)
{
  UnionFind uf(g.elems.size());
  for (std::size_t k = 0; k < g.elems.size(); ++k)
    for (int s = 0; s < g.n; ++s) {
      if ((l >> s) & 1u) uf.join(static_cast<int>(k), g.left[s][k]);
      if ((m >> s) & 1u) uf.join(static_cast<int>(k), g.right[s][k]);
    }
  std::map<int, int> best;
  for (std::size_t k = 0; k < g.elems.size(); ++k) {
    int r = uf.find(static_cast<int>(k));
    if (!best.count(r) || g.length[k] < g.length[best[r]]) best[r] = static_cast<int>(k);
  }
  std::vector<int> out;
  for (auto& [r, k] : best) out.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<int> shortest_left_coset_reps(const Group& g, std::uint32_t m)
{
  return shortest_double_coset_reps(g, 0, m);
}

using QVec = std::vector<mpq_class>;

inline QVec act(const Mat& m, const QVec& v)
{
  int n = static_cast<int>(v.size());
  QVec r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i * n + j] * v[j];
  return r;
}

inline std::vector<int> act_mod(const Mat& m, const std::vector<int>& v, int mod)
{
  int n = static_cast<int>(v.size());
  std::vector<int> r(n, 0);
  for (int i = 0; i < n; ++i) {
    long acc = 0;
    for (int j = 0; j < n; ++j) acc += long(m[i * n + j]) * v[j];
    r[i] = static_cast<int>(((acc % mod) + mod) % mod);
  }
  return r;
}

inline std::string key(const QVec& re, const std::vector<int>& tors)
{
  std::string s;
  for (const auto& x : re) s += x.get_str() + ",";
  s += ";";
  for (int t : tors) s += std::to_string(t) + ",";
  return s;
}

// Common denominator scaling keeps the group loops in machine integers.
inline std::vector<long> scaled(const QVec& re)
{
  mpz_class den = 1;
  for (const auto& x : re) den = lcm(den, mpz_class(x.get_den()));
  std::vector<long> out;
  for (const auto& x : re) out.push_back(mpz_class(x.get_num() * (den / x.get_den())).get_si());
  return out;
}

inline std::vector<long> act_int(const Mat& m, const std::vector<long>& v)
{
  int n = static_cast<int>(v.size());
  std::vector<long> r(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r[i] += m[i * n + j] * v[j];
  return r;
}

// Number of group elements fixing (re, tors mod m).
inline long stabilizer_count(const Group& g, const QVec& re, const std::vector<int>& tors, int mod)
{
  auto v = scaled(re);
  long c = 0;
  for (const auto& e : g.elems)
    if (act_int(e, v) == v && (mod == 1 || act_mod(e, tors, mod) == tors)) ++c;
  return c;
}

inline long orbit_size(const Group& g, const QVec& re, const std::vector<int>& tors, int mod)
{
  auto v = scaled(re);
  std::set<std::pair<std::vector<long>, std::vector<int>>> seen;
  for (const auto& e : g.elems) seen.emplace(act_int(e, v), mod == 1 ? tors : act_mod(e, tors, mod));
  return static_cast<long>(seen.size());
}

} // namespace oracle
