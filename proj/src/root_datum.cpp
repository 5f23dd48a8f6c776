#include "dps/root_datum.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <set>
#include <sstream>

namespace dps {

namespace {

IntMatrix chain_cartan(int n)
{
  IntMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  return a;
}

void join(IntMatrix& a, int i, int j) { a[i][j] = a[j][i] = -1; }

int parse_rank(const std::string& label, std::size_t from)
{
  if (from >= label.size()) throw RootDatumError("missing rank in type label: " + label);
  int n = 0;
  for (std::size_t k = from; k < label.size(); ++k) {
    if (label[k] < '0' || label[k] > '9') throw RootDatumError("bad type label: " + label);
    n = n * 10 + (label[k] - '0');
    if (n > 32) throw RootDatumError("rank too large: " + label);
  }
  return n;
}

// Exact leading-minor test.
bool positive_definite(const IntMatrix& c)
{
  int n = static_cast<int>(c.size());
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = c[i][j];
  for (int k = 0; k < n; ++k) {
    if (m[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = m[i][k] / m[k][k];
      for (int j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return true;
}

} // namespace

RootDatum build_root_datum(const std::string& label)
{
  if (label.empty()) throw RootDatumError("empty type label");
  char t = label[0];
  if (t == 'B' || t == 'C' || t == 'F' || t == 'G')
    throw RootDatumError("not simply-laced: " + label);
  int n = parse_rank(label, 1);
  IntMatrix a;
  switch (t) {
  case 'A':
    if (n < 1) throw RootDatumError("bad rank: " + label);
    a = chain_cartan(n);
    for (int i = 0; i + 1 < n; ++i) join(a, i, i + 1);
    break;
  case 'D':
    if (n < 4) throw RootDatumError("D_n needs n >= 4: " + label);
    a = chain_cartan(n);
    for (int i = 0; i + 2 < n; ++i) join(a, i, i + 1);
    join(a, n - 3, n - 1);
    break;
  case 'E':
    if (n < 6 || n > 8) throw RootDatumError("E_n needs 6 <= n <= 8: " + label);
    a = chain_cartan(n);
    join(a, 0, 2);
    join(a, 1, 3);
    for (int i = 2; i + 1 < n; ++i) join(a, i, i + 1);
    break;
  default:
    throw RootDatumError("unknown type: " + label);
  }
  return root_datum_from_cartan(a, label);
}

RootDatum root_datum_from_cartan(const IntMatrix& cartan, const std::string& label)
{
  int n = static_cast<int>(cartan.size());
  if (n == 0 || n > 32) throw RootDatumError("rank must be in 1..32");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n) throw RootDatumError("Cartan matrix not square");
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2) throw RootDatumError("Cartan diagonal must be 2");
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] != cartan[j][i]) throw RootDatumError("Cartan matrix not symmetric (not simply-laced)");
      if (cartan[i][j] != 0 && cartan[i][j] != -1)
        throw RootDatumError("off-diagonal Cartan entries must be 0 or -1");
    }
  }
  if (!positive_definite(cartan)) throw RootDatumError("Cartan matrix is not of finite type");

  RootDatum d;
  d.rank = n;
  d.cartan = cartan;
  d.adj.assign(n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && cartan[i][j] == -1) d.adj[i].push_back(j);

  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& r : frontier) {
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (int j = 0; j < n; ++j) p += cartan[i][j] * r[j];
        if (p == 0) continue;
        auto q = r;
        q[i] -= p;
        if (std::all_of(q.begin(), q.end(), [](int x) { return x >= 0; }) && roots.insert(q).second)
          next.push_back(q);
      }
    }
    frontier.swap(next);
  }
  d.positive_roots.assign(roots.begin(), roots.end());

  if (!label.empty()) {
    d.type_label = label;
  } else {
    auto comps = subdiagram_components(d, full_set(d));
    for (std::size_t k = 0; k < comps.size(); ++k)
      d.type_label += (k ? "x" : "") + comps[k].type_label;
  }
  return d;
}

IntMatrix read_cartan_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw RootDatumError("cannot open Cartan file: " + path);
  int n = 0;
  if (!(in >> n) || n <= 0 || n > 32) throw RootDatumError("bad rank line in " + path);
  IntMatrix a(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(in >> a[i][j])) throw RootDatumError("truncated Cartan matrix in " + path);
  return a;
}

NodeSet full_set(const RootDatum& d)
{
  return d.rank == 32 ? ~NodeSet(0) : ((NodeSet(1) << d.rank) - 1);
}

NodeSet complement(const RootDatum& d, NodeSet s) { return full_set(d) & ~s; }

int set_size(NodeSet s) { return std::popcount(s); }

std::string format_nodes(NodeSet s)
{
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!contains(s, i)) continue;
    out += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Rational pairing(const RootDatum& d, const Weight& lambda, const std::vector<int>& root)
{
  Rational p = 0;
  for (int j = 0; j < d.rank; ++j)
    if (root[j]) p += root[j] * lambda[j];
  return p;
}

Weight simple_root_as_weight(const RootDatum& d, int i)
{
  if (i < 0 || i >= d.rank) throw RootDatumError("simple root index out of range");
  Weight w(d.rank);
  for (int j = 0; j < d.rank; ++j) w[j] = d.cartan[j][i];
  return w;
}

Weight rho_levi(const RootDatum& d, NodeSet theta)
{
  Weight rho(d.rank, Rational(0));
  for (const auto& r : d.positive_roots) {
    bool inside = true;
    for (int j = 0; j < d.rank && inside; ++j)
      if (r[j] && !contains(theta, j)) inside = false;
    if (!inside) continue;
    for (int k = 0; k < d.rank; ++k) {
      int c = 0;
      for (int j = 0; j < d.rank; ++j) c += d.cartan[k][j] * r[j];
      rho[k] += c;
    }
  }
  for (auto& x : rho) x /= 2;
  return rho;
}

Rational rho_pairing(const RootDatum& d, NodeSet theta, int i) { return rho_levi(d, theta)[i]; }

std::vector<Component> subdiagram_components(const RootDatum& d, NodeSet theta)
{
  std::vector<Component> out;
  NodeSet seen = 0;
  for (int start = 0; start < d.rank; ++start) {
    if (!contains(theta, start) || contains(seen, start)) continue;
    std::vector<int> nodes{start};
    seen = with(seen, start);
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int j : d.adj[nodes[k]])
        if (contains(theta, j) && !contains(seen, j)) {
          seen = with(seen, j);
          nodes.push_back(j);
        }
    std::sort(nodes.begin(), nodes.end());

    auto nbrs = [&](int v) {
      std::vector<int> r;
      for (int j : d.adj[v])
        if (contains(theta, j)) r.push_back(j);
      return r;
    };
    // walk outward from `from` avoiding `prev`; induced diagrams are trees
    auto walk = [&](int from, int prev) {
      std::vector<int> arm;
      while (true) {
        arm.push_back(from);
        int next = -1;
        for (int j : nbrs(from))
          if (j != prev) next = j;
        if (next < 0) break;
        prev = from;
        from = next;
      }
      return arm;
    };

    int n = static_cast<int>(nodes.size());
    std::vector<int> branch;
    for (int v : nodes) {
      auto nb = nbrs(v);
      if (nb.size() > 3) throw RootDatumError("diagram node of degree > 3");
      if (nb.size() == 3) branch.push_back(v);
    }
    Component c;
    if (branch.empty()) {
      int end = nodes.front();
      for (int v : nodes)
        if (nbrs(v).size() <= 1) {
          end = v;
          break;
        }
      c.nodes = walk(end, -1);
      c.type_label = "A" + std::to_string(n);
    } else {
      if (branch.size() > 1) throw RootDatumError("diagram with two branch nodes");
      int centre = branch[0];
      c.nodes.push_back(centre);
      std::vector<std::size_t> lens;
      for (int j : nbrs(centre)) {
        auto arm = walk(j, centre);
        lens.push_back(arm.size());
        c.nodes.insert(c.nodes.end(), arm.begin(), arm.end());
      }
      std::sort(lens.begin(), lens.end());
      if (lens[0] == 1 && lens[1] == 1)
        c.type_label = "D" + std::to_string(n);
      else if (lens[0] == 1 && lens[1] == 2 && lens[2] <= 4)
        c.type_label = "E" + std::to_string(n);
      else
        throw RootDatumError("diagram is not of finite type");
    }
    out.push_back(std::move(c));
  }
  return out;
}

// Permutation induced by -w_0.
std::vector<int> diagram_automorphism(const RootDatum& d)
{
  std::vector<int> p(d.rank);
  for (int i = 0; i < d.rank; ++i) p[i] = i;
  auto comps = subdiagram_components(d, full_set(d));
  for (const auto& c : comps) {
    char t = c.type_label[0];
    int n = static_cast<int>(c.nodes.size());
    if (t == 'A') {
      for (int k = 0; k < n; ++k) p[c.nodes[k]] = c.nodes[n - 1 - k];
    } else if (t == 'D' && n % 2 == 1) {
      // the two length-one arms swap
      std::vector<int> shorts;
      for (int j : d.adj[c.nodes[0]])
        if (d.adj[j].size() == 1) shorts.push_back(j);
      p[shorts[0]] = shorts[1];
      p[shorts[1]] = shorts[0];
    } else if (c.type_label == "E6") {
      // arms of length two swap, end to end and middle to middle
      std::vector<std::vector<int>> arms;
      for (int j : d.adj[c.nodes[0]]) {
        std::vector<int> arm{j};
        int prev = c.nodes[0], cur = j;
        while (true) {
          int next = -1;
          for (int k : d.adj[cur])
            if (k != prev) next = k;
          if (next < 0) break;
          arm.push_back(next);
          prev = cur;
          cur = next;
        }
        if (arm.size() == 2) arms.push_back(arm);
      }
      for (int k = 0; k < 2; ++k) {
        p[arms[0][k]] = arms[1][k];
        p[arms[1][k]] = arms[0][k];
      }
    }
  }
  return p;
}

std::uint64_t component_weyl_order(const std::string& label)
{
  int n = std::stoi(label.substr(1));
  auto fact = [](int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
  };
  switch (label[0]) {
  case 'A': return fact(n + 1);
  case 'D': return (std::uint64_t(1) << (n - 1)) * fact(n);
  case 'E':
    if (n == 6) return 51840;
    if (n == 7) return 2903040;
    if (n == 8) return 696729600;
    break;
  }
  throw RootDatumError("unknown component type: " + label);
}

} // namespace dps
