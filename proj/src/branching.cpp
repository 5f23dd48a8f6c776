#include "dps/branching.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace dps {

namespace {

class Contribution {
public:
  void add(const Exponent& e, long k)
  {
    for (auto& [x, c] : items_)
      if (x == e) {
        c += k;
        return;
      }
    items_.emplace_back(e, k);
  }
  std::vector<std::pair<Exponent, long>> take() { return std::move(items_); }

private:
  std::vector<std::pair<Exponent, long>> items_;
};

RuleInstance finish(RuleKind kind, std::vector<int> nodes, Contribution c, const Exponent& lambda)
{
  RuleInstance r{kind, std::move(nodes), c.take(), 0};
  for (const auto& [e, k] : r.contribution)
    if (e == lambda) r.d = k;
  if (r.d < 1) throw std::logic_error("branching rule without its trigger exponent");
  return r;
}

std::string node_list(const std::vector<int>& nodes)
{
  std::string s = "{";
  for (std::size_t k = 0; k < nodes.size(); ++k) s += (k ? "," : "") + std::to_string(nodes[k] + 1);
  return s + "}";
}

// D4 rule: the 24 minimal reps of W(D4)/W(A1^3) applied to w0.lambda, minus x0 and s_beta.x0.
RuleInstance d4_rule(const RootDatum& d, const Exponent& lambda, int centre, const std::vector<int>& arms)
{
  NodeSet j = with(0, centre), a = 0;
  for (int k : arms) {
    j = with(j, k);
    a = with(a, k);
  }
  Word w0{centre, arms[0], arms[1], arms[2], centre};
  Exponent x0 = apply(d, w0, lambda);
  auto reps = minimal_right_coset_reps(d, j, a);
  if (reps.size() != 24) throw std::logic_error("D4 coset set has " + std::to_string(reps.size()) + " elements, expected 24");

  Exponent y0 = reflect(d, centre, x0);
  Contribution c;
  bool dropped_x = false, dropped_y = false;
  for (const auto& w : reps) {
    Exponent e = apply(d, w, x0);
    if (!dropped_x && e == x0) {
      dropped_x = true;
      continue;
    }
    if (!dropped_y && e == y0) {
      dropped_y = true;
      continue;
    }
    c.add(e, 1);
  }
  if (!dropped_x || !dropped_y) throw std::logic_error("D4 coset set misses 1 or s_beta");
  std::vector<int> nodes{centre};
  nodes.insert(nodes.end(), arms.begin(), arms.end());
  RuleInstance r = finish(RuleKind::D4, nodes, std::move(c), lambda);
  if (r.size() != 22) throw std::logic_error("D4 contribution has wrong size");
  return r;
}

} // namespace

std::string to_string(RuleKind k)
{
  switch (k) {
  case RuleKind::Golden: return "golden";
  case RuleKind::A1: return "A1";
  case RuleKind::A2: return "A2";
  case RuleKind::A3: return "A3";
  case RuleKind::D4: return "D4";
  }
  return "?";
}

long RuleInstance::size() const
{
  long n = 0;
  for (const auto& [e, k] : contribution) n += k;
  return n;
}

std::vector<RuleInstance> applicable_rules(const RootDatum& d, const Exponent& lambda)
{
  std::vector<RuleInstance> out;
  int n = d.rank;
  std::vector<FullPairing> p(n);
  for (int i = 0; i < n; ++i) p[i] = simple_pairing(lambda, i);
  auto unit = [&](int i, int sign) { return p[i].tors == 0 && p[i].real == sign; };

  NodeSet zero = 0;
  for (int i = 0; i < n; ++i)
    if (is_zero_pairing(p[i])) zero = with(zero, i);
  if (zero) {
    Contribution c;
    c.add(lambda, static_cast<long>(weyl_subgroup_order(d, zero)));
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (contains(zero, i)) nodes.push_back(i);
    out.push_back(finish(RuleKind::Golden, nodes, std::move(c), lambda));
  }

  for (int a = 0; a < n; ++a) {
    if (is_unit_pairing(p[a])) continue;
    Contribution c;
    c.add(lambda, 1);
    c.add(reflect(d, a, lambda), 1);
    out.push_back(finish(RuleKind::A1, {a}, std::move(c), lambda));
  }

  for (int a = 0; a < n; ++a) {
    if (!is_unit_pairing(p[a])) continue;
    for (int b : d.adj[a]) {
      if (!contains(zero, b)) continue;
      Contribution c;
      c.add(lambda, 2);
      c.add(reflect(d, a, lambda), 1);
      out.push_back(finish(RuleKind::A2, {a, b}, std::move(c), lambda));
    }
  }

  for (int b = 0; b < n; ++b) {
    if (!contains(zero, b)) continue;
    for (int a : d.adj[b]) {
      if (!unit(a, 1)) continue;
      for (int g : d.adj[b]) {
        if (g == a || !unit(g, -1)) continue;
        Exponent sa = reflect(d, a, lambda);
        Contribution c;
        c.add(lambda, 2);
        c.add(sa, 1);
        c.add(reflect(d, g, lambda), 1);
        c.add(reflect(d, g, sa), 2);
        out.push_back(finish(RuleKind::A3, {a, b, g}, std::move(c), lambda));
      }
    }
  }

  for (int b = 0; b < n; ++b) {
    if (d.adj[b].size() != 3 || !unit(b, -1)) continue;
    const auto& arms = d.adj[b];
    if (std::all_of(arms.begin(), arms.end(), [&](int k) { return contains(zero, k); }))
      out.push_back(d4_rule(d, lambda, b, arms));
  }
  return out;
}

RuleApplication apply_rule(const RuleInstance& rule, const Exponent& lambda, BoundMap& bounds, const ExponentMultiset& jac)
{
  RuleApplication res;
  auto it = bounds.find(lambda);
  long b = it == bounds.end() ? 0 : it->second;
  if (b <= 0) return res;
  long n = (b + rule.d - 1) / rule.d;

  std::string parts;
  for (const auto& [mu, c] : rule.contribution) {
    long target = n * c;
    parts += (parts.empty() ? "" : ", ") + std::to_string(target) + "x" + to_string(mu);
    long& cur = bounds[mu];
    if (target <= cur) continue;
    long cap = jac.multiplicity(mu);
    if (target > cap) {
      ++res.clamps;
      target = cap;
    }
    if (target > cur) {
      cur = target;
      res.raised.push_back(mu);
    }
  }
  if (!res.raised.empty() || res.clamps)
    res.trace = "RULE " + to_string(rule.kind) + "@" + node_list(rule.nodes) + " " + to_string(lambda) + " -> {" + parts +
                "} [n=" + std::to_string(n) + "]";
  return res;
}

long FixpointResult::bound(const Exponent& e) const
{
  auto it = bounds.find(e);
  return it == bounds.end() ? 0 : it->second;
}

FixpointResult run_fixpoint(const RootDatum& d, const ExponentMultiset& jac, const Exponent& antidominant)
{
  FixpointResult r;
  r.total = jac.total();
  r.bounds[antidominant] = 1;
  std::deque<Exponent> queue{antidominant};
  std::unordered_set<Exponent, ExponentHash> queued{antidominant};
  std::unordered_map<Exponent, std::vector<RuleInstance>, ExponentHash> rules;

  while (!queue.empty()) {
    Exponent lam = queue.front();
    queue.pop_front();
    queued.erase(lam);
    auto rit = rules.find(lam);
    if (rit == rules.end()) rit = rules.emplace(lam, applicable_rules(d, lam)).first;
    for (const auto& rule : rit->second) {
      auto app = apply_rule(rule, lam, r.bounds, jac);
      r.clamps += app.clamps;
      if (!app.trace.empty()) r.trace.push_back(app.trace);
      for (const auto& mu : app.raised)
        if (queued.insert(mu).second) queue.push_back(mu);
    }
  }
  for (auto it = r.bounds.begin(); it != r.bounds.end();) {
    if (it->second == 0) {
      it = r.bounds.erase(it);
    } else {
      r.covered += it->second;
      ++it;
    }
  }
  return r;
}

IrreducibilityResult irreducibility_test(const RootDatum& d, const Triple& t)
{
  NodeSet theta = complement(d, with(0, t.i));
  Exponent l0 = initial_exponent(d, t);
  auto jac = jacquet_to_torus(d, theta, l0);
  return irreducibility_test(d, t, jac, to_antidominant(d, l0).second);
}

IrreducibilityResult irreducibility_test(const RootDatum& d, const Triple& t, const ExponentMultiset& jac,
                                         const Exponent& antidominant)
{
  IrreducibilityResult r;
  r.fixpoint = run_fixpoint(d, jac, antidominant);
  r.lambda0 = initial_exponent(d, t);
  r.lambda1 = dual_leading_exponent(d, t);
  r.mult0 = jac.multiplicity(r.lambda0);
  r.mult1 = jac.multiplicity(r.lambda1);
  std::string cover = std::to_string(r.fixpoint.covered) + "/" + std::to_string(r.fixpoint.total);
  if (r.fixpoint.covered == r.fixpoint.total) {
    r.irreducible = true;
    r.method = "branching fixpoint, " + cover;
  } else if (r.mult0 > 0 && r.fixpoint.bound(r.lambda0) == r.mult0 && r.mult1 > 0 &&
             r.fixpoint.bound(r.lambda1) == r.mult1) {
    // pi_0 carries every copy of both leading exponents: it is the unique sub and the unique quotient
    r.irreducible = true;
    r.by_endpoint = true;
    r.method = "endpoint test, fixpoint " + cover + ", B(l0)=" + std::to_string(r.mult0) +
               "=mult, B(l1)=" + std::to_string(r.mult1) + "=mult";
  } else {
    r.method = "branching fixpoint inconclusive, " + cover;
  }
  return r;
}

std::string to_string(SocleKind k)
{
  switch (k) {
  case SocleKind::UniqueSubCaseI: return "unique_sub_case_I";
  case SocleKind::UniqueSubCaseII: return "unique_sub_case_II";
  case SocleKind::LengthBound: return "length_bound";
  case SocleKind::CuratedCaseIII: return "curated_case_III";
  case SocleKind::Unknown: return "unknown";
  }
  return "?";
}

const std::vector<CuratedAnnotation>& curated_annotations()
{
  static const std::vector<CuratedAnnotation> table{
      {"E6", 3, Rational(-1, 2), 1, 1, 72, 72,
       "unique irreducible subrepresentation, by induction in stages (manual argument)"},
      {"E6", 3, Rational(-1, 2), 3, 3, 3, 3,
       "maximal semisimple subrepresentation of length 3, three inequivalent summands, "
       "Stab(l_ad) = <w[3,1,6,5]> of order 3 (manual argument)"},
  };
  return table;
}

const CuratedAnnotation* find_curated(const RootDatum& d, const Triple& t)
{
  for (const auto& a : curated_annotations())
    if (a.group == d.type_label && a.i == t.i && a.s == t.s && a.m == t.m) return &a;
  return nullptr;
}

std::string validate_curated(const RootDatum& d, const CuratedAnnotation& a, const ExponentMultiset& jac,
                             const Exponent& antidominant)
{
  auto st = stabilizer(d, antidominant);
  if (st.order != a.stab_order)
    return "stabilizer order " + std::to_string(st.order) + " != recorded " + std::to_string(a.stab_order);
  long m = jac.multiplicity(antidominant);
  if (m != a.antidominant_mult)
    return "anti-dominant multiplicity " + std::to_string(m) + " != recorded " + std::to_string(a.antidominant_mult);
  return "";
}

SocleSummary socle_analysis(const RootDatum& d, const Triple& t, const ExponentMultiset& jac, const Exponent& antidominant,
                            const FixpointResult* fixpoint)
{
  SocleSummary s;
  Exponent l0 = initial_exponent(d, t);
  long mult0 = jac.multiplicity(l0);
  if (mult0 == 1) {
    s.kind = SocleKind::UniqueSubCaseI;
    s.length_bound = 1;
    s.notes = "mult(l0) = 1";
    return s;
  }
  FixpointResult local;
  if (!fixpoint) {
    local = run_fixpoint(d, jac, antidominant);
    fixpoint = &local;
  }
  long b0 = fixpoint->bound(l0);
  if (b0 == mult0) {
    s.kind = SocleKind::UniqueSubCaseII;
    s.length_bound = 1;
    s.notes = "B(l0) = mult(l0) = " + std::to_string(mult0);
    return s;
  }
  s.length_bound = mult0;
  std::string why = "B(l0) = " + std::to_string(b0) + " < mult(l0) = " + std::to_string(mult0);
  if (const auto* a = find_curated(d, t)) {
    auto err = validate_curated(d, *a, jac, antidominant);
    if (err.empty()) {
      s.kind = SocleKind::CuratedCaseIII;
      s.length_bound = a->socle_length;
      s.notes = a->note + "; " + why;
      return s;
    }
    s.notes = "curated annotation rejected: " + err + "; ";
  }
  s.kind = SocleKind::LengthBound;
  s.notes += why;
  return s;
}

} // namespace dps
