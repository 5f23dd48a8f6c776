#include "dps/analyzer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace dps {

namespace {

bool standard_coordinate(const Exponent& e, int j) { return e.real[j] == -1 && e.tors[j] == 0; }

char certify(const ExponentMultiset& j0, const Exponent& l0, const ExponentMultiset& js)
{
  if (j0.total() > js.total()) return 'a';
  if (j0.multiplicity(l0) > js.multiplicity(l0)) return 'b';
  for (const auto& [e, k] : j0.entries())
    if (k > js.multiplicity(e)) return 'c';
  return 0;
}

// r_T(pi) + r_T(sigma) exceeds r_T(i_T^G lambda) somewhere; the latter has |Stab(mu)| at mu.
bool exceeds_full_series(const RootDatum& d, const ExponentMultiset& j0, const ExponentMultiset& js, const Exponent& ad)
{
  auto order = static_cast<long>(stabilizer(d, ad).order);
  if (j0.multiplicity(ad) + js.multiplicity(ad) > order) return true;
  for (const auto& [e, k] : js.sorted()) {
    long a = j0.multiplicity(e);
    if (a == 0) continue;
    if (a + k > static_cast<long>(stabilizer(d, e).order)) return true;
  }
  return false;
}

std::vector<std::vector<Rational>> inverse_cartan(const RootDatum& d)
{
  int n = d.rank;
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = d.cartan[i][j];
    a[i][n + i] = 1;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    Rational piv = a[c][c];
    for (auto& x : a[c]) x /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      Rational f = a[r][c];
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

Rational frac(long p, long q)
{
  Rational r(p, q);
  r.canonicalize();
  return r;
}

} // namespace

std::string to_string(Verdict v)
{
  switch (v) {
  case Verdict::Irreducible: return "irreducible";
  case Verdict::Reducible: return "reducible";
  case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(const PartnerDescriptor& p)
{
  if (p.corank2)
    return "[[" + std::to_string(p.i1 + 1) + "," + std::to_string(p.i2 + 1) + "],[" + p.s1.get_str() + "," +
           p.s2.get_str() + "],[" + std::to_string(p.k1) + "," + std::to_string(p.k2) + "]]";
  return "[" + std::to_string(p.i + 1) + "," + p.s.get_str() + "," + std::to_string(p.m) + "]";
}

TripleData prepare(const RootDatum& d, const Triple& t)
{
  TripleData data;
  data.t = t;
  data.theta = complement(d, with(0, t.i));
  data.lambda0 = initial_exponent(d, t);
  auto [w, ad] = to_antidominant(d, data.lambda0);
  data.to_ad = std::move(w);
  data.antidominant = std::move(ad);
  data.jac = jacquet_to_torus(d, data.theta, data.lambda0);
  return data;
}

bool is_regular(const RootDatum& d, const Triple& t) { return stabilizer(d, initial_exponent(d, t)).order == 1; }

CandidateSet candidate_points(const RootDatum& d, int i)
{
  CandidateSet c;
  NodeSet theta = complement(d, with(0, i));
  Rational rp = rho_pairing(d, theta, i);
  for (const auto& r : d.positive_roots) {
    if (r[i] == 0) continue;
    long rest = std::accumulate(r.begin(), r.end(), 0L) - r[i];
    c.x.insert(frac(rest, r[i]) + rp);
  }

  auto inv = inverse_cartan(d);
  Weight omega(d.rank, Rational(0));
  omega[i] = 1;
  c.y.insert(1);
  for (const auto& w : minimal_right_coset_reps(d, theta)) {
    Weight v = apply(d, w, omega);
    v[i] -= 1;
    mpz_class g = 0;
    for (int a = 0; a < d.rank; ++a) {
      Rational n = 0;
      for (int b = 0; b < d.rank; ++b) n += inv[a][b] * v[b];
      if (n.get_den() != 1) throw AnalyzerError("w.omega - omega not in the root lattice");
      mpz_class num = abs(n.get_num());
      g = gcd(g, num);
    }
    long gl = g.get_si();
    for (long k = 1; k <= gl; ++k)
      if (gl % k == 0) c.y.insert(static_cast<int>(k));
  }

  for (const auto& s : c.x)
    for (int m : c.y)
      if (!is_regular(d, Triple{i, s, m})) c.non_regular.emplace_back(s, m);
  return c;
}

std::set<Rational> unit_points(const RootDatum& d, int i, int m)
{
  std::set<Rational> out;
  NodeSet theta = complement(d, with(0, i));
  Rational rp = rho_pairing(d, theta, i);
  for (const auto& r : d.positive_roots) {
    if (r[i] == 0 || r[i] % m != 0) continue;
    long rest = std::accumulate(r.begin(), r.end(), 0L) - r[i];
    out.insert(frac(rest + 1, r[i]) + rp);
    out.insert(frac(rest - 1, r[i]) + rp);
  }
  return out;
}

std::optional<std::vector<int>> regular_reducibility(const RootDatum& d, const Triple& t)
{
  if (!is_regular(d, t)) throw AnalyzerError("regular_reducibility called on non-regular " + to_string(t));
  Exponent l0 = initial_exponent(d, t);
  for (const auto& r : d.positive_roots)
    if (r[t.i] > 0 && is_unit_pairing(full_pairing(d, l0, r))) return r;
  return std::nullopt;
}

std::optional<PartnerDescriptor> rc_partner_search(const RootDatum& d, const TripleData& data, RcOptions opt)
{
  const auto& t = data.t;
  std::vector<Rational> rp(d.rank);
  for (int k = 0; k < d.rank; ++k) rp[k] = rho_pairing(d, complement(d, with(0, k)), k);

  std::set<std::tuple<int, Rational, int>> seen;
  std::vector<PartnerDescriptor> fired;
  for (const auto& lam : orbit(d, data.antidominant)) {
    std::vector<int> free;
    for (int j = 0; j < d.rank; ++j)
      if (!standard_coordinate(lam, j)) free.push_back(j);
    if (free.size() > 1) continue;
    std::vector<int> cand = free;
    if (cand.empty())
      for (int j = 0; j < d.rank; ++j) cand.push_back(j);
    for (int ip : cand) {
      Rational sp = lam.real[ip] + rp[ip];
      int cls = lam.tors[ip];
      if (opt.nonpositive_only && sp > 0) continue;
      // a class generating Z/m is the subject again, up to automorphisms of Z/m
      if (ip == t.i && sp == t.s && std::gcd(cls, t.m) == 1) continue;
      if (!seen.emplace(ip, sp, cls).second) continue;
      auto js = jacquet_to_torus(d, complement(d, with(0, ip)), lam);
      char f = certify(data.jac, data.lambda0, js);
      if (!f) continue;
      PartnerDescriptor p;
      p.i = ip;
      p.s = sp;
      p.torsion_class = cls;
      p.m = cls == 0 ? 1 : t.m / std::gcd(cls, t.m);
      p.fired = f;
      p.sigma_size = js.total();
      p.exponent = lam;
      fired.push_back(std::move(p));
    }
  }
  std::sort(fired.begin(), fired.end(), [](const auto& a, const auto& b) {
    return std::tie(a.fired, a.sigma_size, a.i, a.s, a.torsion_class) <
           std::tie(b.fired, b.sigma_size, b.i, b.s, b.torsion_class);
  });
  for (const auto& p : fired) {
    if (!same_orbit(d, p.exponent, data.antidominant)) continue;
    auto js = jacquet_to_torus(d, complement(d, with(0, p.i)), p.exponent);
    if (exceeds_full_series(d, data.jac, js, data.antidominant)) return p;
  }
  return std::nullopt;
}

std::vector<PartnerDescriptor> rc_corank2(const RootDatum& d, const TripleData& data)
{
  std::set<std::tuple<int, int, Rational, Rational, int, int>> seen;
  std::vector<PartnerDescriptor> out;
  for (const auto& lam : orbit(d, data.antidominant)) {
    std::vector<int> free;
    for (int j = 0; j < d.rank; ++j)
      if (!standard_coordinate(lam, j)) free.push_back(j);
    if (free.size() != 2) continue;
    int a = free[0], b = free[1];
    NodeSet theta = complement(d, with(with(0, a), b));
    Rational shift = rho_pairing(d, theta, a);
    PartnerDescriptor p;
    p.corank2 = true;
    p.i1 = a;
    p.i2 = b;
    p.s1 = lam.real[a] + shift;
    p.s2 = lam.real[b] + shift;
    p.k1 = lam.tors[a];
    p.k2 = lam.tors[b];
    p.m = data.t.m;
    if (!seen.emplace(a, b, p.s1, p.s2, p.k1, p.k2).second) continue;
    auto js = jacquet_to_torus(d, theta, lam);
    char f = certify(data.jac, data.lambda0, js);
    if (!f || !exceeds_full_series(d, data.jac, js, data.antidominant)) continue;
    p.fired = f;
    p.sigma_size = js.total();
    p.exponent = lam;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return std::tie(x.fired, x.sigma_size, x.i1, x.i2, x.s1, x.s2, x.k1, x.k2) <
           std::tie(y.fired, y.sigma_size, y.i1, y.i2, y.s1, y.s2, y.k1, y.k2);
  });
  return out;
}

ClassificationRecord classify(const RootDatum& d, const Triple& t, ClassifyOptions opt)
{
  ClassificationRecord rec;
  rec.group = d.type_label;
  rec.t = t;
  Exponent l0 = initial_exponent(d, t);
  rec.regular = stabilizer(d, l0).order == 1;
  rec.certificate_lines.push_back("l0 = " + to_string(l0));

  if (rec.regular) {
    auto w = regular_reducibility(d, t);
    if (w) {
      std::string root = "(";
      for (std::size_t k = 0; k < w->size(); ++k) root += (k ? "," : "") + std::to_string((*w)[k]);
      root += ")";
      rec.verdict = Verdict::Reducible;
      rec.methods.push_back("regular: unit pairing " + to_string(full_pairing(d, l0, *w)) + " at root " + root);
      rec.socle = SocleSummary{SocleKind::UniqueSubCaseI, 1, "regular: unique irreducible sub and quotient, multiplicity one"};
    } else {
      rec.verdict = Verdict::Irreducible;
      rec.methods.push_back("regular: no unit pairing outside M");
    }
    return rec;
  }

  TripleData data = prepare(d, t);
  auto st = stabilizer(d, data.antidominant);
  rec.certificate_lines.push_back("l_ad = " + to_string(data.antidominant) + " = " + format_word(data.to_ad) + ".l0");
  std::string gens;
  for (const auto& g : st.generators) gens += (gens.empty() ? "" : ", ") + format_word(g);
  rec.certificate_lines.push_back("|Stab(l_ad)| = " + std::to_string(st.order) + ", generators <" + gens + ">");
  rec.certificate_lines.push_back("mult(l_ad) = " + std::to_string(data.jac.multiplicity(data.antidominant)) +
                                  ", mult(l0) = " + std::to_string(data.jac.multiplicity(data.lambda0)) +
                                  ", |W^{M,T}| = " + std::to_string(data.jac.total()));
  auto adm = antidominant_multiplicity_check(d, data.jac);
  rec.certificate_lines.push_back(std::string("anti-dominant multiplicity = stabilizer order: ") + (adm.ok ? "ok" : "VIOLATED"));

  std::optional<FixpointResult> fixpoint;
  if (auto p = rc_partner_search(d, data)) {
    rec.verdict = Verdict::Reducible;
    std::string cls = t.m > 1 ? " (class " + std::to_string(p->torsion_class) + " mod " + std::to_string(t.m) + ")" : "";
    rec.methods.push_back("RC partner " + to_string(*p) + cls + ", test (" + p->fired + "), |W^{M',T}| = " +
                          std::to_string(p->sigma_size));
    rec.partner = *p;
  } else {
    auto irr = irreducibility_test(d, t, data.jac, data.antidominant);
    rec.clamps += irr.fixpoint.clamps;
    if (opt.trace)
      for (const auto& line : irr.fixpoint.trace) rec.certificate_lines.push_back(line);
    rec.certificate_lines.push_back(irr.method);
    fixpoint = std::move(irr.fixpoint);
    if (irr.irreducible) {
      rec.verdict = Verdict::Irreducible;
      rec.methods.push_back(irr.method);
      return rec;
    }
    auto c2 = rc_corank2(d, data);
    if (!c2.empty()) {
      rec.verdict = Verdict::Reducible;
      rec.methods.push_back("RC corank-2 " + to_string(c2.front()) + ", test (" + c2.front().fired + "), " +
                            std::to_string(c2.size()) + " certified choices");
      rec.partner = c2.front();
      rec.corank2_alternatives = std::move(c2);
    } else if (const auto* a = find_curated(d, t); a && validate_curated(d, *a, data.jac, data.antidominant).empty()) {
      rec.verdict = Verdict::Reducible;
      rec.methods.push_back("curated Case III: " + a->note);
    }
  }

  if (rec.verdict != Verdict::Reducible) return rec;
  if (t.s > 0) {
    rec.socle = SocleSummary{SocleKind::Unknown, 0, "s > 0: follows from the contragredient at -s, not computed"};
    return rec;
  }
  if (!fixpoint && data.jac.multiplicity(data.lambda0) > 1) {
    fixpoint = run_fixpoint(d, data.jac, data.antidominant);
    rec.clamps += fixpoint->clamps;
  }
  rec.socle = socle_analysis(d, t, data.jac, data.antidominant, fixpoint ? &*fixpoint : nullptr);
  if (rec.socle->kind == SocleKind::CuratedCaseIII)
    rec.methods.push_back("curated Case III socle (validated: |Stab(l_ad)| = " + std::to_string(st.order) +
                          ", mult(l_ad) = " + std::to_string(data.jac.multiplicity(data.antidominant)) + ")");
  return rec;
}

} // namespace dps
