#include "dps/catalog.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <thread>

using namespace dps;

namespace {

enum Exit { kOk = 0, kDiff = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

RootDatum load_group(const std::string& g)
{
  if (std::filesystem::exists(g)) return root_datum_from_cartan(read_cartan_file(g), std::filesystem::path(g).stem());
  return build_root_datum(g);
}

std::optional<std::filesystem::path> cache_dir(const std::string& flag)
{
  if (!flag.empty()) return std::filesystem::path(flag);
  if (const char* env = std::getenv("DEGPS_CACHE_DIR"); env && *env) return std::filesystem::path(env);
  return std::nullopt;
}

std::vector<int> parse_int_list(const std::string& text, const char* what)
{
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + ": '" + tok + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

std::vector<Rational> parse_rational_list(const std::string& text)
{
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      out.push_back(parse_rational(tok));
    } catch (const std::exception&) {
      throw UsageError("bad s value: '" + tok + "'");
    }
  }
  return out;
}

int node_arg(const RootDatum& d, int i)
{
  if (i < 1 || i > d.rank) throw UsageError("parabolic index must be in 1.." + std::to_string(d.rank));
  return i - 1;
}

void write_text(const std::filesystem::path& p, const std::string& text)
{
  std::ofstream out(p);
  out << text;
  if (!out) throw std::runtime_error("write failed: " + p.string());
}

// ---- subcommands

struct Common {
  std::string group = "E6";
  std::string cache;
  int jobs = 0;
};

int cmd_scan(const Common& c, const std::string& parabolic, const std::string& orders, const std::string& s_list,
             const std::string& s_sign, bool trace, const std::string& out)
{
  RootDatum d = load_group(c.group);
  ScanConfig cfg;
  if (!parabolic.empty())
    for (int i : parse_int_list(parabolic, "parabolic")) cfg.parabolics.push_back(node_arg(d, i));
  if (!orders.empty()) {
    cfg.orders = parse_int_list(orders, "order");
    for (int m : *cfg.orders)
      if (m < 1) throw UsageError("orders must be positive");
  }
  if (!s_list.empty()) cfg.s_list = parse_rational_list(s_list);
  if (s_sign != "nonpositive" && s_sign != "all") throw UsageError("--s-sign must be 'nonpositive' or 'all'");
  cfg.include_positive = s_sign == "all";
  cfg.jobs = c.jobs > 0 ? c.jobs : std::max(1u, std::thread::hardware_concurrency());
  cfg.trace = trace;

  auto recs = scan(d, cfg);
  std::vector<TableRow> rows;
  int clamps = 0;
  for (const auto& r : recs) {
    rows.push_back(to_row(r));
    clamps += r.clamps;
  }
  if (out.empty()) {
    std::cout << "i\ts\tm\tregular\tverdict\tsocle\tpartner\n";
    for (const auto& r : rows)
      std::cout << r.i << '\t' << r.s.get_str() << '\t' << r.m << '\t' << r.regular << '\t' << r.verdict << '\t'
                << r.socle << '\t' << r.partner << '\n';
  } else {
    std::filesystem::path base(out);
    if (base.has_parent_path()) std::filesystem::create_directories(base.parent_path());
    write_text(base.string() + ".json", report_json(recs));
    write_table(base.string() + ".tsv", d.type_label, rows);
    std::cerr << "wrote " << base.string() << ".json and " << base.string() << ".tsv (" << rows.size() << " points)\n";
  }
  if (clamps) {
    std::cerr << "soundness: " << clamps << " clamp events\n";
    return kInternal;
  }
  return kOk;
}

int cmd_analyze(const Common& c, int i, const std::string& s, int m, bool trace, const std::string& out)
{
  RootDatum d = load_group(c.group);
  if (m < 1) throw UsageError("order must be positive");
  Rational sv;
  try {
    sv = parse_rational(s);
  } catch (const std::exception&) {
    throw UsageError("bad s value: '" + s + "'");
  }
  auto r = classify(d, Triple{node_arg(d, i), sv, m}, ClassifyOptions{trace});
  std::cout << d.type_label << " " << to_string(r.t) << ": " << (r.regular ? "regular" : "non-regular") << ", "
            << to_string(r.verdict) << "\n";
  for (const auto& l : r.methods) std::cout << "  method: " << l << "\n";
  for (const auto& l : r.certificate_lines) std::cout << "  " << l << "\n";
  if (r.socle) std::cout << "  socle: " << to_string(r.socle->kind) << " (" << r.socle->notes << ")\n";
  if (!out.empty()) write_text(out, record_json(r, 2) + "\n");
  if (r.clamps) {
    std::cerr << "soundness: " << r.clamps << " clamp events\n";
    return kInternal;
  }
  return kOk;
}

int cmd_weyl(const Common& c)
{
  RootDatum d = load_group(c.group);
  auto dir = cache_dir(c.cache);
  auto t0 = std::chrono::steady_clock::now();
  auto table = enumerate_weyl(d, dir);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cout << "group " << d.type_label << "\n|W| = " << table.words.size() << " (formula " << weyl_group_order(d)
            << ")\nlongest element length " << table.words[table.longest].size() << "\n";
  std::cout << "cache: " << (dir ? dir->string() : std::string("none")) << (table.from_cache ? " (hit)" : "")
            << ", enumeration " << secs << " s\n";
  std::cout << "i\t|W_M|\t|W^{M,T}|\n";
  for (int i = 0; i < d.rank; ++i) {
    NodeSet th = complement(d, with(0, i));
    std::cout << i + 1 << '\t' << weyl_subgroup_order(d, th) << '\t' << minimal_right_coset_reps(d, th).size() << '\n';
  }
  return kOk;
}

int cmd_diff(const std::string& report, const std::string& golden)
{
  auto diffs = diff_tables(read_table(report), read_table(golden.empty() ? default_golden_path() : std::filesystem::path(golden)));
  for (const auto& l : diffs) std::cout << l << "\n";
  std::cout << (diffs.empty() ? "no differences\n" : std::to_string(diffs.size()) + " differences\n");
  return diffs.empty() ? kOk : kDiff;
}

// Invariant suites; each line reports one check.
int cmd_selftest(const Common& c)
{
  int failed = 0;
  auto check = [&](bool ok, const std::string& what) {
    std::cout << (ok ? "ok   " : "FAIL ") << what << "\n";
    if (!ok) ++failed;
  };
  RootDatum e6 = build_root_datum("E6");

  auto table = enumerate_weyl(e6, cache_dir(c.cache));
  check(table.words.size() == 51840, "|W(E6)| = 51840");
  bool cosets = true;
  for (int i = 0; i < e6.rank; ++i) {
    NodeSet th = complement(e6, with(0, i));
    cosets &= minimal_right_coset_reps(e6, th).size() * weyl_subgroup_order(e6, th) == 51840;
  }
  check(cosets, "|W^{M,T}| * |W_M| = |W| for every maximal parabolic");

  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> coord(-2, 2);
  bool orb = true;
  for (int k = 0; k < 20; ++k) {
    std::vector<Rational> re(6);
    for (auto& x : re) x = coord(rng);
    Exponent e = real_exponent(e6, re);
    orb &= orbit(e6, e).size() * stabilizer(e6, e).order == 51840;
  }
  check(orb, "orbit-stabilizer on 20 random E6 exponents");

  bool adm = true;
  for (const Triple& t : {Triple{0, -2, 1}, Triple{3, Rational(-1, 2), 3}, Triple{1, Rational(-1, 2), 2}}) {
    auto data = prepare(e6, t);
    adm &= antidominant_multiplicity_check(e6, data.jac).ok;
  }
  check(adm, "anti-dominant multiplicity equals stabilizer order");

  auto fp = run_fixpoint(e6, prepare(e6, Triple{0, -2, 1}).jac, prepare(e6, Triple{0, -2, 1}).antidominant);
  check(fp.covered == 27 && fp.total == 27 && fp.clamps == 0, "branching fixpoint at [1,-2,1] covers 27/27");

  bool rules = true;
  for (const auto& r : applicable_rules(e6, real_exponent(e6, {-1, -1, -1, 2, -1, -1})))
    rules &= r.d >= 1 && r.size() > 0;
  check(rules, "rule contributions are well formed");

  RootDatum a1 = build_root_datum("A1");
  ScanConfig cfg;
  cfg.include_positive = true;
  std::vector<std::string> red;
  for (const auto& r : scan(a1, cfg))
    if (r.verdict == Verdict::Reducible) red.push_back(r.t.s.get_str());
  check(red == std::vector<std::string>{"-1", "1"}, "A1 reducibility exactly at s = -1, 1");

  bool rejected = false;
  try {
    build_root_datum("B2");
  } catch (const RootDatumError&) {
    rejected = true;
  }
  check(rejected, "non-simply-laced input rejected");

  std::cout << (failed ? std::to_string(failed) + " checks failed\n" : "all checks passed\n");
  return failed ? kDiff : kOk;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Degenerate principal series classifier"};
  app.require_subcommand(1);
  Common c;
  app.add_option("--group", c.group, "Cartan type label (A/D/E) or Cartan matrix file")->capture_default_str();
  app.add_option("--cache-dir", c.cache, "Weyl group cache directory (env DEGPS_CACHE_DIR)");
  app.add_option("--jobs", c.jobs, "worker threads (default: hardware)");

  std::string parabolic, orders, s_list, s_sign = "nonpositive", out;
  bool trace = false;

  auto* scan_cmd = app.add_subcommand("scan", "classify all candidate points");
  scan_cmd->add_option("--parabolic", parabolic, "1-based nodes, comma separated (default: all)");
  scan_cmd->add_option("--orders,--order", orders, "torsion orders, comma separated (default: possible orders)");
  scan_cmd->add_option("--s-list", s_list, "explicit s values, comma separated");
  scan_cmd->add_option("--s-sign", s_sign, "nonpositive | all")->capture_default_str();
  scan_cmd->add_flag("--trace", trace, "record branching steps");
  scan_cmd->add_option("--out", out, "output prefix for .json and .tsv");

  int ai = 0, am = 1;
  std::string as;
  auto* an = app.add_subcommand("analyze", "classify one triple with its certificate");
  an->add_option("i", ai, "parabolic node, 1-based")->required();
  an->add_option("s", as, "s as p/q")->required();
  an->add_option("m", am, "order of the character")->capture_default_str();
  an->add_flag("--trace", trace, "print every branching step");
  an->add_option("--out", out, "write the JSON record here");

  auto* wc = app.add_subcommand("weyl", "Weyl group sizes and cache status");

  std::string report, golden;
  auto* dg = app.add_subcommand("diff-golden", "compare a TSV report with the golden tables");
  dg->add_option("report", report)->required();
  dg->add_option("golden", golden, "default: shipped E6 tables");

  auto* st = app.add_subcommand("selftest", "run the invariant suites");

  // flags after the subcommand name
  for (auto* sub : {scan_cmd, an, wc, st}) {
    sub->add_option("--group", c.group);
    sub->add_option("--cache-dir", c.cache);
    sub->add_option("--jobs", c.jobs);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*scan_cmd) return cmd_scan(c, parabolic, orders, s_list, s_sign, trace, out);
    if (*an) return cmd_analyze(c, ai, as, am, trace, out);
    if (*wc) return cmd_weyl(c);
    if (*dg) return cmd_diff(report, golden);
    if (*st) return cmd_selftest(c);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const RootDatumError& e) {
    std::cerr << "invalid group: " << e.what() << "\n";
    return kUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDiff;
  }
  return kUsage;
}
