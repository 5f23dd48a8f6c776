#include "dps/catalog.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace dps {

namespace {

std::vector<std::string> split_tabs(const std::string& line)
{
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, '\t')) out.push_back(cur);
  return out;
}

std::string key_of(int i, const Rational& s, int m)
{
  return "[" + std::to_string(i) + "," + s.get_str() + "," + std::to_string(m) + "]";
}

} // namespace

std::filesystem::path default_golden_path() { return std::filesystem::path(DPS_DATA_DIR) / "e6_golden.tsv"; }

std::vector<TableRow> read_table(const std::filesystem::path& path)
{
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open table " + path.string());
  std::vector<TableRow> rows;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    auto f = split_tabs(line);
    if (f.size() < 7) throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": expected 7+ columns");
    if (f[0] == "i") continue; // column header
    TableRow r;
    try {
      r.i = std::stoi(f[0]);
      r.s = parse_rational(f[1]);
      r.m = std::stoi(f[2]);
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    r.regular = f[3];
    r.verdict = f[4];
    r.socle = f[5];
    r.partner = f[6];
    if (f.size() > 7) r.cite = f[7];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_table(const std::filesystem::path& path, const std::string& group, const std::vector<TableRow>& rows)
{
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# group " << group << "\n";
  out << "i\ts\tm\tregular\tverdict\tsocle\tpartner\tcite\n";
  for (const auto& r : rows)
    out << r.i << '\t' << r.s.get_str() << '\t' << r.m << '\t' << r.regular << '\t' << r.verdict << '\t' << r.socle
        << '\t' << r.partner << '\t' << (r.cite.empty() ? "-" : r.cite) << '\n';
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string socle_cell(const ClassificationRecord& r)
{
  if (r.verdict != Verdict::Reducible || !r.socle) return "-";
  if (r.regular) return "regular";
  switch (r.socle->kind) {
  case SocleKind::UniqueSubCaseI: return "case_I";
  case SocleKind::UniqueSubCaseII: return "case_II";
  case SocleKind::CuratedCaseIII: return "case_III";
  case SocleKind::LengthBound: return "bound:" + std::to_string(r.socle->length_bound);
  case SocleKind::Unknown: return "-";
  }
  return "-";
}

TableRow to_row(const ClassificationRecord& r)
{
  TableRow row;
  row.i = r.t.i + 1;
  row.s = r.t.s;
  row.m = r.t.m;
  row.regular = r.regular ? "reg" : "non-reg";
  row.verdict = r.verdict == Verdict::Reducible ? "red" : r.verdict == Verdict::Irreducible ? "irr" : "inconclusive";
  row.socle = socle_cell(r);
  row.partner = r.partner ? to_string(*r.partner) : "-";
  return row;
}

std::vector<Triple> scan_points(const RootDatum& d, const ScanConfig& cfg)
{
  std::vector<int> pars = cfg.parabolics;
  if (pars.empty())
    for (int i = 0; i < d.rank; ++i) pars.push_back(i);

  std::vector<Triple> pts;
  for (int i : pars) {
    if (i < 0 || i >= d.rank) throw std::invalid_argument("parabolic index out of range");
    auto cand = candidate_points(d, i);
    std::vector<int> orders = cfg.orders ? *cfg.orders : std::vector<int>(cand.y.begin(), cand.y.end());
    std::set<Rational> cols;
    if (cfg.s_list) {
      for (Rational s : *cfg.s_list) {
        s.canonicalize();
        cols.insert(s);
      }
    } else {
      for (int m : orders) {
        for (const auto& s : cand.x)
          if (!is_regular(d, Triple{i, s, m})) cols.insert(s);
        for (const auto& s : unit_points(d, i, m))
          if (is_regular(d, Triple{i, s, m})) cols.insert(s);
      }
      if (!cfg.include_positive)
        for (auto it = cols.begin(); it != cols.end();) it = *it > 0 ? cols.erase(it) : std::next(it);
    }
    for (int m : orders)
      for (const auto& s : cols) pts.push_back(Triple{i, s, m});
  }
  std::sort(pts.begin(), pts.end(), [](const Triple& a, const Triple& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.m != b.m) return a.m < b.m;
    return a.s < b.s;
  });
  return pts;
}

std::vector<ClassificationRecord> classify_all(const RootDatum& d, const std::vector<Triple>& pts, int jobs, bool trace)
{
  std::vector<ClassificationRecord> out(pts.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  auto worker = [&] {
    while (true) {
      std::size_t k = next++;
      if (k >= pts.size()) return;
      try {
        out[k] = classify(d, pts[k], ClassifyOptions{trace});
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(pts.size())));
  std::vector<std::thread> pool;
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<ClassificationRecord> scan(const RootDatum& d, const ScanConfig& cfg)
{
  return classify_all(d, scan_points(d, cfg), cfg.jobs, cfg.trace);
}

namespace {

nlohmann::ordered_json partner_json(const PartnerDescriptor& p)
{
  nlohmann::ordered_json j;
  j["form"] = p.corank2 ? "corank2" : "maximal";
  j["descriptor"] = to_string(p);
  if (!p.corank2) j["torsion_class"] = p.torsion_class;
  j["test"] = std::string(1, p.fired);
  j["sigma_jacquet_size"] = p.sigma_size;
  j["exponent"] = to_string(p.exponent);
  return j;
}

nlohmann::ordered_json to_json(const ClassificationRecord& r)
{
  nlohmann::ordered_json j;
  j["group"] = r.group;
  j["i"] = r.t.i + 1;
  j["s"] = r.t.s.get_str();
  j["m"] = r.t.m;
  j["regular"] = r.regular;
  j["verdict"] = to_string(r.verdict);
  j["methods"] = r.methods;
  j["partner"] = r.partner ? partner_json(*r.partner) : nlohmann::ordered_json(nullptr);
  if (!r.corank2_alternatives.empty()) {
    auto alts = nlohmann::ordered_json::array();
    for (const auto& p : r.corank2_alternatives) alts.push_back(to_string(p));
    j["corank2_certified"] = alts;
  }
  if (r.socle) {
    nlohmann::ordered_json s;
    s["kind"] = to_string(r.socle->kind);
    s["length_bound"] = r.socle->length_bound;
    s["notes"] = r.socle->notes;
    j["socle"] = s;
  } else {
    j["socle"] = nullptr;
  }
  j["clamps"] = r.clamps;
  j["certificate_lines"] = r.certificate_lines;
  return j;
}

} // namespace

std::string record_json(const ClassificationRecord& r, int indent) { return to_json(r).dump(indent); }

std::string report_json(const std::vector<ClassificationRecord>& rs)
{
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

std::vector<std::string> diff_tables(const std::vector<TableRow>& report, const std::vector<TableRow>& golden)
{
  std::map<std::string, const TableRow*> rep, gold;
  for (const auto& r : report) rep[key_of(r.i, r.s, r.m)] = &r;
  for (const auto& r : golden) gold[key_of(r.i, r.s, r.m)] = &r;
  std::vector<std::string> diffs;
  for (const auto& [k, g] : gold) {
    auto it = rep.find(k);
    if (it == rep.end()) {
      diffs.push_back("missing " + k + ": expected " + g->regular + " " + g->verdict);
      continue;
    }
    const TableRow* r = it->second;
    if (r->regular != g->regular || r->verdict != g->verdict)
      diffs.push_back("mismatch " + k + ": got " + r->regular + " " + r->verdict + ", expected " + g->regular + " " +
                      g->verdict + (g->cite.empty() ? "" : " (" + g->cite + ")"));
  }
  for (const auto& [k, r] : rep)
    if (!gold.count(k)) diffs.push_back("unexpected " + k + ": " + r->regular + " " + r->verdict);
  return diffs;
}

} // namespace dps
