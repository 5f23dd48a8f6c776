// On-disk Weyl table: text header + one reduced word per line, CRC-32 over the body.
#include "dps/weyl.hpp"

#include <boost/crc.hpp>

#include <fstream>
#include <sstream>
#include <system_error>
#include <unistd.h>

namespace dps {

namespace {

constexpr const char* kMagic = "dps-weyl-cache";
constexpr int kVersion = 1;

std::uint32_t crc32(const std::string& s)
{
  boost::crc_32_type c;
  c.process_bytes(s.data(), s.size());
  return c.checksum();
}

std::string cartan_key(const RootDatum& d)
{
  std::string flat;
  for (const auto& row : d.cartan)
    for (int x : row) flat += std::to_string(x) + ",";
  std::ostringstream os;
  os << std::hex << crc32(flat);
  return os.str();
}

std::filesystem::path cache_file(const RootDatum& d, const std::filesystem::path& dir)
{
  return dir / ("weyl-" + d.type_label + "-" + cartan_key(d) + ".v" + std::to_string(kVersion));
}

std::string body_of(const WeylGroupTable& t)
{
  std::string body;
  for (const auto& w : t.words) {
    for (std::size_t k = 0; k < w.size(); ++k) body += (k ? " " : "") + std::to_string(w[k] + 1);
    body += '\n';
  }
  return body;
}

} // namespace

bool load_weyl_cache(const RootDatum& d, const std::filesystem::path& dir, WeylGroupTable& out)
{
  std::ifstream in(cache_file(d, dir), std::ios::binary);
  if (!in) return false;
  std::string magic, type;
  int version = 0;
  std::uint64_t count = 0;
  std::uint32_t crc = 0;
  std::string line;
  if (!std::getline(in, line)) return false;
  std::istringstream h(line);
  if (!(h >> magic >> version >> type >> count >> std::hex >> crc)) return false;
  if (magic != kMagic || version != kVersion || type != d.type_label || count != weyl_group_order(d)) return false;

  std::string body((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (crc32(body) != crc) return false;

  WeylGroupTable t;
  t.type_label = d.type_label;
  std::istringstream bs(body);
  while (std::getline(bs, line)) {
    Word w;
    std::istringstream ls(line);
    int g;
    while (ls >> g) {
      if (g < 1 || g > d.rank) return false;
      w.push_back(g - 1);
    }
    t.words.push_back(std::move(w));
  }
  if (t.words.size() != count || !t.words.front().empty()) return false;
  for (std::size_t k = 0; k < t.words.size(); ++k)
    if (t.words[k].size() > t.words[t.longest].size()) t.longest = k;
  // the longest element must invert every positive root
  if (inversion_count(d, t.words[t.longest]) != static_cast<int>(d.positive_roots.size())) return false;
  t.from_cache = true;
  out = std::move(t);
  return true;
}

void save_weyl_cache(const RootDatum& d, const std::filesystem::path& dir, const WeylGroupTable& table)
{
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw CacheError("cannot create cache directory " + dir.string() + ": " + ec.message());

  std::string body = body_of(table);
  std::ostringstream header;
  header << kMagic << ' ' << kVersion << ' ' << d.type_label << ' ' << table.words.size() << ' ' << std::hex
         << crc32(body) << '\n';

  auto target = cache_file(d, dir);
  auto tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CacheError("cannot write cache file " + tmp.string());
    out << header.str() << body;
    if (!out.flush()) throw CacheError("short write on " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw CacheError("cannot install cache file " + target.string());
  }
}

} // namespace dps
