#include "dps/weyl.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

using namespace dps;

namespace {

std::set<oracle::Mat> to_mats(const RootDatum& d, const std::vector<Word>& ws)
{
  std::set<oracle::Mat> out;
  for (const auto& w : ws) {
    auto e = make_element(d, w);
    oracle::Mat m;
    for (const auto& row : e.action) m.insert(m.end(), row.begin(), row.end());
    out.insert(m);
  }
  return out;
}

std::set<oracle::Mat> oracle_mats(const oracle::Group& g, const std::vector<int>& idx)
{
  std::set<oracle::Mat> out;
  for (int k : idx) out.insert(g.elems[k]);
  return out;
}

} // namespace

TEST_CASE("reflection action")
{
  auto d = build_root_datum("E6");
  Weight l{3, -1, -1, -1, -1, -1};
  CHECK(reflect(d, 0, l) == Weight{-3, -1, 2, -1, -1, -1});
  CHECK(apply(d, Word{3, 2, 0}, l) == Weight{-1, 0, -1, -1, 0, -1});
  CHECK(format_word({3, 1, 2, 4, 3}) == "w[4,2,3,5,4]");
  CHECK(inverse({1, 2, 3}) == Word{3, 2, 1});
}

TEST_CASE("Weyl group orders")
{
  CHECK(weyl_group_order(build_root_datum("A2")) == 6);
  CHECK(weyl_group_order(build_root_datum("D4")) == 192);
  CHECK(weyl_group_order(build_root_datum("E6")) == 51840);
  CHECK(enumerate_weyl(build_root_datum("A2")).words.size() == 6);
  CHECK(enumerate_weyl(build_root_datum("D4")).words.size() == 192);
  auto e6 = build_root_datum("E6");
  auto t = enumerate_weyl(e6);
  CHECK(t.words.size() == 51840);
  CHECK(t.words[t.longest].size() == 36);
  CHECK(inversion_count(e6, t.words[t.longest]) == 36);
}

TEST_CASE("word length equals inversion count")
{
  auto d = build_root_datum("D4");
  for (const auto& w : enumerate_weyl(d).words) CHECK(inversion_count(d, w) == static_cast<int>(w.size()));
}

TEST_CASE("coset representatives agree with shortest-in-coset brute force")
{
  struct Case {
    const char* label;
    oracle::Cartan cartan;
  };
  for (const auto& c : {Case{"A3", oracle::cartan_a(3)}, Case{"D4", oracle::cartan_d4()}}) {
    auto d = build_root_datum(c.label);
    auto g = oracle::build_group(c.cartan);
    auto table = enumerate_weyl(d);
    NodeSet all = full_set(d);
    for (NodeSet m = 0; m <= all; ++m) {
      CAPTURE(c.label);
      CAPTURE(m);
      auto want = oracle_mats(g, oracle::shortest_left_coset_reps(g, m));
      CHECK(to_mats(d, minimal_right_coset_reps(d, m)) == want);
      for (NodeSet l = 0; l <= all; ++l) {
        CAPTURE(l);
        CHECK(to_mats(d, minimal_coset_reps(d, table, l, m)) ==
              oracle_mats(g, oracle::shortest_double_coset_reps(g, l, m)));
      }
      // reps of W_J / W_{J cap M} inside a parabolic W_J
      for (NodeSet j = 0; j <= all; ++j) {
        if ((m & ~j) != 0) continue;
        auto reps = minimal_right_coset_reps(d, j, m);
        CHECK(reps.size() * weyl_subgroup_order(d, m) == weyl_subgroup_order(d, j));
        for (const auto& w : reps)
          for (int letter : w) CHECK(contains(j, letter));
      }
    }
  }
}

TEST_CASE("maximal parabolic sizes in E6")
{
  auto d = build_root_datum("E6");
  std::vector<std::uint64_t> levi{1920, 720, 240, 72, 240, 1920}, cos{27, 72, 216, 720, 216, 27};
  for (int i = 0; i < 6; ++i) {
    NodeSet th = complement(d, with(0, i));
    CHECK(weyl_subgroup_order(d, th) == levi[i]);
    CHECK(minimal_right_coset_reps(d, th).size() == cos[i]);
    CHECK(parabolic_elements(d, th).size() == levi[i]);
  }
}

TEST_CASE("orbit-stabilizer on random E6 exponents against brute force")
{
  auto d = build_root_datum("E6");
  auto g = oracle::build_group(oracle::cartan_e6());
  REQUIRE(g.elems.size() == 51840);
  std::mt19937 rng(20261019);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 2), ord(1, 3);
  for (int k = 0; k < 100; ++k) {
    int m = ord(rng);
    std::vector<Rational> re(6);
    std::vector<int> tors(6);
    for (auto& x : re) {
      x = Rational(num(rng), den(rng));
      x.canonicalize();
      if (rng() % 2) x = 0; // bias toward large stabilizers
    }
    for (auto& t : tors) t = m > 1 ? static_cast<int>(rng() % m) : 0;
    Exponent e = make_exponent(d, re, tors, m);
    CAPTURE(to_string(e));
    auto st = stabilizer(d, e);
    auto orb = orbit(d, e);
    CHECK(st.order * orb.size() == 51840);
    CHECK(static_cast<long>(st.order) == oracle::stabilizer_count(g, e.real, e.tors, m));
    CHECK(static_cast<long>(orb.size()) == oracle::orbit_size(g, e.real, e.tors, m));
    CHECK(st.elements.size() == st.order);
    for (const auto& w : st.generators) CHECK(apply(d, w, e) == e);
    auto [w, ad] = to_antidominant(d, e);
    CHECK(is_antidominant(ad));
    CHECK(apply(d, w, e) == ad);
    CHECK(same_orbit(d, e, ad));
  }
}

TEST_CASE("stabilizer anchors")
{
  auto d = build_root_datum("E6");
  auto st = stabilizer(d, real_exponent(d, {-1, 0, -1, -1, 0, -1}));
  CHECK(st.order == 4);

  Exponent ad = make_exponent(d, {0, 0, 0, -1, 0, 0}, {1, 1, 1, 1, 1, 1}, 3);
  auto s3 = stabilizer(d, ad);
  CHECK(s3.order == 3);
  bool found = false;
  for (const auto& w : s3.elements) found |= same_element(d, w, Word{2, 0, 5, 4});
  CHECK(found);
}

TEST_CASE("Weyl cache round trip and corruption detection")
{
  auto d = build_root_datum("D4");
  auto dir = std::filesystem::path(DPS_TEST_BIN_DIR) / "weyl-cache-test";
  std::filesystem::remove_all(dir);
  auto cold = enumerate_weyl(d, dir);
  CHECK_FALSE(cold.from_cache);
  auto warm = enumerate_weyl(d, dir);
  CHECK(warm.from_cache);
  CHECK(warm.words == cold.words);
  CHECK(warm.longest == cold.longest);

  std::filesystem::path file;
  for (const auto& e : std::filesystem::directory_iterator(dir)) file = e.path();
  REQUIRE(!file.empty());
  {
    std::fstream f(file, std::ios::in | std::ios::out);
    f.seekp(-3, std::ios::end);
    f.put('1');
  }
  // a corrupted file is rejected and rebuilt, not trusted
  auto again = enumerate_weyl(d, dir);
  CHECK_FALSE(again.from_cache);
  CHECK(again.words == cold.words);
  CHECK(enumerate_weyl(d, dir).from_cache);
  std::filesystem::remove_all(dir);
}
