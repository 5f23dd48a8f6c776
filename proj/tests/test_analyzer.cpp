#include "dps/analyzer.hpp"

#include <doctest.h>

using namespace dps;

namespace {

Triple T(int i1, const char* s, int m) { return Triple{i1 - 1, parse_rational(s), m}; }

std::string partner_of(const RootDatum& d, const Triple& t)
{
  auto p = rc_partner_search(d, prepare(d, t));
  return p ? to_string(*p) : "-";
}

} // namespace

TEST_CASE("possible orders and candidate points")
{
  auto d = build_root_datum("E6");
  CHECK(candidate_points(d, 0).y == std::set<int>{1});
  CHECK(candidate_points(d, 1).y == std::set<int>{1, 2});
  CHECK(candidate_points(d, 2).y == std::set<int>{1, 2});
  CHECK(candidate_points(d, 3).y == std::set<int>{1, 2, 3});
  CHECK(candidate_points(d, 5).y == std::set<int>{1});
  CHECK(candidate_points(d, 3).x.count(Rational(-1, 6)) == 1);
  CHECK(unit_points(d, 0, 1).count(-6) == 1);
}

TEST_CASE("regularity and regular reducibility")
{
  auto d = build_root_datum("E6");
  CHECK(is_regular(d, T(1, "-6", 1)));
  CHECK_FALSE(is_regular(d, T(1, "-3", 1)));
  CHECK(regular_reducibility(d, T(1, "-6", 1)).has_value());
  CHECK_FALSE(regular_reducibility(d, T(2, "-3/2", 2)).has_value());
  CHECK(regular_reducibility(d, T(2, "-1/2", 2)).has_value());
  CHECK_THROWS_AS(regular_reducibility(d, T(1, "-3", 1)), AnalyzerError);
}

TEST_CASE("maximal RC partners")
{
  auto d = build_root_datum("E6");
  CHECK(partner_of(d, T(1, "-3", 1)) == "[6,-3,1]");
  CHECK(partner_of(d, T(2, "-7/2", 1)) == "[1,-3,1]");
  CHECK(partner_of(d, T(2, "-5/2", 1)) == "[1,0,1]");
  CHECK(partner_of(d, T(3, "-7/2", 1)) == "[1,-4,1]");
  CHECK(partner_of(d, T(3, "-5/2", 1)) == "[6,-1,1]");
  CHECK(partner_of(d, T(3, "-3/2", 1)) == "[2,-1/2,1]");
  CHECK(partner_of(d, T(4, "-5/2", 1)) == "[1,-3,1]");
  CHECK(partner_of(d, T(4, "-3/2", 1)) == "[2,-1/2,1]");
  CHECK(partner_of(d, T(4, "-1", 1)) == "[3,0,1]");
  CHECK(partner_of(d, T(4, "-1", 2)) == "[3,0,2]");
  // irreducible points have none
  CHECK(partner_of(d, T(1, "-2", 1)) == "-");
  CHECK(partner_of(d, T(3, "-1/2", 1)) == "-");
}

TEST_CASE("partners lie in the same orbit")
{
  auto d = build_root_datum("E6");
  for (const auto& t : {T(1, "-3", 1), T(3, "-5/2", 1), T(4, "-1", 2)}) {
    auto data = prepare(d, t);
    auto p = rc_partner_search(d, data);
    REQUIRE(p);
    CHECK(same_orbit(d, p->exponent, data.antidominant));
    CHECK(to_string(initial_exponent(d, Triple{p->i, p->s, p->m}, p->torsion_class)).size() > 0);
  }
}

TEST_CASE("corank-2 certificates include the quoted descriptors")
{
  auto d = build_root_datum("E6");
  auto contains = [&](const Triple& t, const std::string& want) {
    for (const auto& p : rc_corank2(d, prepare(d, t)))
      if (to_string(p) == want) return true;
    return false;
  };
  CHECK(contains(T(2, "-1/2", 1), "[[1,2],[0,-1],[0,0]]"));
  CHECK(contains(T(4, "-1/2", 1), "[[3,6],[1/2,-3/2],[0,0]]"));
  CHECK(contains(T(4, "-1/2", 2), "[[1,5],[1/2,1/2],[1,1]]"));
  CHECK(rc_corank2(d, prepare(d, T(3, "-1/2", 1))).empty());
}

TEST_CASE("classification records")
{
  auto d = build_root_datum("E6");
  auto r = classify(d, T(1, "0", 1));
  CHECK_FALSE(r.regular);
  CHECK(r.verdict == Verdict::Irreducible);

  auto c1 = classify(d, T(1, "-3", 1));
  CHECK(c1.verdict == Verdict::Reducible);
  REQUIRE(c1.socle);
  CHECK(c1.socle->kind == SocleKind::UniqueSubCaseI);

  auto c2 = classify(d, T(2, "-5/2", 1));
  REQUIRE(c2.socle);
  CHECK(c2.socle->kind == SocleKind::UniqueSubCaseII);

  auto c3 = classify(d, T(4, "-1/2", 3));
  CHECK(c3.verdict == Verdict::Reducible);
  REQUIRE(c3.socle);
  CHECK(c3.socle->kind == SocleKind::CuratedCaseIII);
  CHECK(c3.socle->length_bound == 3);
  CHECK(c3.clamps == 0);

  auto e = classify(d, T(3, "-1/2", 1));
  CHECK(e.verdict == Verdict::Irreducible);
  CHECK(e.methods.front().rfind("endpoint test", 0) == 0);

  // contragredient side: reducibility without a socle computation
  auto pos = classify(d, T(1, "3", 1));
  CHECK(pos.verdict == Verdict::Reducible);
  REQUIRE(pos.socle);
  CHECK(pos.socle->kind == SocleKind::Unknown);
}

TEST_CASE("rank one: reducible exactly at s = 1 and s = -1")
{
  auto d = build_root_datum("A1");
  for (int num = -12; num <= 12; ++num)
    for (int den : {1, 2, 3}) {
      Rational s(num, den);
      s.canonicalize();
      auto r = classify(d, Triple{0, s, 1});
      CAPTURE(s.get_str());
      CHECK((r.verdict == Verdict::Reducible) == (s == 1 || s == -1));
    }
}
