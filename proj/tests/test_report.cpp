#include <doctest.h>

#include <cmath>

#include "leastgrad/report.hpp"

using namespace lg;

TEST_CASE("report json round trip keeps order and special values") {
  VerificationReport r;
  CheckResult a;
  a.name = "b.check";
  a.anchor = "anchor-b";
  a.pass = true;
  a.margin = INFINITY;
  a.measured = {{"z", 1.5}, {"a", NAN}};
  a.bounds = {{"upper", -INFINITY}};
  r.checks.push_back(a);
  CheckResult b = a;
  b.name = "a.check";
  b.pass = false;
  b.note = "why";
  r.checks.push_back(b);
  const std::string text = r.to_json();
  const VerificationReport back = VerificationReport::from_json(text);
  CHECK(back.to_json() == text);
  REQUIRE(back.checks.size() == 2);
  CHECK(back.checks[0].name == "b.check");
  CHECK(back.checks[0].measured[0].first == "z");
  CHECK(std::isnan(back.checks[0].measured[1].second));
  CHECK(std::isinf(back.checks[0].margin));
  CHECK_FALSE(back.all_pass());
  CHECK(back.find("a.check")->note == "why");
}

TEST_CASE("unanchored check fails self-validation") {
  VerificationReport r;
  CheckResult c;
  c.name = "x";
  r.checks.push_back(c);
  std::string why;
  CHECK_FALSE(r.self_validate(&why));
  CHECK_FALSE(why.empty());
  r.checks[0].anchor = "x-anchor";
  CHECK(r.self_validate());
}
