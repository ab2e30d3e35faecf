#include "mq/io.hpp"

#include <doctest.h>

#include <regex>
#include <sstream>

using namespace mq;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::size_t fields(const std::string& line) {
  // Labels are quoted and may contain commas.
  std::size_t n = 1;
  bool quoted = false;
  for (char c : line) {
    if (c == '"') quoted = !quoted;
    else if (c == ',' && !quoted) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("rational json") {
  CHECK(to_json(Rational(3)) == Json(3));
  CHECK(to_json(Rational(-805, 2)) == Json("-805/2"));
  CHECK(to_json(Rational(0)) == Json(0));
  VectorX<Rational> v(2);
  v << Rational(1), Rational(1, 3);
  CHECK(to_json(v).dump() == R"([1,"1/3"])");
}

TEST_CASE("catalog json") {
  const Json j = catalog_json();
  CHECK(j["divisors"].size() == 105);
  CHECK(j["curves"].size() == 375);
  CHECK(j["curves"][0].contains("kind"));
  CHECK(j["curves"][0].contains("label"));
  for (const auto& c : j["curves"]) CHECK(CurveSymbol::parse(c["label"].get<std::string>()).label() == c["label"]);
  CHECK(catalog_fingerprint() == catalog_fingerprint());
  CHECK(std::regex_match(catalog_fingerprint(), std::regex("[0-9a-f]{16}")));
  const Json e = envelope(Json::object({{"x", 1}}));
  CHECK(e["tool_version"] == std::string(kToolVersion));
  CHECK(e["catalog_fingerprint"] == catalog_fingerprint());
  CHECK(e["x"] == 1);
}

TEST_CASE("pairing matrix csv") {
  const auto rows = lines(pairing_matrix_csv());
  REQUIRE(rows.size() == 376);
  CHECK(rows[0].rfind("curve,", 0) == 0);
  for (const auto& r : rows) CHECK(fields(r) == 106);
  CHECK(rows[1].front() == '"');
}

TEST_CASE("dual graph dot") {
  const std::string dot = dual_graph_dot(SingularPoint::parse("xyz"));
  CHECK(dot.rfind("graph patch_xyz {", 0) == 0);
  std::size_t nodes = 0, interior = 0, boundary = 0;
  for (const auto& l : lines(dot)) {
    if (l.find("--") != std::string::npos) {
      interior += l.find("boundary=false") != std::string::npos;
      boundary += l.find("boundary=true") != std::string::npos;
    } else if (l.find(';') != std::string::npos) {
      ++nodes;
    }
  }
  CHECK(nodes == 21);
  CHECK(interior == 30);
  CHECK(boundary == 15);
}

TEST_CASE("divisor expressions") {
  CHECK(parse_divisor_spec("DD") == divisor_DD());
  CHECK(parse_divisor_spec("Dx") == divisor_Dt(Variable::x));
  CHECK(parse_divisor_spec("x4y") == divisor_unit(Monomial::parse("x4y")));
  CHECK(parse_divisor_spec("D_x4y") == divisor_unit(Monomial::parse("x4y")));
  CHECK(parse_divisor_spec("local:x@xyz") == local_combo(SingularPoint::parse("xyz"), Variable::x));
  CHECK(parse_divisor_spec("local:x@x,y,z") == local_combo(SingularPoint::parse("xyz"), Variable::x));
  CHECK_THROWS_AS(parse_divisor_spec("Dq"), LabelError);
  CHECK_THROWS_AS(parse_divisor_spec("local:x"), LabelError);
  CHECK_THROWS_AS(parse_divisor_spec("x3y"), LabelError);
}

TEST_CASE("report json") {
  const Json gv = gv_json(mq::gv({2, 2}), true);
  CHECK(gv["value"] == -500);
  CHECK(gv["toric_only"] == true);
  CHECK(gv.contains("families"));
  CHECK(gw_json({0, 2}, gw({0, 2}))["value"] == "-805/2");
  const Json q = quotient_json();
  CHECK(q["dimension"] == 5);
  const Json c = cone_json(false);
  CHECK(c.contains("dual_edges"));
  const Json v = verification_json(run_suite(Suite::Ranks));
  CHECK(v["checks"].size() > 0);
}
