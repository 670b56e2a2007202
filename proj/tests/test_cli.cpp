#include <doctest.h>

#include <sstream>

#include "kpalg/algebra.hpp"
#include "kpalg/cli.hpp"
#include "support.hpp"

using namespace kpalg;
using namespace testing;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::string field(const std::string& report, const std::string& key) {
  for (const auto& line : lines(report)) {
    if (line.rfind(key + ": ", 0) == 0) return line.substr(key.size() + 2);
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("paths command") {
  auto r = call({"paths", fixture_path("G_L2"), "--from", "star", "--degree", "2"});
  CHECK(r.code == 0);
  CHECK(lines(r.out) == std::vector<std::string>{"a.a", "a.b", "b.a", "b.b"});
  CHECK(call({"paths", fixture_path("G_N2"), "--from", "star", "--degree", "1"}).code == 2);
  CHECK(call({"paths", fixture_path("G_N2"), "--from", "star", "--degree", "1,x"}).code == 2);
  CHECK(call({"paths", fixture_path("G_N2"), "--from", "nowhere", "--degree", "1,1"}).code == 1);
}

TEST_CASE("mul and normalize commands") {
  auto r = call({"mul", fixture_path("G_N1"), "--ring", "Q", "st(f)", "s(f)"});
  CHECK(r.code == 0);
  CHECK(r.out == "1*p(star)\n");
  r = call({"normalize", fixture_path("G_L2"), "--ring", "Q", "p(star) - s(a)*st(a)"});
  CHECK(r.out == "1*s(b)*st(b)\n");
  r = call({"normalize", fixture_path("G_L2"), "--ring", "Fp:2", "s(a) + s(a)"});
  CHECK(r.out == "0\n");
  CHECK(call({"mul", fixture_path("G_N1"), "--ring", "R", "s(f)", "s(f)"}).code == 2);
  CHECK(call({"mul", fixture_path("G_N1"), "--ring", "Fp:4", "s(f)", "s(f)"}).code == 2);
  CHECK(call({"mul", fixture_path("G_N1"), "s(f"}).code == 2);
  CHECK(call({"normalize", fixture_path("G_N1"), "--ring", "Z", "1/2*s(f)"}).code == 2);
}

TEST_CASE("emitted expressions parse back to equal elements") {
  auto g = fixture("G_C2");
  const RingSpec Q = RingSpec::rationals();
  for (const char* expr : {"s(e)*st(e) + 1/3*s(e.f)", "st(f)*s(f) - p(v)", "s(f)*s(e)*st(f.e)"}) {
    auto r = call({"normalize", fixture_path("G_C2"), expr});
    REQUIRE(r.code == 0);
    std::string text = r.out.substr(0, r.out.size() - 1);
    CHECK(equal(parse_element(g, Q, text), parse_element(g, Q, expr)));
  }
}

TEST_CASE("validate command") {
  auto r = call({"validate", fixture_path("G_N2")});
  CHECK(r.code == 0);
  CHECK(r.out == "valid: yes\n");
  r = call({"validate", fixture_path("hexagon_fail")});
  CHECK(r.code == 1);
  CHECK(r.out.find("hexagon") != std::string::npos);
  CHECK(call({"validate", fixture_path("G_A2")}).code == 1);
  CHECK(call({"validate", fixture_path("G_A2"), "--allow-sources"}).code == 0);
  CHECK(call({"validate", "/nonexistent/file.kg"}).code == 1);
}

TEST_CASE("props command") {
  auto r = call({"props", fixture_path("G_C2")});
  CHECK(r.code == 0);
  CHECK(field(r.out, "aperiodicity") == "periodic");
  CHECK(field(r.out, "aperiodicity_mode") == "exact");
  CHECK(field(r.out, "periodic_witness") == "vertex u, m = (2), n = (0)");
  CHECK(field(r.out, "cofinal") == "yes");
  r = call({"props", fixture_path("G_F2"), "--aperiodicity-bound", "2"});
  CHECK(field(r.out, "aperiodicity_mode") == "bounded");
  CHECK(field(r.out, "aperiodicity_bound") == "2");
  CHECK(call({"props", fixture_path("G_A2")}).code == 1);
  CHECK(field(call({"props", fixture_path("G_A2"), "--allow-sources"}).out, "has_closed_path") == "no");
}

TEST_CASE("center command") {
  auto r = call({"center", fixture_path("G_L2"), "--ring", "Q", "--ghost", "1", "--cap", "2", "--verify"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "verdict") == "VERIFIED");
  CHECK(r.out.find("  [1] 1*s(a)*st(a) + 1*s(b)*st(b)\n") != std::string::npos);

  r = call({"center", fixture_path("G_C2"), "--ghost", "0", "--cap", "2", "--check", "s(e.f) + s(f.e)",
            "--verify"});
  CHECK(r.code == 0);
  CHECK(field(r.out, "dimension") == "2");
  CHECK(r.out.find("  central: yes") != std::string::npos);
  CHECK(field(r.out, "verdict") == "HYPOTHESES_UNMET");

  r = call({"center", fixture_path("G_C2"), "--ghost", "0", "--cap", "2", "--check", "p(u)"});
  CHECK(r.out.find("  central: no") != std::string::npos);
  CHECK(r.out.find("reach_closed=no") != std::string::npos);

  r = call({"center", fixture_path("G_N2"), "--ghost", "1,1", "--cap", "1,1", "--verify"});
  CHECK(field(r.out, "verdict") == "VERIFIED-commutative");
  r = call({"center", fixture_path("G_L2"), "--ring", "Z", "--ghost", "0", "--cap", "1"});
  CHECK(field(r.out, "rank") == "1");

  CHECK(call({"center", fixture_path("G_L2"), "--ghost", "2", "--cap", "1"}).code == 1);
  CHECK(call({"center", fixture_path("G_L2"), "--ghost", "0,0", "--cap", "1"}).code == 2);
  CHECK(call({"center", fixture_path("G_L2"), "--ghost", "0"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"props", fixture_path("G_L2"), "--bogus"}).code == 2);
  auto r = call({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("factor  := 'p(' vertex ')' | 's(' path ')' | 'st(' path ')'") != std::string::npos);
  CHECK(r.out.find("square <g> <h> = <h'> <g'>") != std::string::npos);
  r = call({"center", "--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--ghost") != std::string::npos);
  CHECK(call({"props", fixture_path("../fixtures_missing/none")}).code == 1);
}

TEST_CASE("report has fixed sections and ignores thread count") {
  auto a = call({"report", fixture_path("G_C2"), "--threads", "1"});
  auto b = call({"report", fixture_path("G_C2"), "--threads", "4"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto sections = std::vector<std::size_t>{a.out.find("== graph =="), a.out.find("== properties =="),
                                           a.out.find("== center =="), a.out.find("== verification ==")};
  for (auto pos : sections) CHECK(pos != std::string::npos);
  CHECK(std::is_sorted(sections.begin(), sections.end()));
}
