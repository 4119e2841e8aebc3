#include <gtest/gtest.h>

#include "curvelim/jobs.hpp"
#include "curvelim/json_io.hpp"
#include "support.hpp"

using namespace curvelim;
using namespace testsupport;
using json_io::Json;

namespace {

Json run(const std::string& command, const Json& input, int expect_code, JobOptions opts = {}) {
  const JobResult r = run_job(command, input.dump(), opts);
  EXPECT_EQ(r.exit_code, expect_code) << r.report;
  return Json::parse(r.report);
}

Json upoly_json(std::initializer_list<long> c) { return json_io::encode(upoly(c)); }

}  // namespace

TEST(JsonIo, scalarEncodings) {
  EXPECT_EQ(json_io::encode(Rational(3, 4) * Rational(-2)), Json("-3/2"));
  EXPECT_EQ(json_io::encode(Rational(5)), Json("5"));
  EXPECT_EQ(json_io::encode(Gauss(Rational(1, 2), Rational(-3))), (Json{{"re", "1/2"}, {"im", "-3"}}));
  EXPECT_EQ(json_io::encode(Complex(0.5, -1.0)), (Json{0.5, -1.0}));
  EXPECT_EQ(json_io::decode_rational(Json(7), "/x"), Rational(7));
  EXPECT_EQ(json_io::decode_gauss(Json{{"im", "2"}}, "/x"), Gauss(Rational(0), Rational(2)));
}

TEST(JsonIo, roundTrip) {
  Rng rng(1);
  for (int k = 0; k < 10; ++k) {
    const QMatrix m = random_matrix(rng, 1 + k % 3, 1 + k % 4, 5, true);
    EXPECT_EQ(json_io::decode_matrix(json_io::encode(m), ""), m);
    const QPoly p = random_form(rng, 1 + k % 3);
    EXPECT_EQ(json_io::decode_poly(json_io::encode(p), "", 3), p);
    const QVessel v = random_vessel_fixture(1 + k % 4, 1 + k % 2, rng);
    const QVessel w = json_io::decode_vessel(json_io::encode(v), "");
    EXPECT_EQ(w.a1, v.a1);
    EXPECT_EQ(w.phi, v.phi);
    EXPECT_EQ(w.gamma_out, v.gamma_out);
    // Text round trip: re-parse the canonical dump.
    const Json j = json_io::encode(v);
    EXPECT_EQ(json_io::parse(json_io::dump(j)), j);
  }
  const DetRep c = conic_detrep();
  EXPECT_EQ(json_io::decode_detrep(json_io::encode(c), "").delta(), c.delta());
}

TEST(JsonIo, locatedErrors) {
  try {
    json_io::parse("{\"p\": [1, 2,, 3]}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("byte"), std::string::npos);
  }
  try {
    json_io::decode_matrix(Json::parse("[[1, 2], [3]]"), "/A1");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("/A1"), std::string::npos);
  }
  EXPECT_THROW(json_io::decode_rational(Json("1/0"), ""), InputError);
  EXPECT_THROW(json_io::member(Json::object(), "vessel", ""), InputError);
}

TEST(Jobs, commandsListed) {
  const auto& c = job_commands();
  EXPECT_EQ(c.size(), 13u);
  for (const char* name : {"bezout", "resultant", "image-line", "curve vn", "curve bezout", "curve common-zeros",
                           "curve image", "vessel check", "vessel discriminant", "vessel transform",
                           "vessel reduce", "vessel verify-theorems", "fixtures gen"})
    EXPECT_NE(std::find(c.begin(), c.end(), name), c.end()) << name;
}

TEST(Jobs, bezoutExample) {
  const Json r = run("bezout", {{"p", upoly_json({-1, 0, 1})}, {"q", upoly_json({0, -1, 1})}, {"n", 2}}, kExitOk);
  EXPECT_EQ(r["result"]["matrix"], json_io::encode(qm({{-1, 1}, {1, -1}})));
  EXPECT_EQ(r["result"]["kernel_dim"], 1);
  EXPECT_EQ(r["status"], "ok");
  EXPECT_TRUE(r["exact"].get<bool>());
}

TEST(Jobs, resultantAndImageLine) {
  Json r = run("resultant", {{"p", upoly_json({-1, 0, 1})}, {"q", upoly_json({-4, 0, 1})}}, kExitOk);
  EXPECT_EQ(r["result"]["resultant"], json_io::encode(Gauss(9)));
  r = run("image-line", {{"p0", upoly_json({1})}, {"p1", upoly_json({0, 1})}, {"p2", upoly_json({0, 0, 1})}}, kExitOk);
  const QPoly img = json_io::decode_poly(r["result"]["poly"], "", 2);
  EXPECT_TRUE(proportional(img, poly(2, {{{0, 1, 0}, 1}, {{2, 0, 0}, -1}})));
}

TEST(Jobs, curveImageIdentityReproducesInput) {
  const Json in = {{"detrep", json_io::encode(conic_detrep())},
                   {"p0", json_io::encode(x(0))},
                   {"p1", json_io::encode(x(1))},
                   {"p2", json_io::encode(x(2))},
                   {"n", 1}};
  const Json r = run("curve image", in, kExitOk);
  EXPECT_EQ(json_io::decode_poly(r["result"]["poly"], "", 3), conic_detrep().delta());
}

TEST(Jobs, curveCommonZeros) {
  const Json in = {{"detrep", json_io::encode(conic_detrep())},
                   {"p", json_io::encode(x(1))},
                   {"q", json_io::encode(x(0) - x(2))},
                   {"n", 1}};
  const Json r = run("curve common-zeros", in, kExitOk);
  EXPECT_EQ(r["result"]["count"], 1);
}

TEST(Jobs, perturbedVesselNamesFailingAxiom) {
  Rng rng(2);
  QVessel v = random_vessel_fixture(3, 2, rng);
  v.gamma_in(0, 0) += Gauss(1);
  const Json r = run("vessel check", {{"vessel", json_io::encode(v)}}, kExitTheorem);
  EXPECT_EQ(r["status"], "theorem-check-failed");
  const auto failing = r["failing"].dump();
  EXPECT_NE(failing.find("gamma_in"), std::string::npos);
}

TEST(Jobs, inputErrorsExitTwo) {
  JobResult r = run_job("bezout", "{\"p\": [", {});
  EXPECT_EQ(r.exit_code, kExitInput);
  const Json j = Json::parse(r.report);
  EXPECT_EQ(j["status"], "input-error");
  EXPECT_NE(j["error"]["message"].get<std::string>().find("byte"), std::string::npos);

  r = run_job("bezout", "{\"p\": []}", {});
  EXPECT_EQ(r.exit_code, kExitInput);
  r = run_job("no such command", "{}", {});
  EXPECT_EQ(r.exit_code, kExitInput);
}

TEST(Jobs, verifyTheoremsDeterministic) {
  Rng rng(3);
  const QVessel v = random_vessel_fixture(3, 2, rng);
  const Json map = {{"p0", json_io::encode(poly(2, {{{0, 0, 0}, 3}, {{1, 0, 0}, 1}}))},
                    {"p1", json_io::encode(poly(2, {{{2, 0, 0}, 1}, {{0, 1, 0}, 1}}))},
                    {"p2", json_io::encode(poly(2, {{{1, 1, 0}, 1}, {{0, 0, 0}, 2}}))},
                    {"n", 2}};
  const Json in = {{"vessel", json_io::encode(v)}, {"map", map}};
  JobOptions opts;
  opts.samples = 8;
  const JobResult a = run_job("vessel verify-theorems", in.dump(), opts);
  const JobResult b = run_job("vessel verify-theorems", in.dump(), opts);
  EXPECT_EQ(a.exit_code, kExitOk) << a.report;
  EXPECT_EQ(a.report, b.report);
  const Json j = Json::parse(a.report);
  for (const auto& [name, c] : j["checks"].items()) EXPECT_TRUE(c["ok"].get<bool>()) << name;
  EXPECT_EQ(json_io::parse(a.report).dump(2) + "\n", a.report);
}

TEST(Jobs, fixturesSeeded) {
  JobOptions o1, o2;
  o2.seed = 99;
  const std::string in = Json{{"kind", "vessel"}, {"dim_h", 4}}.dump();
  EXPECT_EQ(run_job("fixtures gen", in, o1).report, run_job("fixtures gen", in, o1).report);
  EXPECT_NE(run_job("fixtures gen", in, o1).report, run_job("fixtures gen", in, o2).report);
  const Json j = Json::parse(run_job("fixtures gen", in, o1).report);
  const QVessel v = json_io::decode_vessel(j["result"]["vessel"], "");
  EXPECT_TRUE(vessel_check(v).ok());
}
