#include "curvelim/jobs.hpp"

#include <functional>
#include <map>

#include "curvelim/classical.hpp"
#include "curvelim/json_io.hpp"
#include "curvelim/vessel.hpp"

namespace curvelim {

namespace {

using json_io::decode_detrep;
using json_io::decode_int;
using json_io::decode_matrix;
using json_io::decode_poly;
using json_io::decode_vessel;
using json_io::encode;
using json_io::Json;
using json_io::member;

struct Job {
  const Json& in;
  const JobOptions& opts;
  Rng rng;
  Json result = Json::object();
  Json checks = Json::object();
  bool exact = true;

  Job(const Json& input, const JobOptions& o) : in(input), opts(o), rng(o.seed) {}

  void check(const std::string& name, bool ok, Json detail = Json::object()) {
    detail["ok"] = ok;
    checks[name] = std::move(detail);
  }

  const Json& get(const std::string& key) const { return member(in, key, ""); }
  QPoly poly(const std::string& key, int nvars) const { return decode_poly(get(key), "/" + key, nvars); }
  int integer(const std::string& key) const { return decode_int(get(key), "/" + key); }
  int integer_or(const std::string& key, int fallback) const { return in.contains(key) ? integer(key) : fallback; }
};

double finite(double v) { return std::isfinite(v) ? v : -1.0; }

Json encode_subspace(const QSubspace& s) { return {{"dim", s.dim()}, {"basis", encode(s.basis)}}; }

Json encode_report(const VesselReport& r) {
  Json axioms = Json::object();
  for (const auto& a : r.axioms) axioms[a.name] = {{"residual", finite(a.value)}, {"holds", a.holds}};
  Json failing = Json::array();
  for (const auto& f : r.failing()) failing.push_back(f);
  return {{"axioms", axioms}, {"hermitian", r.hermitian}, {"exact", r.exact}, {"ok", r.ok()}, {"failing", failing}};
}

RationalPair decode_map(const Json& j, const std::string& at) {
  RationalPair rp{decode_poly(member(j, "p0", at), at + "/p0", 2), decode_poly(member(j, "p1", at), at + "/p1", 2),
                  decode_poly(member(j, "p2", at), at + "/p2", 2), 0};
  rp.n = j.contains("n") ? decode_int(j["n"], at + "/n")
                         : std::max({rp.p0.total_degree(), rp.p1.total_degree(), rp.p2.total_degree(), 1});
  rp.validate();
  return rp;
}

SigmaOrder decode_order(const Job& job) {
  if (!job.in.contains("sigma_order")) return SigmaOrder::Validated;
  const Json& j = job.in["sigma_order"];
  if (j == "validated") return SigmaOrder::Validated;
  if (j == "printed") return SigmaOrder::Printed;
  throw InputError("at /sigma_order: expected \"validated\" or \"printed\"");
}

// --- classical ---------------------------------------------------------------

int default_n(const QPoly& p, const QPoly& q) { return std::max({p.total_degree(), q.total_degree(), 1}); }

void job_bezout(Job& job) {
  const QPoly p = job.poly("p", 1), q = job.poly("q", 1);
  const int n = job.integer_or("n", default_n(p, q));
  const BezoutMatrix b = bezout_matrix(p, q, n);
  const auto rk = rank_kernel(b.entries);
  job.result = {{"n", n},
                {"matrix", encode(b.entries)},
                {"rank", rk.rank},
                {"kernel_dim", rk.kernel.dim()},
                {"kernel", encode(rk.kernel.basis)},
                {"determinant", encode(determinant(b.entries))}};
  job.check("symmetric", b.entries == b.entries.transpose());
  job.check("defining_identity", verify_bezout_matrix(b));
}

void job_resultant(Job& job) {
  const QPoly p = job.poly("p", 1), q = job.poly("q", 1);
  const int n = job.integer_or("n", default_n(p, q));
  const QMatrix s = sylvester_matrix(p, q, n);
  const Gauss det_s = determinant(s);
  const Gauss det_b = determinant(bezout_matrix(p, q, n).entries);
  job.result = {{"n", n}, {"sylvester", encode(s)}, {"resultant", encode(det_s)}, {"bezoutian", encode(det_b)}};
  job.check("abs_det_sylvester_equals_abs_det_bezout", det_s.norm2() == det_b.norm2());
}

void job_image_line(Job& job) {
  const QPoly p0 = job.poly("p0", 1), p1 = job.poly("p1", 1), p2 = job.poly("p2", 1);
  const int n = job.integer_or("n", std::max({p0.total_degree(), p1.total_degree(), p2.total_degree(), 1}));
  const LineImage img = line_image_detrep(p0, p1, p2, n);
  job.result = {{"n", n},
                {"B10", encode(img.b10.entries)},
                {"B20", encode(img.b20.entries)},
                {"B12", encode(img.b12.entries)},
                {"poly", encode(img.poly)},
                {"poly_text", to_string(img.poly)},
                {"degenerate", img.degenerate}};
  if (img.degenerate) return;
  std::size_t tested = 0, failures = 0;
  for (int guard = 0; tested < job.opts.samples && guard < 1000; ++guard) {
    const Gauss t(random_rational(job.rng, -20, 20, 7));
    const Gauss d = p0.evaluate({t});
    if (d.is_zero()) continue;
    const Gauss y1 = p1.evaluate({t}) / d, y2 = p2.evaluate({t}) / d;
    if (!img.poly.evaluate({y1, y2}).is_zero()) ++failures;
    ++tested;
  }
  job.check("vanishes_on_image", failures == 0 && tested > 0, {{"samples", tested}, {"failures", failures}});
}

// --- curve -------------------------------------------------------------------

void job_curve_vn(Job& job) {
  const DetRep rep = decode_detrep(job.get("detrep"), "/detrep");
  const int n = job.integer("n");
  if (n < 1) throw InputError("at /n: n must be at least 1");
  const PrincipalSubspace vn = principal_subspace(rep, n);
  job.result = {{"n", n},
                {"m", rep.size()},
                {"delta", encode(rep.delta())},
                {"delta_text", to_string(rep.delta())},
                {"blown_dim", vn.blocks() * vn.m},
                {"dim", vn.space.dim()},
                {"expected_dim", vn.expected_dim()},
                {"basis", encode(vn.space.basis)}};
  job.check("dimension_nm", vn.space.dim() == vn.expected_dim(),
            {{"dim", vn.space.dim()}, {"expected", vn.expected_dim()}});
  if (job.in.contains("points")) {
    const Json& pts = job.get("points");
    if (!pts.is_array()) throw InputError("at /points: expected an array of points");
    std::size_t members = 0, total = 0;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const CurvePoint cp = exact_curve_point(rep, json_io::decode_point(pts[k], "/points/" + std::to_string(k)));
      const QMatrix v = point_vandermonde(cp, n - 1);
      for (std::size_t j = 0; j < v.cols(); ++j, ++total) {
        QMatrix col(v.rows(), 1);
        for (std::size_t i = 0; i < v.rows(); ++i) col(i, 0) = v(i, j);
        if (n == 1 || (vn.constraints * col).is_zero()) ++members;
      }
    }
    job.check("vandermonde_membership", members == total, {{"vectors", total}, {"members", members}});
  }
}

struct CurvePair {
  DetRep rep;
  QPoly p, q;
  int n;
};

CurvePair curve_pair(const Job& job) {
  CurvePair c{decode_detrep(job.get("detrep"), "/detrep"), job.poly("p", 3), job.poly("q", 3), 0};
  c.n = job.integer_or("n", std::max({c.p.total_degree(), c.q.total_degree(), 1}));
  return c;
}

void job_curve_bezout(Job& job) {
  const CurvePair c = curve_pair(job);
  const GeneralizedBezout gb = curve_bezout(c.p, c.q, c.rep, c.n);
  const auto rk = rank_kernel(gb.restricted);
  job.result = {{"n", c.n},
                {"beta", {{"b10", encode(gb.beta.b10)}, {"b20", encode(gb.beta.b20)}, {"b12", encode(gb.beta.b12)}}},
                {"blown", encode(gb.blown)},
                {"restricted", encode(gb.restricted)},
                {"kernel_dim", rk.kernel.dim()},
                {"kernel", encode(rk.kernel.basis)},
                {"hermitian", gb.restricted.is_hermitian()}};
  job.check("beta_identity", verify_bezout_identity(c.p, c.q, gb.beta));
  job.check("antisymmetric", (gb.blown + curve_bezout(c.q, c.p, c.rep, c.n).blown).is_zero());
  if (job.opts.samples > 0) {
    const BilinearReport br = bilinear_vanishing_check(c.p, c.q, c.rep, c.n, job.opts.samples, job.rng,
                                                       BetaPairing::Validated, job.opts.tol);
    job.check("bilinear_vanishing", br.ok(job.opts.tol),
              {{"samples", br.samples.size()},
               {"skipped", br.skipped},
               {"vanishing_mismatches", br.vanishing_mismatches},
               {"max_identity_residual", finite(br.max_identity_residual)}});
  }
}

void job_curve_common_zeros(Job& job) {
  const CurvePair c = curve_pair(job);
  const GeneralizedBezout gb = curve_bezout(c.p, c.q, c.rep, c.n);
  const auto rk = rank_kernel(gb.restricted);
  job.result = {{"n", c.n}, {"count", rk.kernel.dim()}, {"kernel", encode(rk.kernel.basis)}};
  // Float cross-check: zeros of q among the intersections of the curve with p.
  Json cross = Json::object();
  try {
    std::size_t count = 0;
    Json points = Json::array();
    for (const auto& pt : curve_intersections(c.rep, c.p, job.rng)) {
      if (relative_residual(c.q, pt.x) < 1e-6) {
        count += static_cast<std::size_t>(pt.multiplicity);
        points.push_back(encode(pt));
      }
    }
    cross = {{"count", count}, {"points", points}};
  } catch (const InputError& e) {
    cross = {{"skipped", e.what()}};
  } catch (const ConvergenceError& e) {
    cross = {{"skipped", e.what()}};
  }
  job.result["intersection_cross_check"] = cross;
}

void job_curve_image(Job& job) {
  const DetRep rep = decode_detrep(job.get("detrep"), "/detrep");
  const QPoly p0 = job.poly("p0", 3), p1 = job.poly("p1", 3), p2 = job.poly("p2", 3);
  const int n = job.integer_or("n", std::max({p0.total_degree(), p1.total_degree(), p2.total_degree(), 1}));
  const ImageDetRep img = image_detrep(p0, p1, p2, rep, n, job.rng);
  job.exact = img.exact;
  Json bps = Json::array();
  for (const auto& bp : img.reduction.basepoints) bps.push_back(encode(bp));
  Json r{{"n", n},
         {"exact", img.exact},
         {"basepoints", bps},
         {"removed", img.reduction.removed},
         {"vn_dim", img.reduction.vn.space.dim()},
         {"degenerate", img.degenerate}};
  if (img.compressed) {
    const auto& m = *img.compressed;
    r["matrices"] = {{"B12", encode(m[0])}, {"B20", encode(m[1])}, {"minus_B10", encode(m[2])}};
    r["poly"] = encode(*img.poly);
    r["poly_text"] = to_string(*img.poly);
  } else {
    const auto& m = img.compressed_c;
    r["matrices"] = {{"B12", encode(m[0])}, {"B20", encode(m[1])}, {"minus_B10", encode(m[2])}};
    r["poly"] = encode(img.poly_c);
  }
  job.result = std::move(r);
  if (img.degenerate) return;
  const std::size_t expected = img.reduction.vn.expected_dim() - img.reduction.removed;
  const std::size_t degree = static_cast<std::size_t>(img.poly ? img.poly->total_degree() : img.poly_c.total_degree());
  job.check("degree", degree == expected, {{"degree", degree}, {"expected", expected}});
  const ImageVanishing iv = image_vanishing_check(img, p0, p1, p2, rep, job.opts.samples, job.rng, job.opts.tol);
  job.check("vanishes_on_image", iv.ok && !iv.samples.empty(),
            {{"samples", iv.samples.size()}, {"skipped", iv.skipped}, {"max_residual", finite(iv.max_residual)}});
}

// --- vessel ------------------------------------------------------------------

void check_vessel_report(Job& job, const std::string& name, const VesselReport& r) {
  Json d = encode_report(r);
  const bool ok = r.ok();
  d.erase("ok");
  job.check(name, ok, std::move(d));
}

void job_vessel_check(Job& job) {
  const QVessel v = decode_vessel(job.get("vessel"), "/vessel");
  const VesselReport r = vessel_check(v);
  job.result = encode_report(r);
  job.result["dim_H"] = v.state_dim();
  job.result["dim_E"] = v.ext_dim();
  for (const auto& a : r.axioms) job.check(a.name, a.holds, {{"residual", finite(a.value)}});
  job.check("hermitian", r.hermitian);
}

void job_vessel_discriminant(Job& job) {
  const QVessel v = decode_vessel(job.get("vessel"), "/vessel");
  const Discriminant d = discriminant(v);
  const CayleyHamilton ch = cayley_hamilton_check(v);
  job.result = {{"in", encode(d.in)},
                {"out", encode(d.out)},
                {"in_text", to_string(d.in)},
                {"equal", d.equal},
                {"cayley_hamilton", {{"principal_dim", ch.principal.dim()}, {"zero", ch.zero}}}};
  job.check("in_out_equal", d.equal);
  job.check("cayley_hamilton", ch.zero, {{"residual", finite(ch.residual)}});
  if (job.in.contains("points")) {
    const Json& pts = job.get("points");
    if (!pts.is_array()) throw InputError("at /points: expected an array of [y1, y2] pairs");
    Json fib = Json::array();
    for (std::size_t k = 0; k < pts.size(); ++k) {
      const std::string at = "/points/" + std::to_string(k);
      if (!pts[k].is_array() || pts[k].size() != 2) throw InputError("at " + at + ": expected [y1, y2]");
      const Gauss y1 = json_io::decode_gauss(pts[k][0], at + "/0"), y2 = json_io::decode_gauss(pts[k][1], at + "/1");
      const Fibers f = fibers(v, y1, y2);
      fib.push_back({{"point", Json::array({encode(y1), encode(y2)})},
                     {"on_curve", f.on_curve},
                     {"in", encode_subspace(f.in)},
                     {"out", encode_subspace(f.out)}});
    }
    job.result["fibers"] = fib;
  }
}

Json encode_transformed(const TransformedVessel& t) {
  return {{"n", t.n},
          {"vessel", encode(t.vessel)},
          {"dim_E", t.vessel.ext_dim()},
          {"vn_dim", t.vn.space.dim()},
          {"vn_expected_dim", t.vn.expected_dim()},
          {"vn_basis", encode(t.vn.space.basis)},
          {"report", encode_report(t.report)}};
}

void job_vessel_transform(Job& job) {
  const QVessel v = decode_vessel(job.get("vessel"), "/vessel");
  const RationalPair rp = decode_map(job.get("map"), "/map");
  const TransformedVessel t = transform_vessel(v, rp, decode_order(job), false);
  job.result = encode_transformed(t);
  check_vessel_report(job, "transformed_axioms", t.report);
}

Json encode_reduced(const ReducedVessel& red) {
  Json bps = Json::array();
  for (const auto& bp : red.reduction.basepoints) bps.push_back(encode(bp));
  Json j{{"exact", red.exact},
         {"basepoints", bps},
         {"removed", red.reduction.removed},
         {"dim_E", red.vessel_c.ext_dim()},
         {"empty", red.empty()},
         {"report", encode_report(red.report)}};
  if (red.vessel)
    j["vessel"] = encode(*red.vessel);
  else
    j["vessel"] = encode(red.vessel_c);
  return j;
}

void job_vessel_reduce(Job& job) {
  const QVessel v = decode_vessel(job.get("vessel"), "/vessel");
  const RationalPair rp = decode_map(job.get("map"), "/map");
  const TransformedVessel t = transform_vessel(v, rp, decode_order(job), false);
  check_vessel_report(job, "transformed_axioms", t.report);
  const ReducedVessel red = reduce_transformed(t, job.rng);
  job.exact = red.exact;
  job.result = {{"transformed", encode_transformed(t)}, {"reduced", encode_reduced(red)}};
  check_vessel_report(job, "reduced_axioms", red.report);
}

void job_vessel_verify(Job& job) {
  const QVessel v = decode_vessel(job.get("vessel"), "/vessel");
  check_vessel_report(job, "axioms", vessel_check(v));
  const Discriminant d = discriminant(v);
  job.check("in_out_discriminant_equal", d.equal);
  const CayleyHamilton ch = cayley_hamilton_check(v);
  job.check("cayley_hamilton", ch.zero, {{"principal_dim", ch.principal.dim()}});
  job.result = {{"discriminant", encode(d.in)}, {"discriminant_text", to_string(d.in)}};
  if (!job.in.contains("map")) return;

  const RationalPair rp = decode_map(job.get("map"), "/map");
  const TransformedVessel t = transform_vessel(v, rp, decode_order(job), false);
  check_vessel_report(job, "transformed_axioms", t.report);
  job.check("vn_dimension_nm", t.vn.space.dim() == t.vn.expected_dim(),
            {{"dim", t.vn.space.dim()}, {"expected", t.vn.expected_dim()}});
  if (!t.report.ok()) return;
  const ReducedVessel red = reduce_transformed(t, job.rng);
  job.exact = red.exact;
  check_vessel_report(job, "reduced_axioms", red.report);
  job.result["reduced"] = encode_reduced(red);
  if (red.vessel) job.check("reduced_in_out_discriminant_equal", discriminant(*red.vessel).equal);

  const ImageCheck ic = discriminant_image_check(red, t, job.opts.samples, job.rng, job.opts.tol);
  job.check("image_containment", ic.containment,
            {{"samples", ic.samples.size()}, {"max_residual", finite(ic.max_residual)}});
  job.check("image_degree", ic.degree_ok && ic.not_identically_zero,
            {{"degree", ic.degree}, {"expected", ic.expected_degree}});

  std::size_t points = 0, in_fail = 0, out_fail = 0, outside = 0, collisions = 0, basepoints = 0;
  double in_res = 0.0, out_res = 0.0;
  if (ic.not_identically_zero) {
    for (int guard = 0; points < job.opts.samples && guard < 500; ++guard) {
      const Gauss x1(random_rational(job.rng, -6, 6)), x2(random_rational(job.rng, -6, 6));
      if (x1.is_zero() && x2.is_zero()) continue;
      std::vector<CurvePoint> pts;
      try {
        pts = pencil_points(t.rep, x1, x2);
      } catch (const InputError&) {
        continue;
      }
      for (const auto& pt : pts) {
        if (points >= job.opts.samples) break;
        const FiberCheck fc = fiber_isomorphism_check(t, red, pt, job.opts.tol);
        if (fc.vacuous) {
          basepoints += fc.basepoint ? 1 : 0;
          continue;
        }
        ++points;
        in_fail += fc.in_ok ? 0 : 1;
        out_fail += fc.out_ok ? 0 : 1;
        outside += fc.out_outside;
        collisions += fc.collision ? 1 : 0;
        in_res = std::max(in_res, fc.in_residual);
        out_res = std::max(out_res, fc.out_residual);
      }
    }
  }
  job.check("fiber_in", in_fail == 0, {{"points", points}, {"failures", in_fail}, {"max_residual", finite(in_res)}});
  job.check("fiber_out", out_fail == 0,
            {{"points", points},
             {"failures", out_fail},
             {"outside_domain", outside},
             {"map_defined", red.out_map_defined},
             {"max_residual", finite(out_res)}});
  job.result["fiber_collisions"] = collisions;
  job.result["fiber_basepoints_skipped"] = basepoints;
}

// --- fixtures ----------------------------------------------------------------

void job_fixtures(Job& job) {
  const Json& kind = job.get("kind");
  if (kind == "vessel") {
    const int h = job.integer("dim_h"), dq = job.integer_or("deg_q", 2);
    if (h < 1 || h > 8 || dq < 1 || dq > 4) throw InputError("at /: need 1 <= dim_h <= 8 and 1 <= deg_q <= 4");
    FixtureSpec spec;
    const QVessel v = random_vessel_fixture(static_cast<std::size_t>(h), static_cast<std::size_t>(dq), job.rng, &spec);
    Json alpha = Json::array(), phi = Json::array(), q = Json::array();
    for (const auto& a : spec.alpha) alpha.push_back(encode(a));
    for (const auto& f : spec.phi) phi.push_back(encode(f));
    for (const auto& c : spec.q) q.push_back(encode(c));
    job.result = {{"vessel", encode(v)}, {"spec", {{"alpha", alpha}, {"phi", phi}, {"q", q}}}};
    check_vessel_report(job, "axioms", vessel_check(v));
  } else if (kind == "conic") {
    job.result = {{"detrep", encode(conic_detrep())}};
  } else if (kind == "detrep") {
    const int m = job.integer("m");
    if (m < 1 || m > 6) throw InputError("at /m: need 1 <= m <= 6");
    std::vector<PrescribedPoint> pts;
    if (job.in.contains("points")) {
      const Json& j = job.get("points");
      if (!j.is_array()) throw InputError("at /points: expected an array");
      for (std::size_t k = 0; k < j.size(); ++k) {
        const std::string at = "/points/" + std::to_string(k);
        PrescribedPoint p{json_io::decode_point(member(j[k], "x", at), at + "/x"), {}};
        const Json& e = member(j[k], "e", at);
        if (!e.is_array() || e.size() != static_cast<std::size_t>(m))
          throw InputError("at " + at + "/e: expected " + std::to_string(m) + " entries");
        for (std::size_t i = 0; i < e.size(); ++i) p.e.push_back(json_io::decode_gauss(e[i], at + "/e/" + std::to_string(i)));
        pts.push_back(std::move(p));
      }
    }
    const bool real = !job.in.contains("real_symmetric") || job.in["real_symmetric"] == true;
    const DetRep rep = detrep_through_points(pts, static_cast<std::size_t>(m), job.rng, real);
    job.result = {{"detrep", encode(rep)}, {"delta", encode(rep.delta())}, {"delta_text", to_string(rep.delta())}};
  } else if (kind == "poly-pair") {
    const int deg = job.integer("degree"), g = job.integer_or("gcd_degree", 0);
    if (deg < 1 || deg > 12) throw InputError("at /degree: need 1 <= degree <= 12");
    const PlantedPair pp = planted_gcd_pair(job.rng, deg, g);
    job.result = {{"p", encode(pp.p)}, {"q", encode(pp.q)}, {"g", encode(pp.g)}, {"n", deg}};
  } else {
    throw InputError("at /kind: expected one of \"vessel\", \"conic\", \"detrep\", \"poly-pair\"");
  }
}

using Handler = std::function<void(Job&)>;

const std::map<std::string, Handler>& handlers() {
  static const std::map<std::string, Handler> table{
      {"bezout", job_bezout},
      {"resultant", job_resultant},
      {"image-line", job_image_line},
      {"curve vn", job_curve_vn},
      {"curve bezout", job_curve_bezout},
      {"curve common-zeros", job_curve_common_zeros},
      {"curve image", job_curve_image},
      {"vessel check", job_vessel_check},
      {"vessel discriminant", job_vessel_discriminant},
      {"vessel transform", job_vessel_transform},
      {"vessel reduce", job_vessel_reduce},
      {"vessel verify-theorems", job_vessel_verify},
      {"fixtures gen", job_fixtures},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& job_commands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [k, h] : handlers()) v.push_back(k);
    return v;
  }();
  return names;
}

JobResult run_job(const std::string& command, const std::string& input, const JobOptions& opts) {
  Json report{{"command", command},
              {"options", {{"tol", opts.tol}, {"seed", opts.seed}, {"samples", opts.samples}}}};
  auto error = [&](int code, const char* kind, const std::string& msg) {
    report["status"] = kind;
    report["error"] = {{"kind", kind}, {"message", msg}};
    return JobResult{code, json_io::dump(report)};
  };
  const auto it = handlers().find(command);
  if (it == handlers().end()) return error(kExitInput, "input-error", "unknown command \"" + command + "\"");
  try {
    const Json in = json_io::parse(input);
    report["input"] = in;
    if (!in.is_object()) throw InputError("at /: expected a JSON object");
    Job job(in, opts);
    it->second(job);
    bool ok = true;
    Json failing = Json::array();
    for (const auto& [name, c] : job.checks.items())
      if (!c["ok"].get<bool>()) {
        ok = false;
        failing.push_back(name);
      }
    report["result"] = std::move(job.result);
    report["checks"] = std::move(job.checks);
    report["exact"] = job.exact;
    report["failing"] = failing;
    report["status"] = ok ? "ok" : "theorem-check-failed";
    return {ok ? kExitOk : kExitTheorem, json_io::dump(report)};
  } catch (const InputError& e) {
    return error(kExitInput, "input-error", e.what());
  } catch (const TheoremCheckError& e) {
    return error(kExitTheorem, "theorem-check-failed", e.what());
  } catch (const ConvergenceError& e) {
    return error(kExitNumeric, "non-convergence", e.what());
  } catch (const std::exception& e) {
    return error(kExitInternal, "internal-error", e.what());
  }
}

}  // namespace curvelim
