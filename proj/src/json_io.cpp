#include "curvelim/json_io.hpp"

#include <cmath>

namespace curvelim::json_io {

namespace {

[[noreturn]] void fail(const std::string& at, const std::string& what) {
  throw InputError("at " + (at.empty() ? std::string("/") : at) + ": " + what);
}

std::string child(const std::string& at, const std::string& key) { return at + "/" + key; }
std::string child(const std::string& at, std::size_t k) { return at + "/" + std::to_string(k); }

template <class T>
Json encode_matrix(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

template <class T>
Json encode_poly(const MultiPoly<T>& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (int k = 0; k < p.nvars(); ++k) exp.push_back(e[static_cast<std::size_t>(k)]);
    terms.push_back({{"exp", exp}, {"coeff", encode(c)}});
  }
  return terms;
}

template <class T>
Json encode_vessel(const BasicVessel<T>& v) {
  return {{"A1", encode(v.a1)},         {"A2", encode(v.a2)},         {"Phi", encode(v.phi)},
          {"sigma1", encode(v.sigma1)}, {"sigma2", encode(v.sigma2)}, {"gamma_in", encode(v.gamma_in)},
          {"gamma_out", encode(v.gamma_out)}};
}

}  // namespace

Json encode(const Rational& q) { return to_string(q); }

Json encode(const Gauss& z) { return {{"re", to_string(z.re())}, {"im", to_string(z.im())}}; }

Json encode(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Json encode(const QMatrix& m) { return encode_matrix(m); }
Json encode(const CMatrix& m) { return encode_matrix(m); }
Json encode(const QPoly& p) { return encode_poly(p); }
Json encode(const CPoly& p) { return encode_poly(p); }
Json encode(const QVessel& v) { return encode_vessel(v); }
Json encode(const CVessel& v) { return encode_vessel(v); }

Json encode(const DetRep& d) { return {{"D0", encode(d.d(0))}, {"D1", encode(d.d(1))}, {"D2", encode(d.d(2))}}; }

Json encode_point(const QPoint& x) { return Json::array({encode(x[0]), encode(x[1]), encode(x[2])}); }
Json encode_point(const CPoint& x) { return Json::array({encode(x[0]), encode(x[1]), encode(x[2])}); }

Json encode(const CurvePoint& p) {
  Json j{{"x", encode_point(p.x)}, {"multiplicity", p.multiplicity}, {"exact", p.is_exact()}};
  if (p.is_exact()) {
    j["x_exact"] = encode_point(*p.exact);
    j["kernel"] = encode(p.exact_kernel);
  } else {
    j["kernel"] = encode(p.kernel);
  }
  return j;
}

Rational decode_rational(const Json& j, const std::string& at) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const InputError& e) {
      fail(at, e.what());
    }
  }
  fail(at, "expected a rational as \"a/b\" or an integer");
}

Gauss decode_gauss(const Json& j, const std::string& at) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      if (k != "re" && k != "im") fail(child(at, k), "unexpected key in Gaussian rational");
    Rational re(0), im(0);
    if (j.contains("re")) re = decode_rational(j["re"], child(at, "re"));
    if (j.contains("im")) im = decode_rational(j["im"], child(at, "im"));
    return {re, im};
  }
  return Gauss(decode_rational(j, at));
}

QMatrix decode_matrix(const Json& j, const std::string& at) {
  if (!j.is_array()) fail(at, "expected a matrix as an array of rows");
  const std::size_t rows = j.size();
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array()) fail(child(at, i), "expected a row array");
    if (i == 0) cols = j[i].size();
    if (j[i].size() != cols) fail(child(at, i), "ragged row: expected " + std::to_string(cols) + " entries");
  }
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = decode_gauss(j[i][k], child(child(at, i), k));
  return m;
}

QPoly decode_poly(const Json& j, const std::string& at, int nvars) {
  if (!j.is_array()) fail(at, "expected a polynomial as an array of {exp, coeff} terms");
  int nv = nvars;
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tat = child(at, t);
    if (!j[t].is_object()) fail(tat, "expected a term object");
    const Json& exp = member(j[t], "exp", tat);
    if (!exp.is_array() || exp.empty() || exp.size() > 3) fail(child(tat, "exp"), "exponent must list 1 to 3 integers");
    if (nv <= 0) nv = static_cast<int>(exp.size());
    if (static_cast<int>(exp.size()) != nv)
      fail(child(tat, "exp"), "expected " + std::to_string(nv) + " exponents");
  }
  if (nv <= 0) nv = 1;
  QPoly p(nv);
  for (std::size_t t = 0; t < j.size(); ++t) {
    const std::string tat = child(at, t);
    const Json& exp = j[t]["exp"];
    Exponent e{0, 0, 0};
    for (std::size_t k = 0; k < exp.size(); ++k) {
      e[k] = decode_int(exp[k], child(child(tat, "exp"), k));
      if (e[k] < 0) fail(child(child(tat, "exp"), k), "negative exponent");
    }
    p.add_term(e, decode_gauss(member(j[t], "coeff", tat), child(tat, "coeff")));
  }
  return p;
}

QVessel decode_vessel(const Json& j, const std::string& at) {
  if (!j.is_object()) fail(at, "expected a vessel object");
  QVessel v;
  v.a1 = decode_matrix(member(j, "A1", at), child(at, "A1"));
  v.a2 = decode_matrix(member(j, "A2", at), child(at, "A2"));
  v.phi = decode_matrix(member(j, "Phi", at), child(at, "Phi"));
  v.sigma1 = decode_matrix(member(j, "sigma1", at), child(at, "sigma1"));
  v.sigma2 = decode_matrix(member(j, "sigma2", at), child(at, "sigma2"));
  v.gamma_in = decode_matrix(member(j, "gamma_in", at), child(at, "gamma_in"));
  if (j.contains("gamma_out")) {
    v.gamma_out = decode_matrix(j["gamma_out"], child(at, "gamma_out"));
  } else {
    v.gamma_out = linkage_gamma_out(v.phi, v.sigma1, v.sigma2, v.gamma_in);
  }
  // An empty E has no rows to carry the state dimension.
  if (v.phi.rows() == 0) v.phi = QMatrix(0, v.a1.rows());
  try {
    validate_shapes(v);
  } catch (const InputError& e) {
    fail(at, e.what());
  }
  return v;
}

DetRep decode_detrep(const Json& j, const std::string& at) {
  if (!j.is_object()) fail(at, "expected {D0, D1, D2}");
  QMatrix d0 = decode_matrix(member(j, "D0", at), child(at, "D0"));
  QMatrix d1 = decode_matrix(member(j, "D1", at), child(at, "D1"));
  QMatrix d2 = decode_matrix(member(j, "D2", at), child(at, "D2"));
  try {
    return DetRep(std::move(d0), std::move(d1), std::move(d2));
  } catch (const InputError& e) {
    fail(at, e.what());
  }
}

QPoint decode_point(const Json& j, const std::string& at) {
  if (!j.is_array() || j.size() != 3) fail(at, "expected a projective point [x0, x1, x2]");
  return {decode_gauss(j[0], child(at, 0)), decode_gauss(j[1], child(at, 1)), decode_gauss(j[2], child(at, 2))};
}

const Json& member(const Json& j, const std::string& key, const std::string& at) {
  if (!j.is_object()) fail(at, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(at, "missing key \"" + key + "\"");
  return *it;
}

int decode_int(const Json& j, const std::string& at) {
  if (!j.is_number_integer()) fail(at, "expected an integer");
  const long v = j.get<long>();
  if (v < -1000000 || v > 1000000) fail(at, "integer out of range");
  return static_cast<int>(v);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace curvelim::json_io
