#ifndef CURVELIM_JSON_IO_HPP
#define CURVELIM_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "curvelim/curve.hpp"
#include "curvelim/vessel.hpp"

namespace curvelim::json_io {

using Json = nlohmann::json;

// Encodings: rational "a/b" (or "a"), Gaussian {"re","im"}, float complex
// [re, im], matrices as row-major nested arrays, polynomials as
// [{"exp": [...], "coeff": ...}] in sorted exponent order.
//
// Decoders take the JSON pointer of the value for error messages and throw
// InputError("at /path: ...").

Json encode(const Rational& q);
Json encode(const Gauss& z);
Json encode(const Complex& z);
Json encode(const QMatrix& m);
Json encode(const CMatrix& m);
Json encode(const QPoly& p);
Json encode(const CPoly& p);
Json encode(const QVessel& v);
Json encode(const CVessel& v);
Json encode(const DetRep& d);
Json encode_point(const QPoint& x);
Json encode_point(const CPoint& x);
Json encode(const CurvePoint& p);

/// Accepts "a/b" strings and JSON integers.
Rational decode_rational(const Json& j, const std::string& at);
/// Accepts {"re","im"} objects (either part optional) or anything
/// decode_rational accepts.
Gauss decode_gauss(const Json& j, const std::string& at);
QMatrix decode_matrix(const Json& j, const std::string& at);
/// nvars is inferred from the exponent length unless given (> 0).
QPoly decode_poly(const Json& j, const std::string& at, int nvars = 0);
QVessel decode_vessel(const Json& j, const std::string& at);
DetRep decode_detrep(const Json& j, const std::string& at);
QPoint decode_point(const Json& j, const std::string& at);

/// Member lookup with a located error when missing.
const Json& member(const Json& j, const std::string& key, const std::string& at);
int decode_int(const Json& j, const std::string& at);

/// Parses text; malformed JSON becomes InputError with the byte offset.
Json parse(const std::string& text);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace curvelim::json_io

#endif
