#include "curvelim/poly.hpp"

#include <sstream>

namespace curvelim {

std::string to_string(const QPoly& p) {
  if (p.is_zero()) return "0";
  static const char* names2[] = {"y1", "y2", ""};
  static const char* names3[] = {"x0", "x1", "x2"};
  static const char* names1[] = {"x", "", ""};
  const char** names = p.nvars() == 1 ? names1 : p.nvars() == 2 ? names2 : names3;
  std::ostringstream os;
  bool first = true;
  // Highest degree first.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    std::string cs = to_string(c);
    const bool neg = c.is_real() && sgn(c.re()) < 0;
    if (neg) cs = to_string(Gauss(-c.re()));
    if (!c.is_real()) cs = "(" + cs + ")";
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    std::string mono;
    for (int k = 0; k < p.nvars(); ++k) {
      const int pw = e[static_cast<std::size_t>(k)];
      if (pw == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (pw > 1) mono += "^" + std::to_string(pw);
    }
    if (mono.empty()) os << cs;
    else if (cs == "1") os << mono;
    else os << cs << "*" << mono;
  }
  return os.str();
}

MonomialIndex::MonomialIndex(int degree) : degree_(degree) {
  if (degree < 0) throw InputError("monomial degree must be non-negative");
  for (int i0 = degree; i0 >= 0; --i0)
    for (int i1 = degree - i0; i1 >= 0; --i1) list_.push_back({i0, i1, degree - i0 - i1});
}

std::size_t MonomialIndex::position(const Exponent& e) const {
  if (degree_of(e) != degree_ || e[0] < 0 || e[1] < 0 || e[2] < 0)
    throw InputError("monomial_position: exponent has wrong degree");
  const std::size_t s = static_cast<std::size_t>(degree_ - e[0]);
  return s * (s + 1) / 2 + (s - static_cast<std::size_t>(e[1]));
}

}  // namespace curvelim
