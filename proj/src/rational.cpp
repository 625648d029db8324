#include "opns/rational.hpp"

#include "opns/errors.hpp"

namespace opns {

Rat ratFromString(const std::string& s) {
  if (s.empty()) throw Error(errk::SyntaxError, "empty rational literal");
  for (char c : s)
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || c == '-'))
      throw Error(errk::SyntaxError, "bad rational literal '" + s + "'");
  Rat r;
  if (r.set_str(s, 10) != 0) throw Error(errk::SyntaxError, "bad rational literal '" + s + "'");
  r.canonicalize();
  return r;
}

std::string ratToString(const Rat& r) { return r.get_str(); }

Rat contentOf(const std::vector<Rat>& coeffs) {
  if (coeffs.empty()) return 0;
  mpz_class num = 0, den = 1;
  for (const Rat& c : coeffs) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), c.get_num().get_mpz_t());
    num = g;
    mpz_class l;
    mpz_lcm(l.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    den = l;
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

} // namespace opns
