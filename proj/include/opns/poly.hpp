#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opns/ordering.hpp"
#include "opns/rational.hpp"
#include "opns/shuffle.hpp"

namespace opns {

// Finite exact-rational combination of same-arity tree monomials. Zero
// coefficients are never stored; terms live in a structurally ordered map so
// iteration is deterministic.
class Poly {
public:
  Poly() = default;
  explicit Poly(int arity) : arity_(arity) {}

  int arity() const { return arity_; }
  bool isZero() const { return terms_.empty(); }
  const std::map<TreeMonomial, Rat, TreeLess>& terms() const { return terms_; }

  void add(const TreeMonomial& m, const Rat& c);
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator*(const Rat& c, Poly p) { p *= c; return p; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  // Divide by the rational content; coefficients become coprime integers.
  void makePrimitive();
  // Scale so the structurally first coefficient is +1 (ordering-free scaling).
  void makeMonicFirst();
  // Scale so the coefficient of the ord-leading monomial is +1.
  void makeMonic(const OrderingSpec& ord);

private:
  int arity_ = 0;
  std::map<TreeMonomial, Rat, TreeLess> terms_;
};

std::pair<TreeMonomial, Rat> leadingTerm(const Poly& p, const OrderingSpec& ord);

// sum over the terms of g of coeff * replaceAt(host, occ, pattern, monomial);
// pattern must be a monomial of g's arity (normally its leading term).
Poly insertAt(const ShuffleSignature& sig, const TreeMonomial& host, const Occurrence& occ,
              const TreeMonomial& pattern, const Poly& g);

struct ReduceStep {
  int element = 0; // index into G
  TreeMonomial monomial;
  Occurrence occ;
  Rat factor; // p := p - factor * insertAt(monomial, occ, lt, G[element])
};

// Long division: repeatedly rewrites the largest reducible monomial, taking
// the first basis element in list order and the first divisor occurrence.
// No monomial of the result is divisible by any leading term of G.
Poly reduce(const ShuffleSignature& sig, Poly p, const std::vector<Poly>& G,
            const OrderingSpec& ord, std::vector<ReduceStep>* trace = nullptr);

// Monic basis with no monomial of any element divisible by another element's
// leading term; deterministic canonical output (sorted by arity, then leading
// term ascending).
std::vector<Poly> interreduce(const ShuffleSignature& sig, std::vector<Poly> G,
                              const OrderingSpec& ord);

std::string printPoly(const ShuffleSignature& sig, const Poly& p);

} // namespace opns
