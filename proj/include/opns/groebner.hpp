#pragma once
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "opns/poly.hpp"
#include "opns/symmetrize.hpp"

namespace opns {

struct CompletionEvent {
  int arity = 0;
  int first = 0, second = 0; // basis indices of the overlapping pair
  std::string ambient;
  std::string outcome; // "reduced-to-zero" | "adjoined"
};
using TraceSink = std::function<void(const CompletionEvent&)>;

// A reduced Groebner basis truncated at an arity bound. complete(n) means
// every S-polynomial with ambient arity <= n reduced to zero against the
// elements; values beyond the bound are never claimed.
struct TruncatedGB {
  OrderingSpec ordering;
  std::vector<Poly> elements; // interreduced, monic
  int arityBound = 0;
  std::map<int, bool> completeThrough;
  std::vector<CompletionEvent> log;

  bool complete(int n) const;
  std::vector<TreeMonomial> leadingTerms() const;
};

// Buchberger completion stratified by ambient arity: each stratum's overlap
// sites are processed in deterministic order against the growing basis, then
// the basis is interreduced. Within one arity the monomial set is finite, so
// every stratum terminates.
TruncatedGB buchberger(const ShufflePresentation& sp, const OrderingSpec& ord, int arityBound,
                       const TraceSink& trace = {});

// All arity-n monomials divisible by no leading term, sorted ord-descending.
std::vector<TreeMonomial> normalMonomials(const ShuffleSignature& sig, const TruncatedGB& gb,
                                          int n);

struct DimEntry {
  long long dim = 0;
  bool exact = false; // upper bound when the GB is not complete at this arity
};
std::vector<DimEntry> hilbertSeries(const ShuffleSignature& sig, const TruncatedGB& gb, int N);

// The quadratic-basis counting certificate: per arity n, the number of
// monomials all of whose two-vertex divisors are leading terms, compared
// against externally supplied Koszul dual dimensions (printed verbatim;
// conventions at arities 1 and 2 are the caller's).
struct QuadraticCertificate {
  bool applicable = false; // all elements quadratic over binary generators
  std::vector<long long> counts;   // arities 1..N
  std::vector<long long> expected; // supplied dual dims
  std::vector<bool> equal;
  bool allEqual = false;
};
QuadraticCertificate quadraticCertificate(const ShuffleSignature& sig, const TruncatedGB& gb,
                                          const std::vector<long long>& koszulDualDims, int N);

// The cancellation combination on an overlap site whose patterns are the
// leading terms of g1, g2; the ambient monomial's coefficient vanishes.
Poly spolynomial(const ShuffleSignature& sig, const OverlapSite& site, const Poly& g1,
                 const Poly& g2, const OrderingSpec& ord);

// Structural bound on the ambient arity of any overlap of two patterns
// (shared vertex of arity >= 2).
int maxOverlapArity(const TreeMonomial& m1, const TreeMonomial& m2);

// True when the final basis has no overlap sites at any ambient arity up to
// the structural bound; such a truncation is a Groebner basis outright.
bool noOverlapCertificate(const ShuffleSignature& sig, const TruncatedGB& gb);

} // namespace opns
