#pragma once
#include <optional>
#include <string>
#include <vector>

#include "opns/presentation.hpp"

namespace opns {

// Brute-force verification in the free symmetric operad, independent of the
// whole shuffle/Groebner path: multilinear dimensions by exhaustive
// consequence generation and exact row reduction.
//
// The consequence space is built inductively. V_m starts as the span of the
// S_m-orbits of the arity-m identities; V_n is spanned by all g o_i v and
// v o_i g (g a structure generator, v running over a spanning set of a lower
// V_m, one elementary grafting) closed under the S_n-action. This generates
// the full ideal component: any tree with one marked relation vertex is
// assembled from the relation by grafting one generator at a time — first
// below its inputs (v o_i g), then up the spine and into the context
// (g o_i v followed by further v' o_j g steps) — and the S_n closure
// redistributes the labels of every intermediate stage.

struct OracleGuards {
  int freeDimBound = 6;
  int consequenceBound = 5;
};

// Canonical multilinear monomials of the free symmetric operad on {1..n}.
std::vector<SymTree> enumerateSymMonomials(const Presentation& p, int n);

long long freeDim(const Presentation& p, int n, const OracleGuards& g = {});
long long consequenceDim(const Presentation& p, int n, const OracleGuards& g = {});
long long operadDim(const Presentation& p, int n, const OracleGuards& g = {});

struct Membership {
  bool member = false;
  // Expressing combination over generated consequence elements, each tagged
  // with its provenance (sigma, grafting scheme, identity index).
  std::vector<std::pair<Rat, std::string>> witness;
};
Membership isConsequence(const Presentation& p, const MultilinearIdentity& e,
                         const OracleGuards& g = {});

} // namespace opns
