#pragma once
#include <optional>
#include <string>
#include <vector>

#include "opns/groebner.hpp"

namespace opns {

enum class ConditionStatus { HoldsCertified, HoldsUpToBound, Fails };

// One ordering family member's outcome: the completed basis, the predicate
// verdict on its leading terms, and how completeness was certified.
struct ConditionRun {
  OrderingSpec ordering;
  ConditionStatus status = ConditionStatus::Fails;
  std::string certification = "none"; // "quadratic-certificate" | "no-overlap" | "none"
  std::optional<std::string> witness; // offending leading term when Fails
  std::vector<std::string> leadingTerms;
  TruncatedGB gb;
};

struct ConditionReport {
  std::string condition; // "M1" | "M2"
  std::vector<ConditionRun> runs;
  ConditionStatus overall = ConditionStatus::Fails; // best run; holds if ANY run holds
  int best = -1;                                    // index of the deciding run
};

enum class Verdict { NSByTheorem, NSByConjecture, NSUpToBound, CriterionFails, Inconclusive };
std::string verdictName(Verdict v);

struct NSReport {
  std::string presentationName;
  int arityBound = 0;
  bool conjectureMode = false;
  ConditionReport m1;
  std::optional<ConditionReport> m2; // absent in conjecture mode
  Verdict verdict = Verdict::Inconclusive;
  std::vector<long long> dims; // hilbert series of the best M1 run, 1..bound
  std::vector<bool> dimsExact;
};

struct CheckOptions {
  int arityBound = 5;
  bool conjectureMode = false;
  // Koszul dual dimensions for the quadratic certificate, arities 1..bound;
  // never computed internally.
  std::optional<std::vector<long long>> koszulDualDims;
  // Generator-order family; defaults to all permutations of the variants
  // when there are at most four, else the declared order alone.
  std::optional<std::vector<std::vector<int>>> generatorOrders;
  TraceSink trace;
};

// Condition (M1): for rgpl, every leading term has the minimal leaf directly
// connected to the root; quantified over the generator-order family.
ConditionReport checkM1(const ShufflePresentation& sp, const CheckOptions& opt);

// Condition (M2): some ordering in the declared family (gpl and
// permfirst-rev-gpl over the generator-order family) makes every leading
// term a left comb whose second smallest leaf is a sibling of the minimal
// leaf.
ConditionReport checkM2(const ShufflePresentation& sp, const CheckOptions& opt);

// Combined verdict. NS-by-theorem needs both conditions certified at every
// arity; a failing criterion is still reported as inconclusive for
// NS-negativity (the criterion is sufficient, not necessary).
NSReport checkNS(const Presentation& p, const CheckOptions& opt);

// Count of arity-n normal monomials with the minimal leaf at the root
// (free generators of the universal multiplicative envelope); requires an
// rgpl basis.
long long envelopeGeneratorCount(const ShuffleSignature& sig, const TruncatedGB& gb, int n);

// Count of arity-n normal monomials that are left combs (PBW generators);
// requires a gpl-family basis.
long long pbwGeneratorCount(const ShuffleSignature& sig, const TruncatedGB& gb, int n);

// Dimension lower bounds from the generating-series inequality
// f(t) >= integral of dt/(1 - f'_X(t)): entry n-1 is n! times the t^n
// coefficient of the integral, for n = 1..N.
std::vector<Rat> lowerBoundSeries(const std::vector<long long>& generatorDimsByArity, int N);

} // namespace opns
