#pragma once
#include <vector>

#include "opns/poly.hpp"
#include "opns/presentation.hpp"
#include "opns/shuffle.hpp"

namespace opns {

// The generator species of one presentation generator as ordered-basis
// elements (same data the ShuffleSignature constructor assembles).
std::vector<ShuffleGenerator> toShuffleGenerators(const Presentation& p, int genIndex);

// Rewrite of a multilinear symmetric-world term into the shuffle monomial
// basis; the sign collects antisymmetry swaps and plain-variant bookkeeping.
std::pair<TreeMonomial, int> symToShuffle(const ShuffleSignature& sig, const SymTree& t);

// The S_n-orbit of a multilinear identity, rewritten into the shuffle basis
// and row-reduced (structural pivot order) to a canonical independent
// spanning set. Relations absorbed by generator sign rules come out empty.
std::vector<Poly> orbitExpand(const ShuffleSignature& sig, const MultilinearIdentity& id);

struct ShufflePresentation {
  Presentation source;
  ShuffleSignature signature;
  std::vector<Poly> relations; // arity-grouped, primitive, first coefficient +1
};

// validate + multilinearize + orbit expansion over all identities, with a
// per-arity canonical row reduction; bit-identical across reruns.
ShufflePresentation presentShuffle(const Presentation& p);

// Canonical row reduction used throughout: Gaussian elimination with pivots
// on the structurally smallest monomial, back-substituted, rows primitive
// with first coefficient +1, sorted by pivot.
std::vector<Poly> rowReduce(std::vector<Poly> rows);

} // namespace opns
