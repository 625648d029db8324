#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opns/presentation.hpp"

namespace opns {

// One ordered-basis element of the generator species. A plain arity-k
// generator contributes k! variants f_sigma with
// f_sigma(x_1,...,x_k) := f(x_{sigma(1)},...,x_{sigma(k)}); symmetric and
// antisymmetric binary generators contribute a single variant, the latter
// with a sign rule.
struct ShuffleGenerator {
  int base = 0;    // generator index in the presentation
  int arity = 2;
  int variant = 0; // lexicographic rank of sigma; 0 for the identity
  bool antisym = false;
  std::string name;
};

class ShuffleSignature {
public:
  ShuffleSignature() = default;
  explicit ShuffleSignature(const Presentation& p);

  const Presentation& presentation() const { return pres_; }
  const std::vector<ShuffleGenerator>& gens() const { return gens_; }
  int arity(int vid) const { return gens_[vid].arity; }
  const std::string& name(int vid) const { return gens_[vid].name; }
  int variantId(int base, long long permRank) const;
  int findByName(const std::string& n) const; // -1 if absent
  int maxGeneratorArity() const;

private:
  Presentation pres_;
  std::vector<ShuffleGenerator> gens_;
  std::map<std::pair<int, long long>, int> byBaseVariant_;
  std::map<std::string, int> byName_;
};

// A decorated shuffle tree: leaves are exactly {1..n} and at every node the
// minimal leaves of the child subtrees increase left to right. The type does
// not enforce the invariant; canonical() establishes it.
struct TreeMonomial {
  int gen = -1; // variant id into the signature; -1 at a leaf
  int leaf = 0;
  std::vector<TreeMonomial> children;

  bool isLeaf() const { return gen < 0; }
  int arity() const;
  int degree() const; // internal vertex count
  int minLeaf() const;
  static TreeMonomial leafNode(int label);
  static TreeMonomial node(int gen, std::vector<TreeMonomial> ch);
};

// Arbitrary fixed structural order (arity, then preorder); map keys and
// deterministic enumeration only.
int treeCompare(const TreeMonomial& a, const TreeMonomial& b);
bool operator==(const TreeMonomial& a, const TreeMonomial& b);
inline bool operator!=(const TreeMonomial& a, const TreeMonomial& b) { return !(a == b); }
struct TreeLess {
  bool operator()(const TreeMonomial& a, const TreeMonomial& b) const {
    return treeCompare(a, b) < 0;
  }
};

// Rewrites a raw term (children in any order) into the canonical monomial.
// Sorting children by minimal leaf toggles plain variants, contributes -1 per
// swap at antisymmetric nodes, and is sign-free at symmetric ones.
std::pair<TreeMonomial, int> canonical(const ShuffleSignature& sig, const TreeMonomial& raw);

// Shuffle composition: insert inner at the leaf of outer labelled `at`,
// giving the block `innerLabels` (ascending) of the result's label set to
// inner. Valid iff exactly at-1 of the remaining labels are below
// min(innerLabels); the remaining labels then fill the other slots of outer
// in increasing order.
TreeMonomial graft(const ShuffleSignature& sig, const TreeMonomial& outer, int at,
                   const TreeMonomial& inner, const std::vector<int>& innerLabels);

// All valid inner blocks for grafting an arity-l tree at slot `at` of an
// arity-m tree, as ascending label lists over {1..m+l-1}.
std::vector<std::vector<int>> shuffleAssignments(int outerArity, int at, int innerArity);

// An embedding of a pattern into a host: pattern internal vertices (preorder)
// mapped to host internal vertices (preorder indices), connected and
// child-order compatible, with the induced block relabeling reproducing the
// pattern's leaf labels.
struct Occurrence {
  std::vector<int> vertexImage;
};

// All occurrences of pattern in host, ordered by their vertex-image sets.
// The unit tree (degree 0) is rejected as a pattern.
std::vector<Occurrence> divisors(const ShuffleSignature& sig, const TreeMonomial& host,
                                 const TreeMonomial& pattern);

// Host with the occurrence's pattern replaced by substitute (same arity).
// The block structure is preserved, so the result needs no re-sorting; the
// sign is always +1 and is returned for interface symmetry.
std::pair<TreeMonomial, int> replaceAt(const ShuffleSignature& sig, const TreeMonomial& host,
                                       const Occurrence& occ, const TreeMonomial& pattern,
                                       const TreeMonomial& substitute);

struct OverlapSite {
  TreeMonomial ambient;
  Occurrence occ1, occ2;
};

// All small common multiples of m1 and m2 with ambient arity <= arityBound:
// ordered occurrence pairs whose vertex images intersect and jointly cover
// the ambient. For m1 = m2 the two occurrences must differ.
std::vector<OverlapSite> overlaps(const ShuffleSignature& sig, const TreeMonomial& m1,
                                  const TreeMonomial& m2, int arityBound);

bool isLeftComb(const TreeMonomial& m);
bool minLeafAtRoot(const TreeMonomial& m);
bool secondMinSiblingOfMin(const TreeMonomial& m);

struct PathSequence {
  std::vector<std::vector<int>> words; // words[i]: variant ids, root first, to leaf i+1
  std::vector<int> permutation;        // leaf labels left to right in the planar order
};
PathSequence pathSequence(const TreeMonomial& m);

// All monomials of the given arity, in structural order. Cached per arity.
class MonomialEnumerator {
public:
  explicit MonomialEnumerator(const ShuffleSignature& sig) : sig_(&sig) {}
  const std::vector<TreeMonomial>& arity(int n);

private:
  const ShuffleSignature* sig_;
  std::map<int, std::vector<TreeMonomial>> cache_;
};

std::string printMonomial(const ShuffleSignature& sig, const TreeMonomial& m);
TreeMonomial parseMonomial(const ShuffleSignature& sig, const std::string& text);

} // namespace opns
