#pragma once
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "opns/rational.hpp"

namespace opns {

enum class Symmetry { Plain, Symmetric, Antisymmetric };

struct GeneratorSpec {
  std::string name;
  int arity = 2;
  Symmetry symmetry = Symmetry::Plain;
};

// Planar application tree over a presentation's generators. Leaves carry
// either variable ids (raw identities; repetition allowed) or the slots
// 1..n of a multilinear element (pairwise distinct).
struct SymTree {
  int gen = -1; // generator index into the presentation; -1 at a leaf
  int leaf = 0;
  std::vector<SymTree> children;

  bool isLeaf() const { return gen < 0; }
  int arity() const;   // number of leaves
  int minLeaf() const; // smallest leaf id
  static SymTree leafNode(int id);
  static SymTree node(int gen, std::vector<SymTree> ch);
};

// Arbitrary fixed total order; used for map keys and canonical row reduction,
// never as the admissible monomial order.
int symCompare(const SymTree& a, const SymTree& b);
bool operator==(const SymTree& a, const SymTree& b);
inline bool operator!=(const SymTree& a, const SymTree& b) { return !(a == b); }
struct SymLess {
  bool operator()(const SymTree& a, const SymTree& b) const { return symCompare(a, b) < 0; }
};

struct RawIdentity {
  std::vector<std::pair<Rat, SymTree>> terms; // sum = 0
  std::string text;                           // source form, for diagnostics
};

struct Presentation {
  std::string name;
  std::vector<GeneratorSpec> generators;
  std::vector<RawIdentity> identities;

  int generatorIndex(const std::string& n) const;
};

// Leaves are exactly 1..arity, once each; terms are in sym-canonical form.
struct MultilinearIdentity {
  int arity = 0;
  std::vector<std::pair<Rat, SymTree>> terms;
};

// Checks every type invariant (generator arities and symmetries, identity
// well-formedness, per-variable homogeneity). Returns its argument.
const Presentation& validate(const Presentation& p);

// Canonical form modulo the declared generator symmetries: symmetric and
// antisymmetric binary nodes get their children ordered by (min leaf,
// structural), antisymmetric swaps contribute -1, and an antisymmetric node
// with equal children collapses to zero (sign 0).
std::pair<SymTree, int> symCanonical(const Presentation& p, const SymTree& t);

// Full polarization of a per-variable homogeneous identity: each variable of
// degree d becomes a sum of d fresh slots and the multidegree-(1,...,1)
// component is extracted; the result is primitive (content divided out).
std::vector<MultilinearIdentity> multilinearize(const Presentation& p, const RawIdentity& id);

// Invertible exact change of basis on the span of binary generators.
// images[g] expresses the old generator g(x,y) in the new ones:
// sum of straight * f(x,y) + swapped * f(y,x).
struct BasisMap {
  struct Image {
    int newGen = 0;
    Rat straight = 0;
    Rat swapped = 0;
  };
  std::vector<GeneratorSpec> newGenerators;
  std::map<int, std::vector<Image>> images;
};

Presentation changeGeneratorBasis(const Presentation& p, const BasisMap& map);

// The standard split of one plain binary product into a symmetric and an
// antisymmetric part: g(x,y) = (1/2) s(x,y) + (1/2) a(x,y) with
// s(x,y) = g(x,y) + g(y,x) and a(x,y) = g(x,y) - g(y,x).
BasisMap symmetrizedSplit(const Presentation& p, int gen,
                          const std::string& symName, const std::string& antiName);

std::string printSymTree(const Presentation& p, const SymTree& t,
                         const std::vector<std::string>* varNames = nullptr);

} // namespace opns
