#pragma once
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "opns/shuffle.hpp"

namespace opns {

// Admissible monomial orderings as key chains over same-arity monomials.
// Presets:
//   gpl               degree, path words (longer = larger, ties letterwise by
//                     the generator order), leaf permutation lex
//   rgpl              as gpl with only the word-length comparison reversed
//   permfirst-rev-gpl degree, leaf permutation reversed-lex, then path words
//                     as in gpl
// Words are compared leaf by leaf in label order. The final permutation
// tie-break is plain lex (larger wins); report headers record this.
struct OrderingSpec {
  struct Key {
    enum class Kind { Degree, PathWords, LeafPerm };
    Kind kind = Kind::Degree;
    bool reversed = false;
    // PathWords only: flip the length direction on even-indexed leaves.
    // Deliberately inadmissible; exists so property tests can exhibit a
    // failing spec.
    bool alternate = false;
  };

  std::string name = "custom";
  std::vector<int> generatorOrder; // variant ids, largest first
  std::vector<Key> keys;

  std::string describe(const ShuffleSignature& sig) const;
};

// name in {gpl, rgpl, permfirst-rev-gpl}; generatorOrder lists every variant
// id, largest first.
OrderingSpec preset(const std::string& name, std::vector<int> generatorOrder);

// Custom chains: comma list of "deg", "deg:rev", "words", "words:rev",
// "words:mixed", "perm", "perm:rev".
OrderingSpec customOrdering(const std::string& keyChain, std::vector<int> generatorOrder);

// Total on each fixed arity; -1 / 0 / +1.
int compare(const OrderingSpec& spec, const TreeMonomial& a, const TreeMonomial& b);

struct AdmissibilityReport {
  bool pass = true;
  int samplesRun = 0;
  std::string counterexample; // printable description when pass is false
};

// Property test: for random same-arity pairs a < b and a random grafting
// applied identically to both (as inner or as outer), asserts the comparison
// is preserved.
AdmissibilityReport checkAdmissible(const ShuffleSignature& sig, const OrderingSpec& spec,
                                    int arityBound, int samples, std::uint64_t seed = 20230405);

} // namespace opns
