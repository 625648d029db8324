#include "opns/ordering.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "opns/errors.hpp"

namespace opns {

namespace {

using Key = OrderingSpec::Key;

// rank[variant] — smaller rank means larger generator
std::vector<int> ranksOf(const std::vector<int>& generatorOrder) {
  std::vector<int> rank;
  for (size_t i = 0; i < generatorOrder.size(); ++i) {
    int v = generatorOrder[i];
    if (v >= static_cast<int>(rank.size())) rank.resize(v + 1, -1);
    rank[v] = static_cast<int>(i);
  }
  return rank;
}

// word comparison: degree first (direction per key and leaf), then letters by
// generator rank (larger generator = larger word, never reversed)
int compareWords(const std::vector<int>& u, const std::vector<int>& v,
                 const std::vector<int>& rank, bool longerLarger) {
  if (u.size() != v.size()) {
    bool uLonger = u.size() > v.size();
    return uLonger == longerLarger ? 1 : -1;
  }
  for (size_t i = 0; i < u.size(); ++i) {
    if (u[i] == v[i]) continue;
    return rank[u[i]] < rank[v[i]] ? 1 : -1;
  }
  return 0;
}

int compareKey(const Key& key, const PathSequence& pa, const PathSequence& pb, int degA,
               int degB, const std::vector<int>& rank) {
  switch (key.kind) {
    case Key::Kind::Degree: {
      if (degA == degB) return 0;
      bool aLarger = degA > degB;
      return aLarger != key.reversed ? 1 : -1;
    }
    case Key::Kind::PathWords: {
      for (size_t i = 0; i < pa.words.size(); ++i) {
        bool longerLarger = !key.reversed;
        if (key.alternate && i % 2 == 1) longerLarger = !longerLarger;
        if (int c = compareWords(pa.words[i], pb.words[i], rank, longerLarger)) return c;
      }
      return 0;
    }
    case Key::Kind::LeafPerm: {
      for (size_t i = 0; i < pa.permutation.size(); ++i) {
        if (pa.permutation[i] == pb.permutation[i]) continue;
        bool aLarger = pa.permutation[i] > pb.permutation[i];
        return aLarger != key.reversed ? 1 : -1;
      }
      return 0;
    }
  }
  return 0;
}

} // namespace

std::string OrderingSpec::describe(const ShuffleSignature& sig) const {
  std::ostringstream os;
  os << name << " [generators: ";
  for (size_t i = 0; i < generatorOrder.size(); ++i) {
    if (i) os << " > ";
    os << sig.name(generatorOrder[i]);
  }
  os << "; final tie-break: leaf permutation lex, larger wins]";
  return os.str();
}

OrderingSpec preset(const std::string& name, std::vector<int> generatorOrder) {
  OrderingSpec s;
  s.name = name;
  s.generatorOrder = std::move(generatorOrder);
  using K = Key::Kind;
  if (name == "gpl") {
    s.keys = {{K::Degree, false, false}, {K::PathWords, false, false}, {K::LeafPerm, false, false}};
  } else if (name == "rgpl") {
    s.keys = {{K::Degree, false, false}, {K::PathWords, true, false}, {K::LeafPerm, false, false}};
  } else if (name == "permfirst-rev-gpl") {
    s.keys = {{K::Degree, false, false}, {K::LeafPerm, true, false}, {K::PathWords, false, false}};
  } else {
    throw Error(errk::UnknownPreset, "no ordering preset named '" + name + "'");
  }
  return s;
}

OrderingSpec customOrdering(const std::string& keyChain, std::vector<int> generatorOrder) {
  OrderingSpec s;
  s.name = "custom:" + keyChain;
  s.generatorOrder = std::move(generatorOrder);
  std::stringstream ss(keyChain);
  std::string tok;
  using K = Key::Kind;
  while (std::getline(ss, tok, ',')) {
    if (tok == "deg")
      s.keys.push_back({K::Degree, false, false});
    else if (tok == "deg:rev")
      s.keys.push_back({K::Degree, true, false});
    else if (tok == "words")
      s.keys.push_back({K::PathWords, false, false});
    else if (tok == "words:rev")
      s.keys.push_back({K::PathWords, true, false});
    else if (tok == "words:mixed")
      s.keys.push_back({K::PathWords, false, true});
    else if (tok == "perm")
      s.keys.push_back({K::LeafPerm, false, false});
    else if (tok == "perm:rev")
      s.keys.push_back({K::LeafPerm, true, false});
    else
      throw Error(errk::UnknownPreset, "bad ordering key '" + tok + "'");
  }
  if (s.keys.empty()) throw Error(errk::UnknownPreset, "empty ordering key chain");
  return s;
}

int compare(const OrderingSpec& spec, const TreeMonomial& a, const TreeMonomial& b) {
  if (a.arity() != b.arity())
    throw Error(errk::ArityMismatch, "ordering comparison across arities");
  auto rank = ranksOf(spec.generatorOrder);
  PathSequence pa = pathSequence(a), pb = pathSequence(b);
  int degA = a.degree(), degB = b.degree();
  for (const auto& key : spec.keys)
    if (int c = compareKey(key, pa, pb, degA, degB, rank)) return c;
  return 0;
}

AdmissibilityReport checkAdmissible(const ShuffleSignature& sig, const OrderingSpec& spec,
                                    int arityBound, int samples, std::uint64_t seed) {
  AdmissibilityReport rep;
  std::mt19937_64 rng(seed);
  MonomialEnumerator en(sig);

  auto pickArity = [&](int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
  };
  auto pickFrom = [&](const std::vector<TreeMonomial>& v) {
    std::uniform_int_distribution<size_t> d(0, v.size() - 1);
    return v[d(rng)];
  };

  for (int s = 0; s < samples; ++s) {
    int n = pickArity(2, arityBound);
    const auto& pool = en.arity(n);
    if (pool.size() < 2) continue;
    TreeMonomial a = pickFrom(pool), b = pickFrom(pool);
    if (a == b) continue;
    int before = compare(spec, a, b);
    if (before == 0) {
      rep.pass = false;
      rep.counterexample = "distinct monomials compare equal: " + printMonomial(sig, a) + " vs " +
                           printMonomial(sig, b);
      return rep;
    }

    // graft the same context onto both: either a common inner below, or both
    // into a common outer
    bool innerBelow = rng() % 2 == 0;
    TreeMonomial other = pickFrom(en.arity(pickArity(2, std::max(2, arityBound - 1))));
    int after;
    std::string how;
    if (innerBelow) {
      std::uniform_int_distribution<int> slot(1, n);
      int at = slot(rng);
      auto assigns = shuffleAssignments(n, at, other.arity());
      std::uniform_int_distribution<size_t> pickA(0, assigns.size() - 1);
      const auto& labels = assigns[pickA(rng)];
      after = compare(spec, graft(sig, a, at, other, labels), graft(sig, b, at, other, labels));
      how = "graft " + printMonomial(sig, other) + " below slot " + std::to_string(at);
    } else {
      int m = other.arity();
      std::uniform_int_distribution<int> slot(1, m);
      int at = slot(rng);
      auto assigns = shuffleAssignments(m, at, n);
      std::uniform_int_distribution<size_t> pickA(0, assigns.size() - 1);
      const auto& labels = assigns[pickA(rng)];
      after = compare(spec, graft(sig, other, at, a, labels), graft(sig, other, at, b, labels));
      how = "graft into slot " + std::to_string(at) + " of " + printMonomial(sig, other);
    }
    ++rep.samplesRun;
    if (after != before) {
      rep.pass = false;
      rep.counterexample = printMonomial(sig, a) + (before > 0 ? " > " : " < ") +
                           printMonomial(sig, b) + " flips under " + how;
      return rep;
    }
  }
  return rep;
}

} // namespace opns
