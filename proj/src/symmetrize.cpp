#include "opns/symmetrize.hpp"

#include <algorithm>
#include <cassert>
#include <functional>

#include "opns/errors.hpp"
#include "opns/util.hpp"

namespace opns {

std::vector<ShuffleGenerator> toShuffleGenerators(const Presentation& p, int genIndex) {
  ShuffleSignature sig(p);
  std::vector<ShuffleGenerator> out;
  for (const auto& g : sig.gens())
    if (g.base == genIndex) out.push_back(g);
  return out;
}

std::pair<TreeMonomial, int> symToShuffle(const ShuffleSignature& sig, const SymTree& t) {
  if (t.isLeaf()) return {TreeMonomial::leafNode(t.leaf), 1};
  int sign = 1;
  std::vector<TreeMonomial> kids;
  std::vector<int> mins;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) {
    auto [cm, cs] = symToShuffle(sig, c);
    sign *= cs;
    mins.push_back(cm.minLeaf());
    kids.push_back(std::move(cm));
  }
  int k = static_cast<int>(kids.size());
  std::vector<int> rho(k); // kids[rho[j]] is the j-th smallest by min leaf
  for (int i = 0; i < k; ++i) rho[i] = i;
  std::sort(rho.begin(), rho.end(), [&](int i, int j) { return mins[i] < mins[j]; });

  std::vector<TreeMonomial> sortedKids;
  sortedKids.reserve(k);
  for (int j = 0; j < k; ++j) sortedKids.push_back(std::move(kids[rho[j]]));

  const auto& spec = sig.presentation().generators[t.gen];
  int vid;
  switch (spec.symmetry) {
    case Symmetry::Plain:
      // f(t_1..t_k) = f_sigma(c_1..c_k) with c_j = t_{rho(j)}, sigma = rho^{-1}
      vid = sig.variantId(t.gen, permRank(permInverse(rho)));
      break;
    case Symmetry::Symmetric:
      vid = sig.variantId(t.gen, 0);
      break;
    case Symmetry::Antisymmetric:
      vid = sig.variantId(t.gen, 0);
      sign *= permSign(rho);
      break;
    default:
      vid = -1;
  }
  return {TreeMonomial::node(vid, std::move(sortedKids)), sign};
}

std::vector<Poly> rowReduce(std::vector<Poly> rows) {
  // pivots on the structurally smallest monomial; full back substitution
  std::vector<Poly> basis; // kept with pivot = first term of the map
  for (Poly& row : rows) {
    for (const auto& b : basis) {
      if (row.isZero()) break;
      const auto& pivot = b.terms().begin()->first;
      auto it = row.terms().find(pivot);
      if (it != row.terms().end()) {
        Poly sub = b;
        sub *= it->second; // basis rows have pivot coefficient 1
        row -= sub;
      }
    }
    if (row.isZero()) continue;
    Rat lead = row.terms().begin()->second;
    row *= Rat(1) / lead;
    basis.push_back(std::move(row));
  }
  // eliminate every other pivot from each row; rows contain no pivot of an
  // earlier row, so one ascending pass per row suffices
  for (size_t i = 0; i < basis.size(); ++i) {
    for (size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      const auto& pivot = basis[j].terms().begin()->first;
      auto it = basis[i].terms().find(pivot);
      if (it != basis[i].terms().end()) {
        Poly sub = basis[j];
        sub *= it->second;
        basis[i] -= sub;
      }
    }
  }
  for (auto& b : basis) {
    b.makePrimitive();
    b.makeMonicFirst();
  }
  std::sort(basis.begin(), basis.end(), [](const Poly& a, const Poly& b) {
    return treeCompare(a.terms().begin()->first, b.terms().begin()->first) < 0;
  });
  return basis;
}

std::vector<Poly> orbitExpand(const ShuffleSignature& sig, const MultilinearIdentity& id) {
  int n = id.arity;
  std::vector<Poly> images;
  long long nperm = factorial(n);
  for (long long r = 0; r < nperm; ++r) {
    auto sigma = permUnrank(n, r);
    Poly img(n);
    for (const auto& [coeff, term] : id.terms) {
      // relabel slots through sigma, then rewrite into the shuffle basis
      std::function<SymTree(const SymTree&)> rel = [&](const SymTree& t) -> SymTree {
        if (t.isLeaf()) return SymTree::leafNode(sigma[t.leaf - 1] + 1);
        std::vector<SymTree> kids;
        kids.reserve(t.children.size());
        for (const auto& c : t.children) kids.push_back(rel(c));
        return SymTree::node(t.gen, std::move(kids));
      };
      auto [mono, sign] = symToShuffle(sig, rel(term));
      img.add(mono, sign > 0 ? coeff : -coeff);
    }
    if (!img.isZero()) images.push_back(std::move(img));
  }
  return rowReduce(std::move(images));
}

ShufflePresentation presentShuffle(const Presentation& p) {
  validate(p);
  ShufflePresentation sp{p, ShuffleSignature(p), {}};
  std::map<int, std::vector<Poly>> byArity;
  for (const auto& id : p.identities) {
    for (const auto& mid : multilinearize(p, id)) {
      for (auto& rel : orbitExpand(sp.signature, mid))
        byArity[mid.arity].push_back(std::move(rel));
    }
  }
  for (auto& [arity, rels] : byArity) {
    (void)arity;
    for (auto& rel : rowReduce(std::move(rels))) sp.relations.push_back(std::move(rel));
  }
  return sp;
}

} // namespace opns
