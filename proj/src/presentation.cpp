#include "opns/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

#include "opns/errors.hpp"
#include "opns/util.hpp"

namespace opns {

int SymTree::arity() const {
  if (isLeaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.arity();
  return n;
}

int SymTree::minLeaf() const {
  if (isLeaf()) return leaf;
  int m = children.front().minLeaf();
  for (size_t i = 1; i < children.size(); ++i) m = std::min(m, children[i].minLeaf());
  return m;
}

SymTree SymTree::leafNode(int id) {
  SymTree t;
  t.leaf = id;
  return t;
}

SymTree SymTree::node(int gen, std::vector<SymTree> ch) {
  SymTree t;
  t.gen = gen;
  t.children = std::move(ch);
  return t;
}

int symCompare(const SymTree& a, const SymTree& b) {
  int aa = a.arity(), ba = b.arity();
  if (aa != ba) return aa < ba ? -1 : 1;
  if (a.isLeaf() != b.isLeaf()) return a.isLeaf() ? -1 : 1;
  if (a.isLeaf()) return a.leaf == b.leaf ? 0 : (a.leaf < b.leaf ? -1 : 1);
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (int c = symCompare(a.children[i], b.children[i])) return c;
  return 0;
}

bool operator==(const SymTree& a, const SymTree& b) { return symCompare(a, b) == 0; }

int Presentation::generatorIndex(const std::string& n) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == n) return static_cast<int>(i);
  return -1;
}

namespace {

void checkTerm(const Presentation& p, const SymTree& t, const std::string& where) {
  if (t.isLeaf()) return;
  if (t.gen < 0 || t.gen >= static_cast<int>(p.generators.size()))
    throw Error(errk::UndeclaredGenerator, "unknown generator in " + where);
  if (static_cast<int>(t.children.size()) != p.generators[t.gen].arity)
    throw Error(errk::BadArity, "application of '" + p.generators[t.gen].name + "' with " +
                                    std::to_string(t.children.size()) + " arguments in " + where);
  for (const auto& c : t.children) checkTerm(p, c, where);
}

void variableDegrees(const SymTree& t, std::map<int, int>& deg) {
  if (t.isLeaf()) {
    ++deg[t.leaf];
    return;
  }
  for (const auto& c : t.children) variableDegrees(c, deg);
}

} // namespace

const Presentation& validate(const Presentation& p) {
  std::set<std::string> names;
  for (const auto& g : p.generators) {
    if (!names.insert(g.name).second)
      throw Error(errk::DuplicateGenerator, "generator '" + g.name + "' declared twice");
    if (g.arity < 2)
      throw Error(errk::BadArity, "generator '" + g.name + "' has arity " +
                                      std::to_string(g.arity) + "; structure operations need arity >= 2");
    if (g.symmetry != Symmetry::Plain && g.arity != 2)
      throw Error(errk::SymmetryOnNonBinary,
                  "generator '" + g.name + "' is non-binary but declares a symmetry");
  }
  for (const auto& id : p.identities) {
    const std::string where = "identity '" + id.text + "'";
    std::optional<std::map<int, int>> multidegree;
    for (const auto& [c, t] : id.terms) {
      (void)c;
      checkTerm(p, t, where);
      std::map<int, int> deg;
      variableDegrees(t, deg);
      if (!multidegree)
        multidegree = deg;
      else if (*multidegree != deg)
        throw Error(errk::InhomogeneousIdentity,
                    where + " is not homogeneous in each variable");
    }
  }
  return p;
}

std::pair<SymTree, int> symCanonical(const Presentation& p, const SymTree& t) {
  if (t.isLeaf()) return {t, 1};
  int sign = 1;
  SymTree out;
  out.gen = t.gen;
  out.children.reserve(t.children.size());
  for (const auto& c : t.children) {
    auto [cc, cs] = symCanonical(p, c);
    if (cs == 0) return {t, 0};
    sign *= cs;
    out.children.push_back(std::move(cc));
  }
  const Symmetry sym = p.generators[t.gen].symmetry;
  if (sym != Symmetry::Plain) {
    assert(out.children.size() == 2);
    SymTree &l = out.children[0], &r = out.children[1];
    int lk = l.minLeaf(), rk = r.minLeaf();
    int cmp = lk != rk ? (lk < rk ? -1 : 1) : symCompare(l, r);
    if (cmp == 0 && sym == Symmetry::Antisymmetric) return {t, 0};
    if (cmp > 0) {
      std::swap(l, r);
      if (sym == Symmetry::Antisymmetric) sign = -sign;
    }
  }
  return {out, sign};
}

namespace {

void leafPositions(SymTree& t, int var, std::vector<SymTree*>& out) {
  if (t.isLeaf()) {
    if (t.leaf == var) out.push_back(&t);
    return;
  }
  for (auto& c : t.children) leafPositions(c, var, out);
}

} // namespace

std::vector<MultilinearIdentity> multilinearize(const Presentation& p, const RawIdentity& id) {
  validate(Presentation{p.name, p.generators, {id}});
  if (id.terms.empty()) return {};

  std::map<int, int> multidegree;
  variableDegrees(id.terms.front().second, multidegree);
  int arity = 0;
  for (auto& [v, d] : multidegree) {
    (void)v;
    arity += d;
  }

  // slot ranges per variable, in variable id order
  std::map<int, int> slotBase;
  {
    int base = 0;
    for (auto& [v, d] : multidegree) {
      slotBase[v] = base;
      base += d;
    }
  }

  std::map<SymTree, Rat, SymLess> acc;
  for (const auto& [coeff, term] : id.terms) {
    // variables get temporary negative ids so slot labels 1..n never collide
    SymTree work = term;
    std::function<void(SymTree&)> mark = [&](SymTree& n) {
      if (n.isLeaf()) {
        n.leaf = -(n.leaf + 1);
        return;
      }
      for (auto& ch : n.children) mark(ch);
    };
    mark(work);

    // enumerate, per variable, the bijections occurrence -> slot
    std::vector<std::pair<int, int>> vars; // (var, degree)
    for (auto& [v, d] : multidegree) vars.emplace_back(v, d);

    std::function<void(size_t)> assign = [&](size_t vi) {
      if (vi == vars.size()) {
        auto [ct, sg] = symCanonical(p, work);
        if (sg == 0) return;
        Rat& slot = acc[ct];
        slot += coeff * sg;
        if (slot == 0) acc.erase(ct);
        return;
      }
      auto [var, d] = vars[vi];
      std::vector<SymTree*> occ;
      leafPositions(work, -(var + 1), occ);
      assert(static_cast<int>(occ.size()) == d);
      long long nperm = factorial(d);
      for (long long r = 0; r < nperm; ++r) {
        auto perm = permUnrank(d, r);
        for (int i = 0; i < d; ++i) occ[i]->leaf = slotBase[var] + perm[i] + 1;
        assign(vi + 1);
      }
      for (int i = 0; i < d; ++i) occ[i]->leaf = -(var + 1); // restore
    };
    assign(0);
  }

  if (acc.empty()) return {};

  MultilinearIdentity out;
  out.arity = arity;
  std::vector<Rat> coeffs;
  for (auto& [t, c] : acc) coeffs.push_back(c);
  Rat content = contentOf(coeffs);
  for (auto& [t, c] : acc) out.terms.emplace_back(c / content, t);
  return {out};
}

namespace {

// basis of the binary multilinear span: (gen, swapped?) with swapped only for
// plain generators
struct BinBasis {
  std::vector<std::pair<int, int>> elems; // (genIndex, 0|1)
  std::map<std::pair<int, int>, int> index;

  explicit BinBasis(const std::vector<GeneratorSpec>& gens) {
    for (size_t g = 0; g < gens.size(); ++g) {
      if (gens[g].arity != 2) continue;
      elems.emplace_back(static_cast<int>(g), 0);
      if (gens[g].symmetry == Symmetry::Plain) elems.emplace_back(static_cast<int>(g), 1);
    }
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);
  }

  // add c * gen(x,y) (swapped = 0) or c * gen(y,x) (swapped = 1), folding the
  // generator's own symmetry
  void accumulate(std::vector<Rat>& vec, const std::vector<GeneratorSpec>& gens, int gen,
                  int swapped, const Rat& c) const {
    const auto sym = gens[gen].symmetry;
    if (sym == Symmetry::Plain) {
      vec[index.at({gen, swapped})] += c;
    } else if (sym == Symmetry::Symmetric) {
      vec[index.at({gen, 0})] += c;
    } else {
      vec[index.at({gen, 0})] += swapped ? -c : c;
    }
  }
};

bool invertible(std::vector<std::vector<Rat>> m) {
  size_t n = m.size();
  for (auto& row : m)
    if (row.size() != n) return false;
  for (size_t col = 0, row = 0; col < n; ++col, ++row) {
    size_t piv = row;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[row]);
    for (size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col] == 0) continue;
      Rat f = m[r][col] / m[row][col];
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[row][c];
    }
  }
  return true;
}

} // namespace

Presentation changeGeneratorBasis(const Presentation& p, const BasisMap& map) {
  validate(p);
  Presentation out;
  out.name = p.name;
  out.generators = map.newGenerators;

  // carry non-binary (and unmapped) generators over by name
  std::map<int, int> carried; // old gen -> new gen
  for (size_t g = 0; g < p.generators.size(); ++g) {
    if (map.images.count(static_cast<int>(g))) continue;
    int idx = out.generatorIndex(p.generators[g].name);
    if (idx < 0) {
      out.generators.push_back(p.generators[g]);
      idx = static_cast<int>(out.generators.size()) - 1;
    }
    const auto& ng = out.generators[idx];
    if (ng.arity != p.generators[g].arity || ng.symmetry != p.generators[g].symmetry)
      throw Error(errk::SingularMap,
                  "carried generator '" + ng.name + "' changes arity or symmetry");
    carried[static_cast<int>(g)] = idx;
  }
  validate(Presentation{out.name, out.generators, {}});

  // invertibility over the binary span
  BinBasis oldB(p.generators), newB(out.generators);
  std::vector<std::vector<Rat>> mat(newB.elems.size(),
                                    std::vector<Rat>(oldB.elems.size(), Rat(0)));
  for (const auto& [oldGen, images] : map.images) {
    if (oldGen < 0 || oldGen >= static_cast<int>(p.generators.size()) ||
        p.generators[oldGen].arity != 2)
      throw Error(errk::SingularMap, "basis map must act on binary generators");
    auto emit = [&](int swappedInput, std::vector<Rat>& col) {
      for (const auto& im : images) {
        if (im.newGen < 0 || im.newGen >= static_cast<int>(out.generators.size()) ||
            out.generators[im.newGen].arity != 2)
          throw Error(errk::SingularMap, "basis map image must be a binary generator");
        newB.accumulate(col, out.generators, im.newGen, swappedInput ? 1 : 0, im.straight);
        newB.accumulate(col, out.generators, im.newGen, swappedInput ? 0 : 1, im.swapped);
      }
    };
    const auto sym = p.generators[oldGen].symmetry;
    std::vector<Rat> colStraight(newB.elems.size(), Rat(0));
    emit(0, colStraight);
    if (sym == Symmetry::Plain) {
      std::vector<Rat> colSwapped(newB.elems.size(), Rat(0));
      emit(1, colSwapped);
      int c0 = oldB.index.at({oldGen, 0}), c1 = oldB.index.at({oldGen, 1});
      for (size_t r = 0; r < newB.elems.size(); ++r) {
        mat[r][c0] = colStraight[r];
        mat[r][c1] = colSwapped[r];
      }
    } else {
      // the image must transform like the generator itself
      std::vector<Rat> colSwapped(newB.elems.size(), Rat(0));
      emit(1, colSwapped);
      for (size_t r = 0; r < newB.elems.size(); ++r) {
        Rat expect = sym == Symmetry::Symmetric ? colStraight[r] : -colStraight[r];
        if (colSwapped[r] != expect)
          throw Error(errk::SingularMap, "image of '" + p.generators[oldGen].name +
                                             "' does not respect its symmetry");
      }
      int c0 = oldB.index.at({oldGen, 0});
      for (size_t r = 0; r < newB.elems.size(); ++r) mat[r][c0] = colStraight[r];
    }
  }
  for (const auto& [oldGen, newGen] : carried) {
    if (p.generators[oldGen].arity != 2) continue;
    const auto sym = p.generators[oldGen].symmetry;
    int c0 = oldB.index.at({oldGen, 0});
    mat[newB.index.at({newGen, 0})][c0] = 1;
    if (sym == Symmetry::Plain) {
      int c1 = oldB.index.at({oldGen, 1});
      mat[newB.index.at({newGen, 1})][c1] = 1;
    }
  }
  if (oldB.elems.size() != newB.elems.size() || !invertible(mat))
    throw Error(errk::SingularMap, "generator basis map is not invertible");

  // rewrite the identities
  for (const auto& id : p.identities) {
    std::map<SymTree, Rat, SymLess> acc;
    std::function<std::vector<std::pair<Rat, SymTree>>(const SymTree&)> rewrite =
        [&](const SymTree& t) -> std::vector<std::pair<Rat, SymTree>> {
      if (t.isLeaf()) return {{Rat(1), t}};
      std::vector<std::vector<std::pair<Rat, SymTree>>> kids;
      for (const auto& c : t.children) kids.push_back(rewrite(c));
      std::vector<std::pair<Rat, std::vector<SymTree>>> tuples{{Rat(1), {}}};
      for (auto& options : kids) {
        std::vector<std::pair<Rat, std::vector<SymTree>>> next;
        for (auto& [tc, tv] : tuples)
          for (auto& [oc, ot] : options) {
            auto v = tv;
            v.push_back(ot);
            next.emplace_back(tc * oc, std::move(v));
          }
        tuples = std::move(next);
      }
      std::vector<std::pair<Rat, SymTree>> res;
      auto it = map.images.find(t.gen);
      for (auto& [tc, tv] : tuples) {
        if (it == map.images.end()) {
          res.emplace_back(tc, SymTree::node(carried.at(t.gen), tv));
        } else {
          for (const auto& im : it->second) {
            if (im.straight != 0)
              res.emplace_back(tc * im.straight, SymTree::node(im.newGen, {tv[0], tv[1]}));
            if (im.swapped != 0)
              res.emplace_back(tc * im.swapped, SymTree::node(im.newGen, {tv[1], tv[0]}));
          }
        }
      }
      return res;
    };

    for (const auto& [coeff, term] : id.terms)
      for (auto& [c, t] : rewrite(term)) {
        auto [ct, sg] = symCanonical(out, t);
        if (sg == 0) continue;
        Rat& slot = acc[ct];
        slot += coeff * c * sg;
        if (slot == 0) acc.erase(ct);
      }

    RawIdentity rid;
    rid.text = id.text + " [rewritten]";
    if (!acc.empty()) {
      std::vector<Rat> coeffs;
      for (auto& [t, c] : acc) coeffs.push_back(c);
      Rat content = contentOf(coeffs);
      for (auto& [t, c] : acc) rid.terms.emplace_back(c / content, t);
    }
    out.identities.push_back(std::move(rid));
  }
  return out;
}

BasisMap symmetrizedSplit(const Presentation& p, int gen, const std::string& symName,
                          const std::string& antiName) {
  BasisMap m;
  m.newGenerators.push_back({symName, 2, Symmetry::Symmetric});
  m.newGenerators.push_back({antiName, 2, Symmetry::Antisymmetric});
  m.images[gen] = {{0, ratOf(1, 2), Rat(0)}, {1, ratOf(1, 2), Rat(0)}};
  (void)p;
  return m;
}

std::string printSymTree(const Presentation& p, const SymTree& t,
                         const std::vector<std::string>* varNames) {
  if (t.isLeaf()) {
    if (varNames && t.leaf >= 0 && t.leaf < static_cast<int>(varNames->size()))
      return (*varNames)[t.leaf];
    return "a" + std::to_string(t.leaf);
  }
  std::string s = p.generators[t.gen].name + "(";
  for (size_t i = 0; i < t.children.size(); ++i) {
    if (i) s += ",";
    s += printSymTree(p, t.children[i], varNames);
  }
  return s + ")";
}

} // namespace opns
