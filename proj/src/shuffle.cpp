#include "opns/shuffle.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <set>

#include "opns/errors.hpp"
#include "opns/util.hpp"

namespace opns {

namespace {

std::string variantName(const GeneratorSpec& g, long long rank, int k) {
  if (rank == 0) return g.name;
  auto sigma = permUnrank(k, rank);
  std::string s = g.name + "[";
  for (int v : sigma) s += std::to_string(v + 1);
  return s + "]";
}

} // namespace

ShuffleSignature::ShuffleSignature(const Presentation& p) : pres_(p) {
  validate(pres_);
  for (size_t g = 0; g < p.generators.size(); ++g) {
    const auto& spec = p.generators[g];
    long long variants =
        spec.symmetry == Symmetry::Plain ? factorial(spec.arity) : 1;
    for (long long r = 0; r < variants; ++r) {
      ShuffleGenerator sg;
      sg.base = static_cast<int>(g);
      sg.arity = spec.arity;
      sg.variant = static_cast<int>(r);
      sg.antisym = spec.symmetry == Symmetry::Antisymmetric;
      sg.name = variantName(spec, r, spec.arity);
      int id = static_cast<int>(gens_.size());
      gens_.push_back(sg);
      byBaseVariant_[{sg.base, r}] = id;
      byName_[sg.name] = id;
    }
  }
}

int ShuffleSignature::variantId(int base, long long permRank) const {
  return byBaseVariant_.at({base, permRank});
}

int ShuffleSignature::findByName(const std::string& n) const {
  auto it = byName_.find(n);
  return it == byName_.end() ? -1 : it->second;
}

int ShuffleSignature::maxGeneratorArity() const {
  int m = 2;
  for (const auto& g : gens_) m = std::max(m, g.arity);
  return m;
}

int TreeMonomial::arity() const {
  if (isLeaf()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.arity();
  return n;
}

int TreeMonomial::degree() const {
  if (isLeaf()) return 0;
  int d = 1;
  for (const auto& c : children) d += c.degree();
  return d;
}

int TreeMonomial::minLeaf() const {
  if (isLeaf()) return leaf;
  // first child holds the minimum once canonical, but stay robust on raw terms
  int m = children.front().minLeaf();
  for (size_t i = 1; i < children.size(); ++i) m = std::min(m, children[i].minLeaf());
  return m;
}

TreeMonomial TreeMonomial::leafNode(int label) {
  TreeMonomial t;
  t.leaf = label;
  return t;
}

TreeMonomial TreeMonomial::node(int gen, std::vector<TreeMonomial> ch) {
  TreeMonomial t;
  t.gen = gen;
  t.children = std::move(ch);
  return t;
}

int treeCompare(const TreeMonomial& a, const TreeMonomial& b) {
  int aa = a.arity(), ba = b.arity();
  if (aa != ba) return aa < ba ? -1 : 1;
  if (a.isLeaf() != b.isLeaf()) return a.isLeaf() ? -1 : 1;
  if (a.isLeaf()) return a.leaf == b.leaf ? 0 : (a.leaf < b.leaf ? -1 : 1);
  if (a.gen != b.gen) return a.gen < b.gen ? -1 : 1;
  for (size_t i = 0; i < a.children.size(); ++i)
    if (int c = treeCompare(a.children[i], b.children[i])) return c;
  return 0;
}

bool operator==(const TreeMonomial& a, const TreeMonomial& b) { return treeCompare(a, b) == 0; }

namespace {

void collectLeaves(const TreeMonomial& t, std::vector<int>& out) {
  if (t.isLeaf()) {
    out.push_back(t.leaf);
    return;
  }
  for (const auto& c : t.children) collectLeaves(c, out);
}

std::pair<TreeMonomial, int> canonicalRec(const ShuffleSignature& sig, const TreeMonomial& t) {
  if (t.isLeaf()) return {t, 1};
  int sign = 1;
  std::vector<TreeMonomial> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) {
    auto [cc, cs] = canonicalRec(sig, c);
    sign *= cs;
    kids.push_back(std::move(cc));
  }
  const auto& g = sig.gens()[t.gen];
  int k = g.arity;
  std::vector<int> tau(k); // kids[tau[j]] is the j-th smallest by min leaf
  std::iota(tau.begin(), tau.end(), 0);
  std::sort(tau.begin(), tau.end(),
            [&](int i, int j) { return kids[i].minLeaf() < kids[j].minLeaf(); });
  bool sorted = std::is_sorted(tau.begin(), tau.end());

  std::vector<TreeMonomial> sortedKids;
  sortedKids.reserve(k);
  for (int j = 0; j < k; ++j) sortedKids.push_back(std::move(kids[tau[j]]));

  int vid = t.gen;
  if (!sorted) {
    const auto& spec = sig.presentation().generators[g.base];
    if (spec.symmetry == Symmetry::Plain) {
      // f_sigma(u_1..u_k) = f_(tau^{-1} o sigma)(u_{tau(1)}..u_{tau(k)})
      auto sigma = permUnrank(k, g.variant);
      auto mu = permCompose(permInverse(tau), sigma);
      vid = sig.variantId(g.base, permRank(mu));
    } else if (spec.symmetry == Symmetry::Antisymmetric) {
      sign *= permSign(tau);
    }
  }
  return {TreeMonomial::node(vid, std::move(sortedKids)), sign};
}

} // namespace

std::pair<TreeMonomial, int> canonical(const ShuffleSignature& sig, const TreeMonomial& raw) {
  std::vector<int> labels;
  collectLeaves(raw, labels);
  std::set<int> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size())
    throw Error(errk::DuplicateLeafLabel, "raw term repeats a leaf label");
  return canonicalRec(sig, raw);
}

std::vector<std::vector<int>> shuffleAssignments(int outerArity, int at, int innerArity) {
  int n = outerArity + innerArity - 1;
  std::vector<std::vector<int>> out;
  for (auto& s : subsets(n, innerArity)) {
    std::vector<int> labels(s.size());
    for (size_t i = 0; i < s.size(); ++i) labels[i] = s[i] + 1;
    int below = labels.front() - 1; // complement elements below min(S)
    if (below == at - 1) out.push_back(std::move(labels));
  }
  return out;
}

namespace {

TreeMonomial relabel(const TreeMonomial& t, const std::vector<int>& labelOf) {
  if (t.isLeaf()) return TreeMonomial::leafNode(labelOf[t.leaf - 1]);
  std::vector<TreeMonomial> kids;
  kids.reserve(t.children.size());
  for (const auto& c : t.children) kids.push_back(relabel(c, labelOf));
  return TreeMonomial::node(t.gen, std::move(kids));
}

} // namespace

TreeMonomial graft(const ShuffleSignature& sig, const TreeMonomial& outer, int at,
                   const TreeMonomial& inner, const std::vector<int>& innerLabels) {
  (void)sig;
  int m = outer.arity(), l = inner.arity(), n = m + l - 1;
  if (at < 1 || at > m) throw Error(errk::InvalidShuffle, "graft slot out of range");
  if (static_cast<int>(innerLabels.size()) != l)
    throw Error(errk::InvalidShuffle, "inner block size does not match inner arity");
  std::vector<bool> used(n + 1, false);
  for (int v : innerLabels) {
    if (v < 1 || v > n || used[v]) throw Error(errk::InvalidShuffle, "bad inner block");
    used[v] = true;
  }
  std::vector<int> sortedBlock = innerLabels;
  std::sort(sortedBlock.begin(), sortedBlock.end());
  int below = 0;
  for (int v = 1; v < sortedBlock.front(); ++v)
    if (!used[v]) ++below;
  if (below != at - 1)
    throw Error(errk::InvalidShuffle, "block minimum incompatible with the graft slot");

  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (!used[v]) rest.push_back(v);
  // slot j of outer receives rest[j-1] for j < at and rest[j-2] for j > at
  std::vector<int> slotLabel(m + 1, 0);
  for (int j = 1; j <= m; ++j) {
    if (j < at)
      slotLabel[j] = rest[j - 1];
    else if (j > at)
      slotLabel[j] = rest[j - 2];
  }

  TreeMonomial innerRelabeled = relabel(inner, sortedBlock);

  std::function<TreeMonomial(const TreeMonomial&)> build =
      [&](const TreeMonomial& t) -> TreeMonomial {
    if (t.isLeaf()) {
      if (t.leaf == at) return innerRelabeled;
      return TreeMonomial::leafNode(slotLabel[t.leaf]);
    }
    std::vector<TreeMonomial> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) kids.push_back(build(c));
    return TreeMonomial::node(t.gen, std::move(kids));
  };
  return build(outer);
}

namespace {

struct MatchState {
  std::vector<int> image;                    // host preorder indices, pattern preorder
  std::vector<std::pair<int, int>> blocks;   // (pattern leaf label, block min)
};

// preorder index bookkeeping for host internal vertices
int indexOf(const TreeMonomial& host, const TreeMonomial* target) {
  int idx = 0;
  int found = -1;
  std::function<void(const TreeMonomial&)> walk = [&](const TreeMonomial& t) {
    if (t.isLeaf()) return;
    if (&t == target) found = idx;
    ++idx;
    for (const auto& c : t.children) walk(c);
  };
  walk(host);
  assert(found >= 0);
  return found;
}

bool matchAt(const TreeMonomial& hostVertex, int hostIdx, const TreeMonomial& pattern,
             const TreeMonomial& host, MatchState& st) {
  if (hostVertex.gen != pattern.gen) return false;
  st.image.push_back(hostIdx);
  for (size_t j = 0; j < pattern.children.size(); ++j) {
    const auto& pc = pattern.children[j];
    const auto& hc = hostVertex.children[j];
    if (pc.isLeaf()) {
      st.blocks.emplace_back(pc.leaf, hc.minLeaf());
    } else {
      if (hc.isLeaf()) return false;
      if (!matchAt(hc, indexOf(host, &hc), pc, host, st)) return false;
    }
  }
  return true;
}

bool ranksAgree(std::vector<std::pair<int, int>> blocks) {
  std::vector<int> mins;
  mins.reserve(blocks.size());
  for (auto& [lbl, mn] : blocks) mins.push_back(mn);
  std::sort(mins.begin(), mins.end());
  for (auto& [lbl, mn] : blocks) {
    int rank = static_cast<int>(std::lower_bound(mins.begin(), mins.end(), mn) - mins.begin()) + 1;
    if (rank != lbl) return false;
  }
  return true;
}

void internalVertices(const TreeMonomial& t, std::vector<const TreeMonomial*>& out) {
  if (t.isLeaf()) return;
  out.push_back(&t);
  for (const auto& c : t.children) internalVertices(c, out);
}

} // namespace

std::vector<Occurrence> divisors(const ShuffleSignature& sig, const TreeMonomial& host,
                                 const TreeMonomial& pattern) {
  (void)sig;
  if (pattern.isLeaf())
    throw Error(errk::UnitPattern, "the unit tree is not a valid divisor pattern");
  std::vector<Occurrence> out;
  std::vector<const TreeMonomial*> verts;
  internalVertices(host, verts);
  for (size_t r = 0; r < verts.size(); ++r) {
    MatchState st;
    if (!matchAt(*verts[r], static_cast<int>(r), pattern, host, st)) continue;
    if (!ranksAgree(st.blocks)) continue;
    out.push_back(Occurrence{st.image});
  }
  // root preorder index ascending == lexicographic on sorted vertex-image sets
  return out;
}

std::pair<TreeMonomial, int> replaceAt(const ShuffleSignature& sig, const TreeMonomial& host,
                                       const Occurrence& occ, const TreeMonomial& pattern,
                                       const TreeMonomial& substitute) {
  if (pattern.arity() != substitute.arity())
    throw Error(errk::ArityMismatch, "substitute arity differs from pattern arity");
  std::vector<const TreeMonomial*> verts;
  internalVertices(host, verts);
  assert(!occ.vertexImage.empty());
  const TreeMonomial* rootVertex = verts[occ.vertexImage.front()];

  // collect the blocks hanging below the occurrence, in pattern-leaf order
  MatchState st;
  bool ok = matchAt(*rootVertex, occ.vertexImage.front(), pattern, host, st);
  if (!ok || st.image != occ.vertexImage || !ranksAgree(st.blocks))
    throw Error(errk::PatternMismatch, "occurrence does not match the pattern");

  // pattern leaf label -> host subtree
  std::vector<const TreeMonomial*> blockOf(pattern.arity() + 1, nullptr);
  {
    std::function<void(const TreeMonomial&, const TreeMonomial&)> walk =
        [&](const TreeMonomial& hv, const TreeMonomial& pv) {
      for (size_t j = 0; j < pv.children.size(); ++j) {
        const auto& pc = pv.children[j];
        const auto& hc = hv.children[j];
        if (pc.isLeaf()) {
          blockOf[pc.leaf] = &hc;
        } else {
          walk(hc, pc);
        }
      }
    };
    walk(*rootVertex, pattern);
  }

  std::function<TreeMonomial(const TreeMonomial&)> fill =
      [&](const TreeMonomial& s) -> TreeMonomial {
    if (s.isLeaf()) return *blockOf[s.leaf];
    std::vector<TreeMonomial> kids;
    kids.reserve(s.children.size());
    for (const auto& c : s.children) kids.push_back(fill(c));
    return TreeMonomial::node(s.gen, std::move(kids));
  };
  TreeMonomial replacement = fill(substitute);

  std::function<TreeMonomial(const TreeMonomial&)> rebuild =
      [&](const TreeMonomial& t) -> TreeMonomial {
    if (&t == rootVertex) return replacement;
    if (t.isLeaf()) return t;
    std::vector<TreeMonomial> kids;
    kids.reserve(t.children.size());
    for (const auto& c : t.children) kids.push_back(rebuild(c));
    return TreeMonomial::node(t.gen, std::move(kids));
  };
  TreeMonomial result = rebuild(host);
  auto [can, sign] = canonical(sig, result);
  assert(can == result && sign == 1); // block structure is preserved
  return {std::move(can), sign};
}

int maxOverlapArity(const TreeMonomial& m1, const TreeMonomial& m2) {
  return m1.arity() + m2.arity() - 2;
}

namespace {

bool imagesIntersect(const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (x == y) return true;
  return false;
}

bool imagesCover(const std::vector<int>& a, const std::vector<int>& b, int total) {
  std::vector<bool> seen(total, false);
  for (int x : a) seen[x] = true;
  for (int y : b) seen[y] = true;
  for (bool s : seen)
    if (!s) return false;
  return true;
}

} // namespace

std::vector<OverlapSite> overlaps(const ShuffleSignature& sig, const TreeMonomial& m1,
                                  const TreeMonomial& m2, int arityBound) {
  std::vector<OverlapSite> out;
  MonomialEnumerator en(sig);
  int lo = std::max(m1.arity(), m2.arity());
  int hi = std::min(arityBound, maxOverlapArity(m1, m2));
  for (int n = lo; n <= hi; ++n) {
    for (const auto& ambient : en.arity(n)) {
      auto occ1 = divisors(sig, ambient, m1);
      if (occ1.empty()) continue;
      auto occ2 = divisors(sig, ambient, m2);
      if (occ2.empty()) continue;
      int total = ambient.degree();
      bool samePattern = m1 == m2;
      for (const auto& o1 : occ1)
        for (const auto& o2 : occ2) {
          if (samePattern && o1.vertexImage == o2.vertexImage) continue;
          if (!imagesIntersect(o1.vertexImage, o2.vertexImage)) continue;
          if (!imagesCover(o1.vertexImage, o2.vertexImage, total)) continue;
          out.push_back(OverlapSite{ambient, o1, o2});
        }
    }
  }
  return out;
}

bool isLeftComb(const TreeMonomial& m) {
  if (m.isLeaf()) return true;
  for (size_t j = 1; j < m.children.size(); ++j)
    if (!m.children[j].isLeaf()) return false;
  return isLeftComb(m.children.front());
}

bool minLeafAtRoot(const TreeMonomial& m) {
  if (m.isLeaf()) return true;
  return m.children.front().isLeaf();
}

bool secondMinSiblingOfMin(const TreeMonomial& m) {
  if (m.isLeaf() || m.arity() < 2) return true;
  std::vector<int> labels;
  collectLeaves(m, labels);
  std::sort(labels.begin(), labels.end());
  int second = labels[1];
  // the parent of the minimal leaf is the bottom of the first-child chain
  const TreeMonomial* v = &m;
  while (!v->children.front().isLeaf()) v = &v->children.front();
  for (const auto& c : v->children)
    if (c.isLeaf() && c.leaf == second) return true;
  return false;
}

PathSequence pathSequence(const TreeMonomial& m) {
  PathSequence out;
  int n = m.arity();
  out.words.assign(n, {});
  std::vector<int> word;
  std::function<void(const TreeMonomial&)> walk = [&](const TreeMonomial& t) {
    if (t.isLeaf()) {
      out.permutation.push_back(t.leaf);
      out.words[t.leaf - 1] = word;
      return;
    }
    word.push_back(t.gen);
    for (const auto& c : t.children) walk(c);
    word.pop_back();
  };
  walk(m);
  return out;
}

const std::vector<TreeMonomial>& MonomialEnumerator::arity(int n) {
  auto it = cache_.find(n);
  if (it != cache_.end()) return it->second;

  std::vector<TreeMonomial> out;
  if (n == 1) {
    out.push_back(TreeMonomial::leafNode(1));
  } else {
    // root generator, then ordered partitions of {1..n} with increasing minima
    for (size_t vid = 0; vid < sig_->gens().size(); ++vid) {
      int k = sig_->gens()[vid].arity;
      if (k > n) continue;
      std::vector<std::vector<int>> blocks(k);
      std::function<void(int)> place = [&](int label) {
        if (label > n) {
          for (auto& b : blocks)
            if (b.empty()) return;
          std::vector<std::vector<TreeMonomial>> parts(k);
          for (int j = 0; j < k; ++j) {
            for (const auto& sub : arity(static_cast<int>(blocks[j].size())))
              parts[j].push_back(relabel(sub, blocks[j]));
          }
          std::vector<int> pick(k, 0);
          std::function<void(int)> emit = [&](int j) {
            if (j == k) {
              std::vector<TreeMonomial> kids;
              kids.reserve(k);
              for (int i = 0; i < k; ++i) kids.push_back(parts[i][pick[i]]);
              out.push_back(TreeMonomial::node(static_cast<int>(vid), std::move(kids)));
              return;
            }
            for (pick[j] = 0; pick[j] < static_cast<int>(parts[j].size()); ++pick[j]) emit(j + 1);
          };
          emit(0);
          return;
        }
        // labels are placed in increasing order, so a block's first label is
        // its minimum; blocks must open left to right (label 1 opens block 0)
        for (int j = 0; j < k; ++j) {
          if (blocks[j].empty()) {
            if (j > 0 && blocks[j - 1].empty()) break;
            blocks[j].push_back(label);
            place(label + 1);
            blocks[j].pop_back();
            break; // opening any later block would leave an earlier one with a larger min
          }
          blocks[j].push_back(label);
          place(label + 1);
          blocks[j].pop_back();
        }
      };
      place(1);
    }
    std::sort(out.begin(), out.end(), TreeLess{});
  }
  auto [pos, inserted] = cache_.emplace(n, std::move(out));
  assert(inserted);
  return pos->second;
}

std::string printMonomial(const ShuffleSignature& sig, const TreeMonomial& m) {
  if (m.isLeaf()) return std::to_string(m.leaf);
  std::string s = sig.name(m.gen) + "(";
  for (size_t i = 0; i < m.children.size(); ++i) {
    if (i) s += ",";
    s += printMonomial(sig, m.children[i]);
  }
  return s + ")";
}

namespace {

struct MonomialParser {
  const ShuffleSignature& sig;
  const std::string& text;
  size_t pos = 0;

  void skipWs() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  TreeMonomial parse() {
    skipWs();
    if (pos >= text.size()) throw Error(errk::SyntaxError, "empty monomial");
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      return TreeMonomial::leafNode(v);
    }
    size_t start = pos;
    int brackets = 0;
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '[') ++brackets;
      if (c == ']') --brackets;
      if (brackets == 0 && (c == '(' || c == ',' || c == ')' ||
                            std::isspace(static_cast<unsigned char>(c))))
        break;
      ++pos;
    }
    std::string name = text.substr(start, pos - start);
    int vid = sig.findByName(name);
    if (vid < 0) throw Error(errk::UndeclaredGenerator, "unknown generator '" + name + "'");
    skipWs();
    if (pos >= text.size() || text[pos] != '(')
      throw Error(errk::SyntaxError, "expected '(' after '" + name + "'");
    ++pos;
    std::vector<TreeMonomial> kids;
    while (true) {
      kids.push_back(parse());
      skipWs();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw Error(errk::SyntaxError, "expected ',' or ')' in monomial");
    }
    if (static_cast<int>(kids.size()) != sig.arity(vid))
      throw Error(errk::BadArity, "'" + name + "' applied to " + std::to_string(kids.size()) +
                                      " arguments");
    return TreeMonomial::node(vid, std::move(kids));
  }
};

} // namespace

TreeMonomial parseMonomial(const ShuffleSignature& sig, const std::string& text) {
  MonomialParser p{sig, text};
  TreeMonomial m = p.parse();
  p.skipWs();
  if (p.pos != text.size()) throw Error(errk::SyntaxError, "trailing input after monomial");
  std::vector<int> labels;
  collectLeaves(m, labels);
  std::sort(labels.begin(), labels.end());
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] != static_cast<int>(i) + 1)
      throw Error(errk::SyntaxError, "monomial leaves must be 1..n exactly once");
  auto [can, sign] = canonical(sig, m);
  if (!(can == m) || sign != 1)
    throw Error(errk::SyntaxError, "monomial violates the local increasing condition");
  return m;
}

} // namespace opns
