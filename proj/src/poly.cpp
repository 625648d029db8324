#include "opns/poly.hpp"

#include <cassert>
#include <sstream>

#include "opns/errors.hpp"

namespace opns {

void Poly::add(const TreeMonomial& m, const Rat& c) {
  if (c == 0) return;
  if (terms_.empty() && arity_ == 0) arity_ = m.arity();
  assert(m.arity() == arity_);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

void Poly::makePrimitive() {
  if (terms_.empty()) return;
  std::vector<Rat> cs;
  cs.reserve(terms_.size());
  for (auto& [m, c] : terms_) cs.push_back(c);
  Rat content = contentOf(cs);
  for (auto& [m, c] : terms_) c /= content;
}

void Poly::makeMonicFirst() {
  if (terms_.empty()) return;
  Rat lead = terms_.begin()->second;
  for (auto& [m, c] : terms_) c /= lead;
}

void Poly::makeMonic(const OrderingSpec& ord) {
  if (terms_.empty()) return;
  Rat lc = leadingTerm(*this, ord).second;
  for (auto& [m, c] : terms_) c /= lc;
}

std::pair<TreeMonomial, Rat> leadingTerm(const Poly& p, const OrderingSpec& ord) {
  if (p.isZero()) throw Error(errk::ZeroPolynomial, "zero polynomial has no leading term");
  const TreeMonomial* best = nullptr;
  const Rat* coeff = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || compare(ord, m, *best) > 0) {
      best = &m;
      coeff = &c;
    }
  }
  return {*best, *coeff};
}

Poly insertAt(const ShuffleSignature& sig, const TreeMonomial& host, const Occurrence& occ,
              const TreeMonomial& pattern, const Poly& g) {
  Poly out(host.arity());
  for (const auto& [m, c] : g.terms()) {
    auto [replaced, sign] = replaceAt(sig, host, occ, pattern, m);
    out.add(replaced, sign > 0 ? c : -c);
  }
  return out;
}

Poly reduce(const ShuffleSignature& sig, Poly p, const std::vector<Poly>& G,
            const OrderingSpec& ord, std::vector<ReduceStep>* trace) {
  struct Hit {
    int element;
    Occurrence occ;
    const TreeMonomial* lt;
  };
  std::vector<std::pair<TreeMonomial, Rat>> lts;
  lts.reserve(G.size());
  for (const auto& g : G) lts.push_back(leadingTerm(g, ord));

  while (true) {
    // largest reducible monomial of p
    const TreeMonomial* target = nullptr;
    Rat coeff;
    std::optional<Hit> hit;
    for (const auto& [m, c] : p.terms()) {
      if (target && compare(ord, m, *target) < 0) continue;
      std::optional<Hit> h;
      for (size_t i = 0; i < G.size() && !h; ++i) {
        if (lts[i].first.arity() > m.arity()) continue;
        auto occs = divisors(sig, m, lts[i].first);
        if (!occs.empty()) h = Hit{static_cast<int>(i), occs.front(), &lts[i].first};
      }
      if (h) {
        target = &m;
        coeff = c;
        hit = h;
      }
    }
    if (!hit) break;
    Rat factor = coeff / lts[hit->element].second;
    TreeMonomial mon = *target;
    Poly sub = insertAt(sig, mon, hit->occ, *hit->lt, G[hit->element]);
    sub *= factor;
    p -= sub;
    if (trace) trace->push_back({hit->element, mon, hit->occ, factor});
  }
  return p;
}

std::vector<Poly> interreduce(const ShuffleSignature& sig, std::vector<Poly> G,
                              const OrderingSpec& ord) {
  std::vector<Poly> work;
  for (auto& g : G)
    if (!g.isZero()) work.push_back(std::move(g));
  for (auto& g : work) g.makeMonic(ord);

  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < work.size(); ++i) {
      std::vector<Poly> others;
      others.reserve(work.size() - 1);
      for (size_t j = 0; j < work.size(); ++j)
        if (j != i) others.push_back(work[j]);
      Poly r = reduce(sig, work[i], others, ord);
      if (!(r == work[i])) {
        changed = true;
        if (r.isZero()) {
          work.erase(work.begin() + i);
        } else {
          r.makeMonic(ord);
          work[i] = std::move(r);
        }
        break;
      }
    }
  }

  std::sort(work.begin(), work.end(), [&](const Poly& a, const Poly& b) {
    if (a.arity() != b.arity()) return a.arity() < b.arity();
    return compare(ord, leadingTerm(a, ord).first, leadingTerm(b, ord).first) < 0;
  });
  return work;
}

std::string printPoly(const ShuffleSignature& sig, const Poly& p) {
  if (p.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
      first = false;
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    if (a != 1) os << ratToString(a) << " ";
    os << printMonomial(sig, m);
  }
  return os.str();
}

} // namespace opns
