#include "ludics/ops.hpp"

namespace ludics {

namespace {

// Chases negative reference chains down to a Sum or Var.
DesignPtr resolve_negative(DesignPtr d, Engine& eng) {
  while (as_ref(d)) d = unfold(d, eng);
  return d;
}

}  // namespace

DesignPtr meet(const DesignPtr& p, const DesignPtr& q, Engine& eng) {
  Polarity pp = polarity(p, eng.defs);
  Polarity pq = polarity(q, eng.defs);
  if (pp != pq) throw Error("meet of designs with different polarities");
  if (pp == Polarity::Positive) {
    auto fp = flatten_positive(p, eng);
    if (!fp) return omega();
    auto fq = flatten_positive(q, eng);
    if (!fq) return omega();
    fp->insert(fp->end(), fq->begin(), fq->end());
    return conj(std::move(*fp));
  }
  DesignPtr a = resolve_negative(p, eng);
  DesignPtr b = resolve_negative(q, eng);
  if (as_var(a) || as_var(b)) throw Error("meet of a variable");
  auto* sa = as_sum(a);
  auto* sb = as_sum(b);
  std::map<Name, SumBranch> branches;
  std::set<Name> names;
  for (auto& [n, br] : sa->branches) names.insert(n);
  for (auto& [n, br] : sb->branches) names.insert(n);
  for (auto& n : names) {
    auto ia = sa->branches.find(n);
    auto ib = sb->branches.find(n);
    if (ia == sa->branches.end() || ib == sb->branches.end()) continue;  // Omega side
    const SumBranch& bra = ia->second;
    const SumBranch& brb = ib->second;
    if (bra.binders.size() != brb.binders.size())
      throw Error("meet: arity mismatch on branch '" + n + "'");
    // Align both bound vectors on fresh variables to avoid capture.
    std::vector<Var> binders;
    std::map<Var, DesignPtr> alignA, alignB;
    for (size_t i = 0; i < bra.binders.size(); ++i) {
      Var v = eng.fresh_var();
      binders.push_back(v);
      alignA[bra.binders[i]] = var(v);
      alignB[brb.binders[i]] = var(v);
    }
    DesignPtr body = meet(substitute(bra.body, alignA, eng),
                          substitute(brb.body, alignB, eng), eng);
    if (is_omega(body)) continue;
    branches[n] = SumBranch{std::move(binders), std::move(body)};
  }
  return sum(std::move(branches));
}

DesignPtr big_meet(const std::vector<DesignPtr>& xs, Engine& eng) {
  if (xs.empty()) return daimon();
  DesignPtr acc = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) acc = meet(acc, xs[i], eng);
  return acc;
}

std::size_t design_size(const DesignPtr& d) {
  if (auto* c = as_conj(d)) {
    std::size_t n = 0;
    for (auto& s : c->conjuncts) n += design_size(s);
    return n;
  }
  if (auto* p = as_pred(d)) {
    std::size_t n = 1 + design_size(p->head);
    for (auto& a : p->args) n += design_size(a);
    return n;
  }
  if (auto* s = as_sum(d)) {
    std::size_t n = 0;
    for (auto& [name, br] : s->branches) n += 1 + design_size(br.body);
    return n;
  }
  if (as_ref(d)) return 1;
  return 0;
}

bool leq(const DesignPtr& p, const DesignPtr& q, Engine& eng) {
  if (polarity(p, eng.defs) != Polarity::Positive ||
      polarity(q, eng.defs) != Polarity::Positive)
    throw Error("leq requires positive designs");
  auto fp = flatten_positive(p, eng);
  if (!fp) return true;  // Omega is the bottom
  auto fq = flatten_positive(q, eng);
  if (!fq) return false;
  for (auto& t : *fq) {
    bool found = false;
    for (auto& s : *fp) {
      if (equiv(s, t, eng)) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace ludics
