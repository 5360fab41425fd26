#include <algorithm>

#include "ludics/ops.hpp"

namespace ludics {

namespace {

using Bindings = std::map<Var, DesignPtr>;

DesignPtr go(const DesignPtr& d, const Bindings& sigma, Engine& eng);

DesignPtr specialize(const Ref& r, const Bindings& sigma, Engine& eng) {
  const Definition df = eng.defs.at(r.def);  // copy: defs may grow below
  // Per parameter position: passthrough (unbound or renamed to a variable)
  // or bound to a non-variable negative design.
  std::vector<DesignPtr> bound(r.args.size());
  std::string fp = r.def;
  std::set<Var> extra;
  for (size_t i = 0; i < r.args.size(); ++i) {
    auto it = sigma.find(r.args[i]);
    if (it != sigma.end() && !as_var(it->second)) {
      bound[i] = it->second;
      fp += "#" + canonical_key(it->second);
      for (auto& v : free_vars(it->second, eng.defs)) extra.insert(v);
    } else {
      fp += "#=";
    }
  }
  std::vector<Var> extras(extra.begin(), extra.end());

  std::string derived;
  auto memo = eng.spec_memo.find(fp);
  if (memo != eng.spec_memo.end()) {
    derived = memo->second;
  } else {
    derived = eng.fresh_def(r.def);
    eng.spec_memo[fp] = derived;
    // Derived parameters: a fresh stand-in per passthrough position, then the
    // free variables of the substituted designs.
    std::vector<Var> params2;
    Bindings inner;
    std::vector<size_t> passthrough;
    for (size_t i = 0; i < r.args.size(); ++i) {
      if (bound[i]) {
        inner[df.params[i]] = bound[i];
      } else {
        Var q = eng.fresh_var();
        params2.push_back(q);
        passthrough.push_back(i);
        inner[df.params[i]] = var(q);
      }
    }
    params2.insert(params2.end(), extras.begin(), extras.end());
    eng.defs.add(derived, Definition{params2, omega()});
    eng.defs.set_body(derived, go(df.body, inner, eng));
  }

  std::vector<Var> call_args;
  for (size_t i = 0; i < r.args.size(); ++i) {
    if (bound[i]) continue;
    auto it = sigma.find(r.args[i]);
    call_args.push_back(it != sigma.end() ? as_var(it->second)->var : r.args[i]);
  }
  call_args.insert(call_args.end(), extras.begin(), extras.end());
  return ref(derived, std::move(call_args));
}

DesignPtr go(const DesignPtr& d, const Bindings& sigma, Engine& eng) {
  if (sigma.empty()) return d;
  if (auto* v = as_var(d)) {
    auto it = sigma.find(v->var);
    return it != sigma.end() ? it->second : d;
  }
  if (is_omega(d) || is_hole(d)) return d;
  if (auto* c = as_conj(d)) {
    std::vector<DesignPtr> parts;
    parts.reserve(c->conjuncts.size());
    for (auto& s : c->conjuncts) parts.push_back(go(s, sigma, eng));
    return conj(std::move(parts));
  }
  if (auto* p = as_pred(d)) {
    std::vector<DesignPtr> args;
    args.reserve(p->args.size());
    for (auto& a : p->args) args.push_back(go(a, sigma, eng));
    return pred(go(p->head, sigma, eng), p->action, std::move(args));
  }
  if (auto* s = as_sum(d)) {
    std::map<Name, SumBranch> branches;
    for (auto& [name, br] : s->branches) {
      Bindings local = sigma;
      for (auto& b : br.binders) local.erase(b);
      if (local.empty()) {
        branches[name] = br;
        continue;
      }
      // Capture avoidance: rename binders that occur free in any image.
      std::set<Var> imagefv;
      for (auto& [from, to] : local)
        for (auto& fv : free_vars(to, eng.defs)) imagefv.insert(fv);
      std::vector<Var> binders = br.binders;
      Bindings renaming;
      for (auto& b : binders) {
        if (imagefv.count(b)) {
          Var nb = eng.fresh_var();
          renaming[b] = var(nb);
          b = nb;
        }
      }
      DesignPtr body = br.body;
      if (!renaming.empty()) body = go(body, renaming, eng);
      branches[name] = SumBranch{std::move(binders), go(body, local, eng)};
    }
    return sum(std::move(branches));
  }
  auto* r = as_ref(d);
  bool touched = false;
  bool all_vars = true;
  for (auto& a : r->args) {
    auto it = sigma.find(a);
    if (it != sigma.end()) {
      touched = true;
      if (!as_var(it->second)) all_vars = false;
    }
  }
  if (!touched) return d;
  if (all_vars) {
    std::vector<Var> args;
    for (auto& a : r->args) {
      auto it = sigma.find(a);
      args.push_back(it != sigma.end() ? as_var(it->second)->var : a);
    }
    return ref(r->def, std::move(args));
  }
  return specialize(*r, sigma, eng);
}

}  // namespace

DesignPtr substitute(const DesignPtr& d, const std::map<Var, DesignPtr>& bindings,
                     Engine& eng) {
  for (auto& [v, img] : bindings) {
    if (!is_negative(img, eng.defs))
      throw Error("cannot bind variable '" + v + "' to a positive design");
  }
  return go(d, bindings, eng);
}

DesignPtr unfold(const DesignPtr& refNode, Engine& eng) {
  auto* r = as_ref(refNode);
  if (!r) throw Error("unfold requires a reference node");
  const Definition& df = eng.defs.at(r->def);
  if (df.params.size() != r->args.size())
    throw Error("reference '" + r->def + "' expects " +
                std::to_string(df.params.size()) + " arguments");
  std::map<Var, DesignPtr> bindings;
  for (size_t i = 0; i < df.params.size(); ++i)
    if (df.params[i] != r->args[i]) bindings[df.params[i]] = var(r->args[i]);
  return substitute(df.body, bindings, eng);
}

}  // namespace ludics
