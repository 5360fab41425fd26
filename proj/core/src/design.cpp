#include "ludics/design.hpp"

#include <algorithm>
#include <functional>

namespace ludics {

bool is_variable_token(const std::string& s) {
  if (s.empty()) return false;
  char c = s[0];
  if (c < 't' || c > 'z') return false;
  for (size_t i = 1; i < s.size(); ++i) {
    char k = s[i];
    if (!(k >= '0' && k <= '9') && k != '\'' && k != '_') return false;
  }
  return true;
}

Name pi1_name(const Name& a) { return "pi1(" + a + ")"; }
Name pi2_name(const Name& a) { return "pi2(" + a + ")"; }
Name wp_name(const Name& a, const Name& b) { return "wp(" + a + "," + b + ")"; }

void Signature::declare(const Name& name, int arity) {
  auto it = atoms_.find(name);
  if (it != atoms_.end()) {
    if (it->second != arity)
      throw Error("conflicting arity for name '" + name + "': " +
                  std::to_string(it->second) + " vs " + std::to_string(arity));
    return;
  }
  atoms_[name] = arity;
}

namespace {

// Splits a derived-name spelling op(inner...) at the top level.
std::optional<std::pair<std::string, std::vector<std::string>>> split_derived(
    const Name& name) {
  auto open = name.find('(');
  if (open == std::string::npos || name.back() != ')') return std::nullopt;
  std::string op = name.substr(0, open);
  if (op != "pi1" && op != "pi2" && op != "wp") return std::nullopt;
  std::string inner = name.substr(open + 1, name.size() - open - 2);
  std::vector<std::string> parts;
  int depth = 0;
  std::string cur;
  for (char c : inner) {
    if (c == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    if (c == '(') ++depth;
    if (c == ')') --depth;
    cur.push_back(c);
  }
  parts.push_back(cur);
  return std::make_pair(op, parts);
}

}  // namespace

std::optional<int> Signature::arity(const Name& name) const {
  auto it = atoms_.find(name);
  if (it != atoms_.end()) return it->second;
  auto split = split_derived(name);
  if (!split) return std::nullopt;
  auto& [op, parts] = *split;
  if (op == "wp") {
    if (parts.size() != 2) return std::nullopt;
    auto a = arity(parts[0]);
    auto b = arity(parts[1]);
    if (!a || !b) return std::nullopt;
    return *a + *b;
  }
  if (parts.size() != 1) return std::nullopt;
  return arity(parts[0]);
}

// ---------------------------------------------------------------------------
// Node constructors and canonical keys.

namespace {

DesignPtr make(Design d) { return std::make_shared<const Design>(std::move(d)); }

// Environment-aware canonical key: binders are numbered in traversal order,
// environment-free variables keep their names.
void key_of(const DesignPtr& d, std::map<Var, std::string>& env, int next,
            std::string& out) {
  struct Visitor {
    std::map<Var, std::string>& env;
    int next;
    std::string& out;

    void operator()(const Omega&) { out += 'W'; }
    void operator()(const Hole&) { out += 'H'; }
    void operator()(const Conj& c) {
      std::vector<std::string> keys;
      keys.reserve(c.conjuncts.size());
      for (auto& s : c.conjuncts) {
        std::string k;
        key_of(s, env, next, k);
        keys.push_back(std::move(k));
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      out += "C(";
      for (auto& k : keys) {
        out += k;
        out += ',';
      }
      out += ')';
    }
    void operator()(const Pred& p) {
      out += "P(";
      key_of(p.head, env, next, out);
      out += '!';
      out += p.action;
      for (auto& a : p.args) {
        out += ';';
        key_of(a, env, next, out);
      }
      out += ')';
    }
    void operator()(const VarRef& v) {
      auto it = env.find(v.var);
      if (it != env.end())
        out += it->second;
      else
        out += "f!" + v.var;
    }
    void operator()(const Sum& s) {
      out += "S(";
      for (auto& [name, br] : s.branches) {
        out += name;
        out += ':';
        std::map<Var, std::string> env2 = env;
        int n2 = next;
        for (auto& b : br.binders) env2[b] = "b" + std::to_string(n2++);
        key_of(br.body, env2, n2, out);
        out += ';';
      }
      out += ')';
    }
    void operator()(const Ref& r) {
      out += "R(";
      out += r.def;
      for (auto& a : r.args) {
        out += ';';
        auto it = env.find(a);
        out += it != env.end() ? it->second : "f!" + a;
      }
      out += ')';
    }
  };
  std::visit(Visitor{env, next, out}, d->node);
}

}  // namespace

const std::string& canonical_key(const DesignPtr& d) {
  if (d->key_cache.empty()) {
    std::map<Var, std::string> env;
    std::string out;
    key_of(d, env, 0, out);
    d->key_cache = std::move(out);
  }
  return d->key_cache;
}

DesignPtr omega() {
  static const DesignPtr d = make(Design{Omega{}, ""});
  return d;
}

DesignPtr daimon() {
  static const DesignPtr d = make(Design{Conj{{}}, ""});
  return d;
}

DesignPtr conj(std::vector<DesignPtr> parts) {
  std::sort(parts.begin(), parts.end(), [](const DesignPtr& a, const DesignPtr& b) {
    return canonical_key(a) < canonical_key(b);
  });
  parts.erase(std::unique(parts.begin(), parts.end(),
                          [](const DesignPtr& a, const DesignPtr& b) {
                            return canonical_key(a) == canonical_key(b);
                          }),
              parts.end());
  return make(Design{Conj{std::move(parts)}, ""});
}

DesignPtr pred(DesignPtr head, Name action, std::vector<DesignPtr> args) {
  return make(Design{Pred{std::move(head), std::move(action), std::move(args)}, ""});
}

DesignPtr pred1(DesignPtr head, Name action, std::vector<DesignPtr> args) {
  return conj({pred(std::move(head), std::move(action), std::move(args))});
}

DesignPtr var(Var v) { return make(Design{VarRef{std::move(v)}, ""}); }

DesignPtr sum(std::map<Name, SumBranch> branches) {
  return make(Design{Sum{std::move(branches)}, ""});
}

DesignPtr ref(std::string def, std::vector<Var> args) {
  return make(Design{Ref{std::move(def), std::move(args)}, ""});
}

DesignPtr hole() {
  static const DesignPtr d = make(Design{Hole{}, ""});
  return d;
}

// ---------------------------------------------------------------------------
// Definition systems.

void DefSystem::add(const std::string& name, Definition def) {
  if (defs_.count(name)) throw Error("duplicate definition '" + name + "'");
  defs_[name] = std::move(def);
}

void DefSystem::set_body(const std::string& name, DesignPtr body) {
  auto it = defs_.find(name);
  if (it == defs_.end()) throw Error("unbound definition reference '" + name + "'");
  it->second.body = std::move(body);
}

const Definition* DefSystem::find(const std::string& name) const {
  auto it = defs_.find(name);
  return it == defs_.end() ? nullptr : &it->second;
}

const Definition& DefSystem::at(const std::string& name) const {
  auto* d = find(name);
  if (!d) throw Error("unbound definition reference '" + name + "'");
  return *d;
}

Polarity polarity(const DesignPtr& d, const DefSystem& defs) {
  const DesignPtr* cur = &d;
  std::set<std::string> seen;
  while (auto* r = as_ref(*cur)) {
    if (!seen.insert(r->def).second)
      throw Error("unguarded reference cycle through '" + r->def + "'");
    cur = &defs.at(r->def).body;
  }
  if (as_var(*cur) || as_sum(*cur)) return Polarity::Negative;
  if (as_pred(*cur))
    throw Error("bare predesign outside a conjunction");
  return Polarity::Positive;
}

Var Engine::fresh_var() {
  return std::string(1, kFreshPrefix) + std::to_string(++counter_);
}

std::string Engine::fresh_def(const std::string& base) {
  std::string name = base;
  while (defs.find(name)) name += '\'';
  return name;
}

// ---------------------------------------------------------------------------
// Free variables and used parameters.

std::vector<bool> used_params(const std::string& def, const DefSystem& defs) {
  // Least fixpoint over all definitions: a parameter is used if it occurs
  // freely in the body, where reference arguments count only at positions
  // the referenced definition itself uses.
  std::map<std::string, std::vector<bool>> used;
  for (auto& [n, df] : defs.all()) used[n] = std::vector<bool>(df.params.size(), false);

  std::function<void(const DesignPtr&, const std::set<Var>&, std::set<Var>&)> scan =
      [&](const DesignPtr& d, const std::set<Var>& bound, std::set<Var>& out) {
        if (auto* v = as_var(d)) {
          if (!bound.count(v->var)) out.insert(v->var);
        } else if (auto* c = as_conj(d)) {
          for (auto& s : c->conjuncts) scan(s, bound, out);
        } else if (auto* p = as_pred(d)) {
          scan(p->head, bound, out);
          for (auto& a : p->args) scan(a, bound, out);
        } else if (auto* s = as_sum(d)) {
          for (auto& [name, br] : s->branches) {
            std::set<Var> b2 = bound;
            b2.insert(br.binders.begin(), br.binders.end());
            scan(br.body, b2, out);
          }
        } else if (auto* r = as_ref(d)) {
          auto it = used.find(r->def);
          if (it == used.end()) {
            for (auto& a : r->args)
              if (!bound.count(a)) out.insert(a);
            return;
          }
          auto& df = defs.at(r->def);
          for (size_t i = 0; i < r->args.size() && i < df.params.size(); ++i)
            if (it->second[i] && !bound.count(r->args[i])) out.insert(r->args[i]);
        }
      };

  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [n, df] : defs.all()) {
      std::set<Var> fv;
      scan(df.body, {}, fv);
      for (size_t i = 0; i < df.params.size(); ++i) {
        if (fv.count(df.params[i]) && !used[n][i]) {
          used[n][i] = true;
          changed = true;
        }
      }
    }
  }
  auto it = used.find(def);
  if (it == used.end()) throw Error("unbound definition reference '" + def + "'");
  return it->second;
}

std::set<Var> free_vars(const DesignPtr& d, const DefSystem& defs) {
  std::set<Var> out;
  std::function<void(const DesignPtr&, const std::set<Var>&)> scan =
      [&](const DesignPtr& x, const std::set<Var>& bound) {
        if (auto* v = as_var(x)) {
          if (!bound.count(v->var)) out.insert(v->var);
        } else if (auto* c = as_conj(x)) {
          for (auto& s : c->conjuncts) scan(s, bound);
        } else if (auto* p = as_pred(x)) {
          scan(p->head, bound);
          for (auto& a : p->args) scan(a, bound);
        } else if (auto* s = as_sum(x)) {
          for (auto& [name, br] : s->branches) {
            std::set<Var> b2 = bound;
            b2.insert(br.binders.begin(), br.binders.end());
            scan(br.body, b2);
          }
        } else if (auto* r = as_ref(x)) {
          auto up = used_params(r->def, defs);
          for (size_t i = 0; i < r->args.size() && i < up.size(); ++i)
            if (up[i] && !bound.count(r->args[i])) out.insert(r->args[i]);
        }
      };
  scan(d, {});
  return out;
}

// ---------------------------------------------------------------------------
// Validation.

namespace {

// Collects references in d; 'guarded' is whether an action has been crossed.
void collect_refs(const DesignPtr& d, bool guarded,
                  std::vector<std::pair<std::string, bool>>& out) {
  if (auto* c = as_conj(d)) {
    for (auto& s : c->conjuncts) collect_refs(s, guarded, out);
  } else if (auto* p = as_pred(d)) {
    collect_refs(p->head, true, out);
    for (auto& a : p->args) collect_refs(a, true, out);
  } else if (auto* s = as_sum(d)) {
    for (auto& [name, br] : s->branches) collect_refs(br.body, true, out);
  } else if (auto* r = as_ref(d)) {
    out.emplace_back(r->def, guarded);
  }
}

}  // namespace

void validate_defs(const DefSystem& defs) {
  for (auto& [name, df] : defs.all()) {
    std::set<Var> params(df.params.begin(), df.params.end());
    if (params.size() != df.params.size())
      throw Error("duplicate parameter in definition '" + name + "'");
    std::vector<std::pair<std::string, bool>> refs;
    collect_refs(df.body, false, refs);
    for (auto& [target, guarded] : refs) {
      auto* t = defs.find(target);
      if (!t)
        throw Error("definition '" + name + "' references unbound '" + target + "'");
    }
    for (auto& fv : free_vars(df.body, defs))
      if (!params.count(fv))
        throw Error("definition '" + name + "' has unbound free variable '" + fv + "'");
  }
  // Guardedness: no cycle consisting solely of unguarded reference edges.
  std::map<std::string, std::vector<std::string>> unguarded;
  for (auto& [name, df] : defs.all()) {
    std::vector<std::pair<std::string, bool>> refs;
    collect_refs(df.body, false, refs);
    for (auto& [target, g] : refs)
      if (!g) unguarded[name].push_back(target);
  }
  std::map<std::string, int> state;  // 0 unseen, 1 on stack, 2 done
  std::function<void(const std::string&)> dfs = [&](const std::string& n) {
    state[n] = 1;
    for (auto& m : unguarded[n]) {
      if (state[m] == 1)
        throw Error("unguarded reference cycle through '" + m + "'");
      if (state[m] == 0) dfs(m);
    }
    state[n] = 2;
  };
  for (auto& [name, df] : defs.all())
    if (state[name] == 0) dfs(name);
}

void validate(const DesignPtr& d, const Engine& eng) {
  std::function<void(const DesignPtr&)> scan = [&](const DesignPtr& x) {
    if (auto* c = as_conj(x)) {
      for (auto& s : c->conjuncts) {
        if (!as_pred(s) && !as_ref(s))
          throw Error("conjunct must be a predesign or positive reference");
        scan(s);
      }
    } else if (auto* p = as_pred(x)) {
      auto ar = eng.sig.arity(p->action);
      if (!ar) throw Error("undeclared name '" + p->action + "'");
      if (static_cast<size_t>(*ar) != p->args.size())
        throw Error("arity mismatch for name '" + p->action + "'");
      if (!is_negative(p->head, eng.defs))
        throw Error("predesign head must be negative");
      scan(p->head);
      for (auto& a : p->args) {
        if (!is_negative(a, eng.defs)) throw Error("predesign argument must be negative");
        scan(a);
      }
    } else if (auto* s = as_sum(x)) {
      for (auto& [name, br] : s->branches) {
        auto ar = eng.sig.arity(name);
        if (!ar) throw Error("undeclared name '" + name + "'");
        if (static_cast<size_t>(*ar) != br.binders.size())
          throw Error("arity mismatch for name '" + name + "'");
        std::set<Var> seen;
        for (auto& b : br.binders)
          if (!seen.insert(b).second)
            throw Error("duplicate bound variable '" + b + "' in one action");
        if (!is_positive(br.body, eng.defs))
          throw Error("abstraction body must be positive");
        scan(br.body);
      }
    } else if (auto* r = as_ref(x)) {
      auto& df = eng.defs.at(r->def);
      if (df.params.size() != r->args.size())
        throw Error("reference '" + r->def + "' expects " +
                    std::to_string(df.params.size()) + " arguments");
    }
  };
  scan(d);
}

DesignPtr daimon_minus(const std::map<Name, int>& actions, Engine& eng) {
  std::map<Name, SumBranch> branches;
  for (auto& [name, arity] : actions) {
    std::vector<Var> binders;
    for (int i = 0; i < arity; ++i) binders.push_back(eng.fresh_var());
    branches[name] = SumBranch{std::move(binders), daimon()};
  }
  return sum(std::move(branches));
}

}  // namespace ludics
