#include <functional>

#include "ludics/ops.hpp"

namespace ludics {

namespace {

// References reachable from a design (transitively through definitions).
std::set<std::string> reachable_defs(const DesignPtr& d, const DefSystem& defs) {
  std::set<std::string> out;
  std::function<void(const DesignPtr&)> scan = [&](const DesignPtr& x) {
    if (auto* c = as_conj(x)) {
      for (auto& s : c->conjuncts) scan(s);
    } else if (auto* p = as_pred(x)) {
      scan(p->head);
      for (auto& a : p->args) scan(a);
    } else if (auto* s = as_sum(x)) {
      for (auto& [n, br] : s->branches) scan(br.body);
    } else if (auto* r = as_ref(x)) {
      if (out.insert(r->def).second) scan(defs.at(r->def).body);
    }
  };
  scan(d);
  return out;
}

// Chases a reference chain to the underlying node kind without substituting.
const DesignPtr* resolve_shallow(const DesignPtr* d, const DefSystem& defs) {
  while (auto* r = as_ref(*d)) d = &defs.at(r->def).body;
  return d;
}

}  // namespace

Classification classify(const DesignPtr& d, Engine& eng) {
  Classification cl;
  cl.total = true;
  cl.deterministic = true;
  cl.cut_free = true;
  cl.identity_free = true;
  cl.linear = true;
  cl.unary_conjunctions = true;

  const DefSystem& defs = eng.defs;
  cl.closed = free_vars(d, defs).empty();

  const DesignPtr* top = resolve_shallow(&d, defs);
  if (is_omega(*top)) cl.total = false;
  if (as_var(*top)) cl.identity_free = false;

  std::set<std::string> reach = reachable_defs(d, defs);

  std::function<void(const DesignPtr&)> scan = [&](const DesignPtr& x) {
    if (auto* c = as_conj(x)) {
      if (c->conjuncts.size() > 1) cl.deterministic = false;
      if (c->conjuncts.size() != 1) cl.unary_conjunctions = false;
      for (auto& s : c->conjuncts) scan(s);
    } else if (auto* p = as_pred(x)) {
      const DesignPtr* head = resolve_shallow(&p->head, defs);
      if (as_sum(*head)) cl.cut_free = false;
      std::vector<std::set<Var>> fvs;
      fvs.push_back(free_vars(p->head, defs));
      for (auto& a : p->args) {
        const DesignPtr* arg = resolve_shallow(&a, defs);
        if (as_var(*arg)) cl.identity_free = false;
        fvs.push_back(free_vars(a, defs));
      }
      for (size_t i = 0; i < fvs.size() && cl.linear; ++i)
        for (size_t j = i + 1; j < fvs.size() && cl.linear; ++j)
          for (auto& v : fvs[i])
            if (fvs[j].count(v)) {
              cl.linear = false;
              break;
            }
      scan(p->head);
      for (auto& a : p->args) scan(a);
    } else if (auto* s = as_sum(x)) {
      for (auto& [n, br] : s->branches) scan(br.body);
    }
  };
  scan(d);
  for (auto& n : reach) scan(defs.at(n).body);

  // Cardinality: infinite iff a cycle in the reachable definition graph.
  std::map<std::string, std::set<std::string>> edges;
  for (auto& n : reach) {
    std::function<void(const DesignPtr&, std::set<std::string>&)> direct =
        [&](const DesignPtr& x, std::set<std::string>& out) {
          if (auto* c = as_conj(x)) {
            for (auto& s : c->conjuncts) direct(s, out);
          } else if (auto* p = as_pred(x)) {
            direct(p->head, out);
            for (auto& a : p->args) direct(a, out);
          } else if (auto* s = as_sum(x)) {
            for (auto& [nn, br] : s->branches) direct(br.body, out);
          } else if (auto* r = as_ref(x)) {
            out.insert(r->def);
          }
        };
    std::set<std::string> ds;
    direct(defs.at(n).body, ds);
    edges[n] = std::move(ds);
  }
  bool cyclic = false;
  {
    std::map<std::string, int> state;
    std::function<void(const std::string&)> dfs = [&](const std::string& n) {
      state[n] = 1;
      for (auto& m : edges[n]) {
        if (state[m] == 1) cyclic = true;
        else if (state[m] == 0) dfs(m);
      }
      state[n] = 2;
    };
    for (auto& n : reach)
      if (state[n] == 0) dfs(n);
  }
  if (cyclic) {
    cl.cardinality = std::nullopt;
  } else {
    std::map<std::string, std::uint64_t> memo;
    std::function<std::uint64_t(const DesignPtr&)> count = [&](const DesignPtr& x)
        -> std::uint64_t {
      if (auto* c = as_conj(x)) {
        std::uint64_t n = 0;
        for (auto& s : c->conjuncts) n += count(s);
        return n;
      }
      if (auto* p = as_pred(x)) {
        std::uint64_t n = 1 + count(p->head);
        for (auto& a : p->args) n += count(a);
        return n;
      }
      if (auto* s = as_sum(x)) {
        std::uint64_t n = 0;
        for (auto& [nn, br] : s->branches) n += count(br.body);
        return n;
      }
      if (auto* r = as_ref(x)) {
        auto it = memo.find(r->def);
        if (it != memo.end()) return it->second;
        std::uint64_t n = count(defs.at(r->def).body);
        memo[r->def] = n;
        return n;
      }
      return 0;
    };
    cl.cardinality = count(d);
  }
  return cl;
}

DesignPtr fax(Engine& eng, const Var& x) {
  if (eng.sig.schematic) throw Error("fax requires a finite signature");
  std::string name = eng.fresh_def("fax");
  Var p = "x";
  std::map<Name, SumBranch> branches;
  for (auto& [a, arity] : eng.sig.atoms()) {
    std::vector<Var> binders;
    std::vector<DesignPtr> args;
    for (int i = 0; i < arity; ++i) {
      Var y = eng.fresh_var();
      binders.push_back(y);
      args.push_back(ref(name, {y}));
    }
    branches[a] = SumBranch{std::move(binders), pred1(var(p), a, std::move(args))};
  }
  eng.defs.add(name, Definition{{p}, sum(std::move(branches))});
  return ref(name, {x});
}

}  // namespace ludics
