#include <functional>

#include "ludics/ops.hpp"

namespace ludics {

std::optional<std::vector<DesignPtr>> flatten_positive(const DesignPtr& d,
                                                       Engine& eng) {
  DesignPtr cur = d;
  while (as_ref(cur)) cur = unfold(cur, eng);
  if (is_omega(cur)) return std::nullopt;
  auto* c = as_conj(cur);
  if (!c) throw Error("flatten_positive requires a positive design");
  std::vector<DesignPtr> out;
  for (auto& s : c->conjuncts) {
    if (as_pred(s)) {
      out.push_back(s);
    } else {
      auto inner = flatten_positive(s, eng);
      if (!inner) return std::nullopt;  // an Omega conjunct collapses the whole
      out.insert(out.end(), inner->begin(), inner->end());
    }
  }
  return out;
}

namespace {

using Env = std::map<Var, std::string>;

// Key with explicit environment tokens (&n;) for comparison-bound variables;
// binders below the comparison point are alpha-normalized locally.
void kf(const DesignPtr& d, const Env& env, int local, std::string& out) {
  if (is_omega(d)) { out += 'W'; return; }
  if (is_hole(d)) { out += 'H'; return; }
  if (auto* c = as_conj(d)) {
    std::vector<std::string> keys;
    for (auto& s : c->conjuncts) {
      std::string k;
      kf(s, env, local, k);
      keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end());
    out += "C(";
    for (auto& k : keys) { out += k; out += ','; }
    out += ')';
    return;
  }
  if (auto* p = as_pred(d)) {
    out += "P(";
    kf(p->head, env, local, out);
    out += '!';
    out += p->action;
    for (auto& a : p->args) { out += ';'; kf(a, env, local, out); }
    out += ')';
    return;
  }
  if (auto* v = as_var(d)) {
    auto it = env.find(v->var);
    if (it != env.end()) out += it->second;
    else out += "f!" + v->var;
    return;
  }
  if (auto* s = as_sum(d)) {
    out += "S(";
    for (auto& [name, br] : s->branches) {
      out += name;
      out += ':';
      Env env2 = env;
      int l2 = local;
      for (auto& b : br.binders) env2[b] = "l" + std::to_string(l2++);
      kf(br.body, env2, l2, out);
      out += ';';
    }
    out += ')';
    return;
  }
  auto* r = as_ref(d);
  out += "R(";
  out += r->def;
  for (auto& a : r->args) {
    out += ';';
    auto it = env.find(a);
    if (it != env.end()) out += it->second;
    else out += "f!" + a;
  }
  out += ')';
}

// Renumbers environment tokens (&n;) by first occurrence so that visited
// states are independent of the depth at which binders were introduced.
std::string renumber(const std::string& s) {
  std::string out;
  std::map<std::string, int> seen;
  size_t i = 0;
  while (i < s.size()) {
    if (s[i] != '&') { out += s[i++]; continue; }
    size_t j = s.find(';', i);
    std::string tok = s.substr(i, j - i + 1);
    auto [it, fresh] = seen.emplace(tok, seen.size());
    out += "&" + std::to_string(it->second) + ";";
    i = j + 1;
  }
  return out;
}

class Bisim {
public:
  explicit Bisim(Engine& eng) : eng_(eng) {}

  bool run(DesignPtr a, Env envA, DesignPtr b, Env envB) {
    std::string ka, kb;
    kf(a, envA, 0, ka);
    kf(b, envB, 0, kb);
    std::string pk = renumber(ka + "||" + kb);
    if (assumed_.count(pk)) return true;
    size_t mark = trail_.size();
    assumed_.insert(pk);
    trail_.push_back(pk);
    if (step(std::move(a), std::move(envA), std::move(b), std::move(envB))) return true;
    while (trail_.size() > mark) {
      assumed_.erase(trail_.back());
      trail_.pop_back();
    }
    return false;
  }

private:
  bool step(DesignPtr a, Env envA, DesignPtr b, Env envB) {
    while (as_ref(a) && !positive_ref(a)) a = unfold(a, eng_);
    while (as_ref(b) && !positive_ref(b)) b = unfold(b, eng_);

    if (is_hole(a) || is_hole(b)) return is_hole(a) && is_hole(b);

    if (auto* pa = as_pred(a)) {
      auto* pb = as_pred(b);
      if (!pb || pa->action != pb->action || pa->args.size() != pb->args.size())
        return false;
      if (!run(pa->head, envA, pb->head, envB)) return false;
      for (size_t i = 0; i < pa->args.size(); ++i)
        if (!run(pa->args[i], envA, pb->args[i], envB)) return false;
      return true;
    }

    bool posA = is_omega(a) || as_conj(a) || as_ref(a);
    bool posB = is_omega(b) || as_conj(b) || as_ref(b);
    if (posA != posB) return false;

    if (posA) {
      auto fa = flatten_positive(a, eng_);
      auto fb = flatten_positive(b, eng_);
      if (!fa || !fb) return static_cast<bool>(fa) == static_cast<bool>(fb);
      return match_sets(*fa, envA, *fb, envB) && match_sets(*fb, envB, *fa, envA);
    }

    if (auto* va = as_var(a)) {
      auto* vb = as_var(b);
      if (!vb) return false;
      auto ia = envA.find(va->var);
      auto ib = envB.find(vb->var);
      if (ia != envA.end() || ib != envB.end())
        return ia != envA.end() && ib != envB.end() && ia->second == ib->second;
      return va->var == vb->var;
    }

    auto* sa = as_sum(a);
    auto* sb = as_sum(b);
    if (!sa || !sb) return false;
    // Branches whose body is Omega coincide with absent branches.
    std::map<Name, const SumBranch*> ea = effective(*sa);
    std::map<Name, const SumBranch*> eb = effective(*sb);
    if (ea.size() != eb.size()) return false;
    for (auto& [name, bra] : ea) {
      auto it = eb.find(name);
      if (it == eb.end()) return false;
      const SumBranch* brb = it->second;
      if (bra->binders.size() != brb->binders.size()) return false;
      Env envA2 = envA, envB2 = envB;
      for (size_t i = 0; i < bra->binders.size(); ++i) {
        std::string tok = "&" + std::to_string(counter_++) + ";";
        envA2[bra->binders[i]] = tok;
        envB2[brb->binders[i]] = tok;
      }
      if (!run(bra->body, envA2, brb->body, envB2)) return false;
    }
    return true;
  }

  bool positive_ref(const DesignPtr& d) {
    return as_ref(d) && is_positive(d, eng_.defs);
  }

  std::map<Name, const SumBranch*> effective(const Sum& s) {
    std::map<Name, const SumBranch*> out;
    for (auto& [name, br] : s.branches) {
      DesignPtr body = br.body;
      if (is_omega(body)) continue;
      if (as_ref(body) && !flatten_positive(body, eng_)) continue;
      out[name] = &br;
    }
    return out;
  }

  bool match_sets(const std::vector<DesignPtr>& xs, const Env& envX,
                  const std::vector<DesignPtr>& ys, const Env& envY) {
    for (auto& x : xs) {
      bool found = false;
      for (auto& y : ys) {
        if (run(x, envX, y, envY)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  Engine& eng_;
  std::set<std::string> assumed_;
  std::vector<std::string> trail_;
  long counter_ = 0;
};

}  // namespace

bool equiv(const DesignPtr& a, const DesignPtr& b, Engine& eng) {
  if (a == b || canonical_key(a) == canonical_key(b)) return true;
  Bisim bi(eng);
  return bi.run(a, {}, b, {});
}

}  // namespace ludics
