#include "ludics/normalize.hpp"

#include <functional>

#include "ludics/ops.hpp"

namespace ludics {

namespace {

// Chases negative reference chains down to a Sum or Var.
DesignPtr resolve_negative(DesignPtr d, Engine& eng) {
  while (as_ref(d)) d = unfold(d, eng);
  return d;
}

// Reduces one cut conjunct: (Sum ...)|b<args> -> branch body with args
// substituted (Omega for an absent branch). Returns nullopt for a head
// normal form (variable head).
std::optional<DesignPtr> reduce_conjunct(const DesignPtr& s, Engine& eng) {
  auto* p = as_pred(s);
  DesignPtr head = resolve_negative(p->head, eng);
  if (as_var(head)) return std::nullopt;
  auto* sm = as_sum(head);
  if (!sm) throw Error("predesign head must be an abstraction or a variable");
  auto it = sm->branches.find(p->action);
  if (it == sm->branches.end()) return omega();
  const SumBranch& br = it->second;
  if (br.binders.size() != p->args.size())
    throw Error("arity mismatch on cut at name '" + p->action + "'");
  std::map<Var, DesignPtr> bind;
  for (size_t i = 0; i < br.binders.size(); ++i) bind[br.binders[i]] = p->args[i];
  return substitute(br.body, bind, eng);
}

// Canonical reduction state: Omega, or the sorted conjunct set.
struct State {
  bool is_omega = false;
  std::vector<DesignPtr> conjuncts;  // Pred nodes
  DesignPtr design;                  // conj(conjuncts) when not Omega
  std::string key;
};

State make_state(const DesignPtr& p, Engine& eng) {
  State st;
  auto flat = flatten_positive(p, eng);
  if (!flat) {
    st.is_omega = true;
    st.design = omega();
    st.key = "W";
    return st;
  }
  st.design = conj(std::move(*flat));
  st.conjuncts = as_conj(st.design)->conjuncts;
  st.key = canonical_key(st.design);
  return st;
}

// Depth-first exploration of the reduction graph with memoization on
// canonical states; stops early once divergence is certified.
class Explorer {
public:
  Explorer(Engine& eng, std::uint64_t fuel) : eng_(eng), fuel_(fuel) {}

  bool omega_found = false;
  bool cycle = false;
  bool out_of_fuel = false;
  std::vector<std::string> omega_path;
  std::map<std::string, std::vector<std::string>> dag;
  std::vector<DesignPtr> harvest;  // head-normal-form conjuncts, all states
  std::uint64_t explored = 0;

  void run(const DesignPtr& p) {
    State st = make_state(p, eng_);
    path_.push_back(st.key);
    visit(st);
    path_.pop_back();
  }

private:
  void visit(const State& st) {
    if (omega_found || out_of_fuel) return;
    if (st.is_omega) {
      omega_found = true;
      omega_path = path_;
      return;
    }
    if (fuel_ == 0) {
      out_of_fuel = true;
      return;
    }
    --fuel_;
    ++explored;
    status_[st.key] = 1;
    auto& edges = dag[st.key];
    for (auto& s : st.conjuncts) {
      auto succ = reduce_conjunct(s, eng_);
      if (!succ) {
        harvest.push_back(s);
        continue;
      }
      State nx = make_state(*succ, eng_);
      edges.push_back(nx.key);
      auto it = status_.find(nx.key);
      if (it != status_.end()) {
        if (it->second == 1) {  // revisit on the current path: cycle
          omega_found = true;
          cycle = true;
          omega_path = path_;
          omega_path.push_back(nx.key);
          return;
        }
        continue;  // already fully explored
      }
      path_.push_back(nx.key);
      visit(nx);
      path_.pop_back();
      if (omega_found || out_of_fuel) return;
    }
    status_[st.key] = 2;
  }

  Engine& eng_;
  std::uint64_t fuel_;
  std::map<std::string, int> status_;  // 1 = on stack, 2 = done
  std::vector<std::string> path_;
};

}  // namespace

std::vector<std::pair<DesignPtr, DesignPtr>> step(const DesignPtr& p, Engine& eng) {
  if (!is_positive(p, eng.defs)) throw Error("step requires a positive design");
  std::vector<std::pair<DesignPtr, DesignPtr>> out;
  auto flat = flatten_positive(p, eng);
  if (!flat) return out;
  for (auto& s : *flat) {
    auto succ = reduce_conjunct(s, eng);
    if (succ) out.emplace_back(s, *succ);
  }
  return out;
}

EvalOutcome evaluate_closed(const DesignPtr& p, Engine& eng, std::uint64_t fuel) {
  if (!is_positive(p, eng.defs)) throw Error("evaluate_closed requires a positive design");
  if (!free_vars(p, eng.defs).empty())
    throw Error("evaluate_closed requires a closed design");
  Explorer ex(eng, fuel);
  ex.run(p);
  EvalOutcome out;
  out.explored = ex.explored;
  if (ex.omega_found) {
    out.verdict = Verdict::Omega;
    out.path = ex.omega_path;
    out.cycle = ex.cycle;
  } else if (ex.out_of_fuel) {
    out.verdict = Verdict::Unknown;
  } else {
    out.verdict = Verdict::Daimon;
    out.dag = ex.dag;
  }
  return out;
}

namespace {

DesignPtr nf_pos(const DesignPtr& p, Engine& eng, std::uint64_t fuel, int depth);
DesignPtr nf_neg(const DesignPtr& n, Engine& eng, std::uint64_t fuel, int depth);

DesignPtr nf_pos(const DesignPtr& p, Engine& eng, std::uint64_t fuel, int depth) {
  if (depth <= 0) return hole();
  Explorer ex(eng, fuel);
  ex.run(p);
  if (ex.omega_found) return omega();
  if (ex.out_of_fuel) return hole();
  std::vector<DesignPtr> parts;
  for (auto& s : ex.harvest) {
    auto* pr = as_pred(s);
    std::vector<DesignPtr> args;
    for (auto& a : pr->args) args.push_back(nf_neg(a, eng, fuel, depth - 1));
    parts.push_back(pred(resolve_negative(pr->head, eng), pr->action, std::move(args)));
  }
  return conj(std::move(parts));
}

DesignPtr nf_neg(const DesignPtr& n, Engine& eng, std::uint64_t fuel, int depth) {
  if (is_hole(n)) return n;
  if (as_var(n)) return n;
  if (depth <= 0) return hole();
  DesignPtr r = resolve_negative(n, eng);
  if (as_var(r)) return r;
  auto* s = as_sum(r);
  std::map<Name, SumBranch> branches;
  for (auto& [name, br] : s->branches)
    branches[name] = SumBranch{br.binders, nf_pos(br.body, eng, fuel, depth - 1)};
  return sum(std::move(branches));
}

}  // namespace

DesignPtr normal_form(const DesignPtr& d, Engine& eng, std::uint64_t fuel, int depth) {
  if (is_hole(d)) return d;
  if (polarity(d, eng.defs) == Polarity::Positive) return nf_pos(d, eng, fuel, depth);
  return nf_neg(d, eng, fuel, depth);
}

EvalOutcome orthogonal(const DesignPtr& p, const DesignPtr& n, Engine& eng,
                       std::uint64_t fuel) {
  Classification cp = classify(p, eng);
  if (!cp.standard()) throw Error("orthogonal: positive design must be standard");
  auto fv = free_vars(p, eng.defs);
  for (auto& v : fv)
    if (v != kInteractionVar)
      throw Error("orthogonal: positive design may only use x0 freely");
  Classification cn = classify(n, eng);
  if (!cn.standard() || !cn.closed)
    throw Error("orthogonal: negative design must be standard and closed");
  if (!is_negative(n, eng.defs)) throw Error("orthogonal: second argument must be negative");
  return evaluate_closed(substitute(p, {{kInteractionVar, n}}, eng), eng, fuel);
}

}  // namespace ludics
