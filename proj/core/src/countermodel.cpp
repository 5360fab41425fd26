#include "ludics/countermodel.hpp"

#include "ludics/ops.hpp"
#include "ludics/print.hpp"

namespace ludics {

std::optional<OpenBranch> open_branch(const Sequent& s, Engine& eng,
                                      std::uint64_t fuel, bool linear) {
  ProveResult res = prove(s, eng, fuel, linear);
  if (res.kind == ProveResult::Derived) return std::nullopt;
  return std::move(res.branch);
}

namespace {

class Builder {
public:
  Builder(const OpenBranch& br, Engine& eng, std::size_t n, bool tail)
      : br_(br), eng_(eng), n_(n), tail_(tail) {
    for (auto& [x, b] : br_.root.ctx.positives) {
      beh_[x] = b;
      intro_[x] = -1;
    }
    if (br_.neg_prefix) {
      auto idx = br_.neg_prefix->neg_beh->conn.indices(br_.neg_prefix->b);
      for (std::size_t t = 0; t < br_.neg_prefix->ys.size(); ++t) {
        beh_[br_.neg_prefix->ys[t]] = br_.neg_prefix->neg_beh->args[idx[t]];
        intro_[br_.neg_prefix->ys[t]] = -1;
      }
    }
    for (std::size_t m = 0; m < n_; ++m) {
      const BranchStep& st = br_.steps[m];
      auto idx = st.neg_beh->conn.indices(st.b);
      for (std::size_t t = 0; t < st.ys.size(); ++t) {
        beh_[st.ys[t]] = st.neg_beh->args[idx[t]];
        intro_[st.ys[t]] = static_cast<long>(m);
        std::string name = eng_.fresh_def("model");
        ydef_[{m, t}] = name;
        eng_.defs.add(name, Definition{{}, sum({})});
      }
    }
    // Bodies only after every definition name exists: periodic wrap-around
    // contributions reference later (and wrapped earlier) levels.
    for (auto& [key, name] : ydef_)
      eng_.defs.set_body(name, model_of(br_.steps[key.first].ys[key.second]));
  }

  // Levels whose head variable is v and which lie strictly above v's
  // binding; for periodic branches, plus the occurrences accumulated along
  // the orbit of the period renaming (the infinite tail collapses onto the
  // period because the level models repeat).
  std::vector<std::size_t> contributors(const Var& v) const {
    std::set<std::size_t> out;
    long s = intro_.at(v);
    for (std::size_t m = 0; m < n_; ++m)
      if (static_cast<long>(m) > s && br_.steps[m].z == v) out.insert(m);
    if (tail_ && br_.period_renaming.count(v)) {
      std::set<Var> visited;
      Var w = v;
      while (br_.period_renaming.count(w)) {
        w = br_.period_renaming.at(w);
        if (!visited.insert(w).second) break;
        for (std::size_t m = br_.period_start; m < n_; ++m)
          if (br_.steps[m].z == w) out.insert(m);
      }
    }
    return {out.begin(), out.end()};
  }

  // The head predesign of level m's model: xs_k | b < M(y1) .. M(yl) >.
  DesignPtr head_component(std::size_t m) const {
    const BranchStep& st = br_.steps[m];
    std::vector<DesignPtr> args;
    for (std::size_t t = 0; t < st.ys.size(); ++t)
      args.push_back(ref(ydef_.at({m, t}), {}));
    return pred(var(st.xs[st.k]), st.b, std::move(args));
  }

  // Branch-wise union of the contributing head predesigns over all of the
  // connective's actions; actions with no contributor get the daimon, so an
  // empty contributor set yields the all-daimon sum.
  DesignPtr model_sum(const Connective& conn,
                      const std::vector<std::size_t>& ms) const {
    std::map<Name, SumBranch> branches;
    for (auto& [c, cvars] : conn.actions) {
      std::vector<DesignPtr> parts;
      for (auto m : ms)
        if (br_.steps[m].a == c) parts.push_back(head_component(m));
      branches[c] = SumBranch{cvars, conj(std::move(parts))};
    }
    return sum(std::move(branches));
  }

  DesignPtr model_of(const Var& v) const {
    auto it = beh_.find(v);
    if (it == beh_.end())
      throw Error("variable '" + v + "' has no behaviour in the branch");
    return model_sum(it->second->conn, contributors(v));
  }

  DesignPtr level_model(std::size_t m) const {
    return model_sum(br_.steps[m].z_beh->conn, {m});
  }

  ModelAssignment assemble() const {
    ModelAssignment ma;
    for (auto& [x, b] : br_.root.ctx.positives) ma.models[x] = model_of(x);
    for (std::size_t m = 0; m < n_; ++m) ma.mi.push_back(level_model(m));
    if (br_.root.ctx.is_negative()) {
      if (!br_.neg_prefix)
        throw Error("negative root branch lacks its forced negative step");
      std::vector<DesignPtr> args;
      for (auto& y : br_.neg_prefix->ys) args.push_back(model_of(y));
      ma.counter_positive = conj(
          {pred(var(kInteractionVar), br_.neg_prefix->b, std::move(args))});
    }
    ma.cyclic = tail_;
    return ma;
  }

private:
  const OpenBranch& br_;
  Engine& eng_;
  std::size_t n_;
  bool tail_;
  std::map<std::pair<std::size_t, std::size_t>, std::string> ydef_;
  std::map<Var, BehaviourPtr> beh_;
  std::map<Var, long> intro_;  // binding level; -1 for root and prefix vars
};

}  // namespace

ModelAssignment build_countermodel(const OpenBranch& br, Engine& eng) {
  if (br.end == BranchEnd::Truncated)
    throw Error("truncated branch: build an approximant instead");
  Builder b(br, eng, br.steps.size(), br.end == BranchEnd::Periodic);
  return b.assemble();
}

ModelAssignment build_approximant(const OpenBranch& br, Engine& eng,
                                  std::size_t K) {
  std::size_t n = std::min(K, br.steps.size());
  // A branch truncated at a negative sequent records a final step without
  // its negative half; it carries no level data, so the approximant chops
  // below it.
  while (n > 0 && !br.steps[n - 1].neg_beh) --n;
  Builder b(br, eng, n, false);
  ModelAssignment ma = b.assemble();
  ma.approx = n;
  return ma;
}

DefeatReport verify_defeat(const OpenBranch& br, const ModelAssignment& ma,
                           Engine& eng, std::uint64_t fuel) {
  DefeatReport rep;
  std::map<Var, DesignPtr> theta(ma.models.begin(), ma.models.end());
  DesignPtr closed;
  if (br.root.ctx.is_negative()) {
    if (!ma.counter_positive)
      throw Error("negative root branch without a counter-design");
    DesignPtr nd = theta.empty() ? br.root.subject
                                 : substitute(br.root.subject, theta, eng);
    closed = substitute(ma.counter_positive, {{kInteractionVar, nd}}, eng);
  } else {
    closed = theta.empty() ? br.root.subject
                           : substitute(br.root.subject, theta, eng);
  }
  rep.outcome = evaluate_closed(closed, eng, fuel);
  rep.verdict = rep.outcome.verdict;
  switch (rep.verdict) {
    case Verdict::Omega:
      rep.detail = rep.outcome.cycle
                       ? "diverges: revisited state after " +
                             std::to_string(rep.outcome.explored) + " states"
                       : "diverges: reaches Omega";
      break;
    case Verdict::Daimon:
      rep.detail = ma.approx
                       ? "approximant consumed: the interaction progressed "
                         "through the built levels and then converged"
                       : "converges: the assignment does not defeat the subject";
      break;
    case Verdict::Unknown:
      rep.detail = "inconclusive within fuel";
      break;
  }
  return rep;
}

MembershipReport verify_countermodel_membership(const OpenBranch& br,
                                                const ModelAssignment& ma,
                                                Engine& eng, std::uint64_t fuel,
                                                std::size_t size) {
  MembershipReport rep;
  auto check = [&](const DesignPtr& pos, const DesignPtr& neg,
                   const std::string& what) {
    DesignPtr closed = substitute(pos, {{kInteractionVar, neg}}, eng);
    EvalOutcome out = evaluate_closed(closed, eng, fuel);
    ++rep.checks;
    if (out.verdict != Verdict::Daimon) {
      rep.all_passed = false;
      rep.detail += what + ": " +
                    (out.verdict == Verdict::Omega ? "diverges"
                                                   : "inconclusive") +
                    "\n";
    }
  };
  for (auto& [x, b] : br.root.ctx.positives) {
    auto it = ma.models.find(x);
    if (it == ma.models.end()) continue;
    for (auto& e : ethics_members(b, eng, size))
      check(e, it->second,
            "M(" + x + ") against " + print_design(e) + " in " +
                print_behaviour(b));
  }
  if (br.root.ctx.is_negative() && ma.counter_positive) {
    for (auto& nm : members_negative(br.root.ctx.negative, eng, size))
      check(ma.counter_positive, nm,
            "counter-design against " + print_design(nm) + " in " +
                print_behaviour(br.root.ctx.negative));
  }
  return rep;
}

}  // namespace ludics
