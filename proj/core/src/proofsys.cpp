#include "ludics/proofsys.hpp"

#include <algorithm>
#include <functional>

#include "ludics/ops.hpp"
#include "ludics/print.hpp"
#include "behaviour_internal.hpp"
#include "parse_internal.hpp"

namespace ludics {

namespace {

DesignPtr resolve_neg(DesignPtr d, Engine& eng) {
  while (as_ref(d)) d = unfold(d, eng);
  return d;
}

const BehaviourPtr* ctx_lookup(const Context& ctx, const Var& v) {
  for (auto& [x, b] : ctx.positives)
    if (x == v) return &b;
  return nullptr;
}

// Deterministic fresh variable for premise binders: the base name, primed
// until it avoids `taken`.
Var premise_var(const Var& base, std::set<Var>& taken) {
  Var v = base.empty() || !is_variable_token(base) ? Var("y") : base;
  while (taken.count(v) || v == kInteractionVar) v += "'";
  taken.insert(v);
  return v;
}

std::set<Var> context_vars(const Context& ctx) {
  std::set<Var> out;
  for (auto& [x, b] : ctx.positives) out.insert(x);
  return out;
}

}  // namespace

NextRuleResult next_rule(const Sequent& s, Engine& eng, bool linear) {
  NextRuleResult res;
  if (!s.ctx.is_negative()) {
    // Positive sequent: the head variable and action determine the rule.
    auto flat = flatten_positive(s.subject, eng);
    if (!flat) {
      res.stuck = StuckKind::StuckOmega;
      return res;
    }
    if (flat->size() != 1)
      throw Error("positive sequent subject must be a unary conjunction");
    auto* p = as_pred((*flat)[0]);
    DesignPtr head = resolve_neg(p->head, eng);
    auto* hv = as_var(head);
    if (!hv) throw Error("positive sequent subject has a cut");
    const BehaviourPtr* zb = ctx_lookup(s.ctx, hv->var);
    if (!zb) throw Error("head variable '" + hv->var + "' not in the context");
    const Connective& alpha = (*zb)->conn;
    auto it = alpha.actions.find(p->action);
    if (it == alpha.actions.end()) {
      res.stuck = StuckKind::StuckName;
      res.stuck_name = p->action;
      res.blocking = *zb;
      return res;
    }
    if (it->second.size() != p->args.size())
      throw Error("arity mismatch at action '" + p->action + "'");
    auto idx = alpha.indices(p->action);
    RuleStep step;
    step.tag.kind = RuleTag::Positive;
    step.tag.conn = alpha.cname;
    step.tag.action = p->action;
    step.tag.variable = hv->var;
    step.binders.push_back(it->second);
    for (std::size_t j = 0; j < p->args.size(); ++j) {
      Sequent prem;
      prem.subject = p->args[j];
      if (!linear) {
        prem.ctx.positives = s.ctx.positives;
      } else {
        // Linearized rule: each context entry goes to the unique premise
        // whose subject uses its variable; unused entries are weakened away.
        std::set<Var> mine = free_vars(p->args[j], eng.defs);
        for (auto& [x, b] : s.ctx.positives) {
          if (!mine.count(x)) continue;
          for (std::size_t j2 = 0; j2 < p->args.size(); ++j2)
            if (j2 != j && free_vars(p->args[j2], eng.defs).count(x))
              throw Error("linear rule: variable '" + x +
                          "' shared between premises");
          prem.ctx.positives.emplace_back(x, b);
        }
      }
      prem.ctx.negative = (*zb)->args[idx[j]];
      step.premises.push_back(std::move(prem));
    }
    res.step = std::move(step);
    return res;
  }

  // Negative sequent: the unique negative rule of the context's behaviour.
  DesignPtr n = resolve_neg(s.subject, eng);
  auto* sm = as_sum(n);
  if (!sm) throw Error("negative sequent subject must be an abstraction");
  const BehaviourPtr& nb = s.ctx.negative;
  const Connective& beta = nb->conn;
  RuleStep step;
  step.tag.kind = RuleTag::Negative;
  step.tag.conn = beta.cname;
  std::set<Var> taken = context_vars(s.ctx);
  for (auto& [b, bvars] : beta.actions) {
    auto idx = nb->conn.indices(b);
    auto br = sm->branches.find(b);
    Sequent prem;
    std::vector<Var> ys;
    std::set<Var> taken2 = taken;
    if (br != sm->branches.end()) {
      if (br->second.binders.size() != bvars.size())
        throw Error("arity mismatch at action '" + b + "'");
      // Reuse the subject's own binders when they do not clash with the
      // context; rename deterministically otherwise.
      std::map<Var, DesignPtr> ren;
      for (auto& y : br->second.binders) {
        Var v = premise_var(y, taken2);
        if (v != y) ren[y] = var(v);
        ys.push_back(v);
      }
      prem.subject = ren.empty() ? br->second.body
                                 : substitute(br->second.body, ren, eng);
    } else {
      // Absent branch: the Omega component.
      for (auto& y : bvars) ys.push_back(premise_var(y, taken2));
      prem.subject = omega();
    }
    prem.ctx.positives = s.ctx.positives;
    for (std::size_t j = 0; j < ys.size(); ++j)
      prem.ctx.positives.emplace_back(ys[j], nb->args[idx[j]]);
    step.binders.push_back(std::move(ys));
    step.premises.push_back(std::move(prem));
  }
  res.step = std::move(step);
  return res;
}

// ---------------------------------------------------------------------------
// Deterministic search.

namespace {

// Free variables of the subject in first-occurrence order of a structural
// walk (conjunctions are already canonically ordered).
std::vector<Var> live_vars_ordered(const DesignPtr& d, const DefSystem& defs) {
  std::vector<Var> order;
  std::set<Var> seen;
  std::function<void(const DesignPtr&, std::set<Var>)> walk =
      [&](const DesignPtr& x, std::set<Var> bound) {
        if (auto* c = as_conj(x)) {
          for (auto& s : c->conjuncts) walk(s, bound);
        } else if (auto* p = as_pred(x)) {
          walk(p->head, bound);
          for (auto& a : p->args) walk(a, bound);
        } else if (auto* v = as_var(x)) {
          if (!bound.count(v->var) && seen.insert(v->var).second)
            order.push_back(v->var);
        } else if (auto* s = as_sum(x)) {
          for (auto& [n, br] : s->branches) {
            std::set<Var> b2 = bound;
            for (auto& y : br.binders) b2.insert(y);
            walk(br.body, b2);
          }
        } else if (auto* r = as_ref(x)) {
          std::vector<bool> used = used_params(r->def, defs);
          for (std::size_t i = 0; i < r->args.size(); ++i) {
            if (i < used.size() && !used[i]) continue;
            if (!bound.count(r->args[i]) && seen.insert(r->args[i]).second)
              order.push_back(r->args[i]);
          }
        }
      };
  walk(d, {});
  return order;
}

// Canonical search state of a positive sequent: the subject with its live
// variables renumbered by first occurrence, paired with their behaviours.
// Identical states generate identical subtrees, so a repeat certifies an
// infinite branch.
std::pair<std::string, std::vector<Var>> pos_state(const Sequent& s, Engine& eng) {
  std::vector<Var> order = live_vars_ordered(s.subject, eng.defs);
  std::map<Var, DesignPtr> ren;
  for (std::size_t i = 0; i < order.size(); ++i)
    ren[order[i]] = var(std::string(1, kFreshPrefix) + "st" + std::to_string(i));
  DesignPtr rd = ren.empty() ? s.subject : substitute(s.subject, ren, eng);
  std::string fp = canonical_key(rd);
  fp += "||";
  for (auto& v : order) {
    const BehaviourPtr* b = ctx_lookup(s.ctx, v);
    if (!b) throw Error("free variable '" + v + "' not in the context");
    fp += behaviour_key(*b);
    fp += ";";
  }
  return {std::move(fp), std::move(order)};
}

class Search {
public:
  Search(Engine& eng, std::uint64_t fuel, bool linear)
      : eng_(eng), fuel_(fuel), linear_(linear) {}

  ProveResult run(const Sequent& s) {
    std::optional<Derivation> d =
        s.ctx.is_negative() ? go_neg(s, true) : go_pos(s);
    if (d) {
      result_.kind = ProveResult::Derived;
      result_.derivation = std::move(*d);
    }
    return std::move(result_);
  }

private:
  std::optional<Derivation> go_pos(const Sequent& s) {
    auto [fp, order] = pos_state(s, eng_);
    for (std::size_t i = 0; i < states_.size(); ++i) {
      if (states_[i].first != fp) continue;
      // Repeated state: the deterministic search loops forever.
      OpenBranch br = snapshot(s, BranchEnd::Periodic);
      br.period_start = i;
      for (std::size_t j = 0; j < order.size(); ++j)
        br.period_renaming[order[j]] = states_[i].second[j];
      finish(ProveResult::OutOfFuel, std::move(br));
      return std::nullopt;
    }
    if (fuel_ == 0) {
      finish(ProveResult::OutOfFuel, snapshot(s, BranchEnd::Truncated));
      return std::nullopt;
    }
    --fuel_;
    NextRuleResult nr = next_rule(s, eng_, linear_);
    if (!nr.step) {
      OpenBranch br = snapshot(s, nr.stuck == StuckKind::StuckOmega
                                      ? BranchEnd::StuckOmega
                                      : BranchEnd::StuckName);
      br.stuck_name = nr.stuck_name;
      br.blocking = nr.blocking;
      finish(ProveResult::Failed, std::move(br));
      return std::nullopt;
    }
    states_.emplace_back(fp, order);
    Derivation node;
    node.sequent = s;
    node.rule = nr.step->tag;
    for (std::size_t j = 0; j < nr.step->premises.size(); ++j) {
      BranchStep step;
      step.pos_seq = s;
      step.z = nr.step->tag.variable;
      step.z_beh = *ctx_lookup(s.ctx, step.z);
      step.a = nr.step->tag.action;
      step.xs = nr.step->binders[0];
      step.k = j;
      path_.push_back(std::move(step));
      auto sub = go_neg(nr.step->premises[j], false);
      if (!sub) return std::nullopt;
      path_.pop_back();
      node.premises.push_back(std::move(*sub));
    }
    states_.pop_back();
    return node;
  }

  std::optional<Derivation> go_neg(const Sequent& s, bool is_root) {
    if (fuel_ == 0) {
      finish(ProveResult::OutOfFuel, snapshot_neg(s, BranchEnd::Truncated));
      return std::nullopt;
    }
    --fuel_;
    NextRuleResult nr = next_rule(s, eng_, linear_);
    Derivation node;
    node.sequent = s;
    node.rule = nr.step->tag;
    const Connective& beta = s.ctx.negative->conn;
    std::size_t j = 0;
    for (auto& [b, bvars] : beta.actions) {
      if (is_root) {
        neg_prefix_ = OpenBranch::NegPrefix{s, s.ctx.negative, b,
                                            nr.step->binders[j]};
      } else {
        path_.back().neg_seq = s;
        path_.back().neg_beh = s.ctx.negative;
        path_.back().b = b;
        path_.back().ys = nr.step->binders[j];
      }
      auto sub = go_pos(nr.step->premises[j]);
      if (!sub) return std::nullopt;
      node.premises.push_back(std::move(*sub));
      ++j;
    }
    if (is_root) neg_prefix_.reset();
    return node;
  }

  OpenBranch snapshot(const Sequent& terminal, BranchEnd end) {
    OpenBranch br;
    br.root = root_set_ ? root_ : terminal;
    br.neg_prefix = neg_prefix_;
    br.steps = path_;
    br.terminal = terminal;
    br.end = end;
    return br;
  }

  OpenBranch snapshot_neg(const Sequent& terminal, BranchEnd end) {
    OpenBranch br = snapshot(terminal, end);
    return br;
  }

  void finish(ProveResult::Kind kind, OpenBranch br) {
    result_.kind = kind;
    result_.branch = std::move(br);
  }

public:
  void set_root(const Sequent& s) {
    root_ = s;
    root_set_ = true;
  }

private:
  Engine& eng_;
  std::uint64_t fuel_;
  bool linear_;
  ProveResult result_;
  std::vector<BranchStep> path_;
  std::optional<OpenBranch::NegPrefix> neg_prefix_;
  std::vector<std::pair<std::string, std::vector<Var>>> states_;
  Sequent root_;
  bool root_set_ = false;
};

}  // namespace

ProveResult prove(const Sequent& s, Engine& eng, std::uint64_t fuel, bool linear) {
  Search search(eng, fuel, linear);
  search.set_root(s);
  return search.run(s);
}

// ---------------------------------------------------------------------------
// Derivation checking.

namespace {

bool fail_why(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}

std::string ctx_fingerprint(const Context& ctx) {
  std::string out;
  for (auto& [x, b] : ctx.positives) out += x + ":" + behaviour_key(b) + ",";
  if (ctx.negative) out += "[" + behaviour_key(ctx.negative) + "]";
  return out;
}

bool check_node(const Derivation& d, Engine& eng, bool allow_cut,
                const std::string& where, std::string* why) {
  if (d.rule.kind == RuleTag::Cut) {
    if (!allow_cut) return fail_why(why, where + ": unexpected cut");
    if (d.premises.size() != 2) return fail_why(why, where + ": cut needs 2 premises");
    const Derivation& dl = d.premises[0];
    const Derivation& dr = d.premises[1];
    if (!d.rule.lemma) return fail_why(why, where + ": cut without a lemma");
    const Var& z = d.rule.variable;
    const BehaviourPtr* zb = ctx_lookup(dl.sequent.ctx, z);
    if (!zb || !same_behaviour(*zb, d.rule.lemma))
      return fail_why(why, where + ": left premise lacks " + z + ":lemma");
    if (!dr.sequent.ctx.negative ||
        !same_behaviour(dr.sequent.ctx.negative, dual(d.rule.lemma)))
      return fail_why(why, where + ": right premise lacks the dual lemma");
    // Conclusion context = left premise context minus the cut variable.
    Context expect = dl.sequent.ctx;
    expect.positives.erase(
        std::remove_if(expect.positives.begin(), expect.positives.end(),
                       [&](auto& e) { return e.first == z; }),
        expect.positives.end());
    if (ctx_fingerprint(expect) != ctx_fingerprint(d.sequent.ctx))
      return fail_why(why, where + ": cut conclusion context mismatch");
    DesignPtr cut = substitute(dl.sequent.subject,
                               {{z, dr.sequent.subject}}, eng);
    if (!equiv(cut, d.sequent.subject, eng))
      return fail_why(why, where + ": cut conclusion subject mismatch");
    return check_node(dl, eng, allow_cut, where + ".1", why) &&
           check_node(dr, eng, allow_cut, where + ".2", why);
  }

  NextRuleResult nr = next_rule(d.sequent, eng, false);
  if (!nr.step) return fail_why(why, where + ": no rule applies");
  if (nr.step->tag.kind != d.rule.kind || nr.step->tag.conn != d.rule.conn ||
      nr.step->tag.action != d.rule.action ||
      nr.step->tag.variable != d.rule.variable)
    return fail_why(why, where + ": rule tag mismatch");
  if (nr.step->premises.size() != d.premises.size())
    return fail_why(why, where + ": premise count mismatch");
  for (std::size_t j = 0; j < d.premises.size(); ++j) {
    const Sequent& got = d.premises[j].sequent;
    const Sequent& want = nr.step->premises[j];
    // Premise binders may be alpha-renamed: align the contexts positionally.
    if (got.ctx.positives.size() != want.ctx.positives.size())
      return fail_why(why, where + ": premise context length mismatch");
    std::map<Var, DesignPtr> ren;
    for (std::size_t i = 0; i < want.ctx.positives.size(); ++i) {
      if (!same_behaviour(want.ctx.positives[i].second, got.ctx.positives[i].second))
        return fail_why(why, where + ": premise behaviour mismatch");
      if (want.ctx.positives[i].first != got.ctx.positives[i].first)
        ren[want.ctx.positives[i].first] = var(got.ctx.positives[i].first);
    }
    bool wneg = want.ctx.negative != nullptr;
    bool gneg = got.ctx.negative != nullptr;
    if (wneg != gneg ||
        (wneg && !same_behaviour(want.ctx.negative, got.ctx.negative)))
      return fail_why(why, where + ": premise negative slot mismatch");
    DesignPtr ws = ren.empty() ? want.subject : substitute(want.subject, ren, eng);
    if (!equiv(ws, got.subject, eng))
      return fail_why(why, where + ": premise subject mismatch");
    if (!check_node(d.premises[j], eng, allow_cut,
                    where + "." + std::to_string(j + 1), why))
      return false;
  }
  return true;
}

}  // namespace

bool check_derivation(const Derivation& d, Engine& eng, std::string* why) {
  try {
    return check_node(d, eng, false, "root", why);
  } catch (const Error& e) {
    return fail_why(why, e.what());
  }
}

std::pair<bool, DesignPtr> check_cut_derivation(const Derivation& d, Engine& eng,
                                                std::uint64_t fuel, int depth,
                                                std::string* why) {
  bool ok;
  try {
    ok = check_node(d, eng, true, "root", why);
  } catch (const Error& e) {
    return {fail_why(why, e.what()), nullptr};
  }
  if (!ok) return {false, nullptr};
  return {true, normal_form(d.sequent.subject, eng, fuel, depth)};
}

// ---------------------------------------------------------------------------
// Bounded enumeration.

namespace {

struct Enumerated {
  DesignPtr subject;
  Derivation derivation;
  std::size_t nodes;
};

class Enumerator {
public:
  explicit Enumerator(Engine& eng) : eng_(eng) {}

  std::vector<Enumerated> ctx_proofs(const Context& ctx, std::size_t budget) {
    if (budget == 0) return {};
    std::string key = ctx_fingerprint(ctx) + "#" + std::to_string(budget);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<Enumerated> out =
        ctx.is_negative() ? negatives(ctx, budget) : positives(ctx, budget);
    std::stable_sort(out.begin(), out.end(), [](const Enumerated& a,
                                                const Enumerated& b) {
      std::size_t sa = design_size(a.subject), sb = design_size(b.subject);
      if (sa != sb) return sa < sb;
      return canonical_key(a.subject) < canonical_key(b.subject);
    });
    std::set<std::string> seen;
    std::vector<Enumerated> ded;
    for (auto& e : out)
      if (seen.insert(canonical_key(e.subject)).second) ded.push_back(std::move(e));
    memo_[key] = ded;
    return ded;
  }

private:
  // All subject tuples for a premise list within a shared node budget.
  void tuples(const std::vector<Context>& prems, std::size_t budget,
              std::size_t from, std::vector<const Enumerated*>& acc,
              const std::function<void()>& emit) {
    if (from == prems.size()) {
      emit();
      return;
    }
    std::vector<Enumerated> opts = ctx_proofs(prems[from], budget);
    for (auto& o : opts) {
      if (o.nodes > budget) continue;
      acc.push_back(&o);
      tuples(prems, budget - o.nodes, from + 1, acc, emit);
      acc.pop_back();
    }
  }

  std::vector<Enumerated> positives(const Context& ctx, std::size_t budget) {
    std::vector<Enumerated> out;
    for (auto& [z, zb] : ctx.positives) {
      for (auto& [a, avars] : zb->conn.actions) {
        auto idx = zb->conn.indices(a);
        std::vector<Context> prems;
        for (auto i : idx) {
          Context c;
          c.positives = ctx.positives;
          c.negative = zb->args[i];
          prems.push_back(std::move(c));
        }
        std::vector<const Enumerated*> acc;
        tuples(prems, budget - 1, 0, acc, [&]() {
          std::vector<DesignPtr> args;
          std::size_t nodes = 1;
          for (auto* e : acc) {
            args.push_back(e->subject);
            nodes += e->nodes;
          }
          DesignPtr subj = conj({pred(var(z), a, std::move(args))});
          Derivation node;
          node.sequent = Sequent{subj, ctx};
          node.rule.kind = RuleTag::Positive;
          node.rule.conn = zb->conn.cname;
          node.rule.action = a;
          node.rule.variable = z;
          for (auto* e : acc) node.premises.push_back(e->derivation);
          out.push_back(Enumerated{subj, std::move(node), nodes});
        });
      }
    }
    return out;
  }

  std::vector<Enumerated> negatives(const Context& ctx, std::size_t budget) {
    const BehaviourPtr& nb = ctx.negative;
    const Connective& beta = nb->conn;
    std::vector<Context> prems;
    std::vector<std::vector<Var>> binders;
    std::vector<Name> names;
    std::set<Var> taken = context_vars(ctx);
    for (auto& [b, bvars] : beta.actions) {
      auto idx = nb->conn.indices(b);
      std::vector<Var> ys;
      std::set<Var> taken2 = taken;
      for (auto& y : bvars) ys.push_back(premise_var(y, taken2));
      Context c;
      c.positives = ctx.positives;
      for (std::size_t j = 0; j < ys.size(); ++j)
        c.positives.emplace_back(ys[j], nb->args[idx[j]]);
      prems.push_back(std::move(c));
      binders.push_back(std::move(ys));
      names.push_back(b);
    }
    std::vector<Enumerated> out;
    std::vector<const Enumerated*> acc;
    tuples(prems, budget - 1, 0, acc, [&]() {
      std::map<Name, SumBranch> branches;
      std::size_t nodes = 1;
      for (std::size_t j = 0; j < names.size(); ++j) {
        branches[names[j]] = SumBranch{binders[j], acc[j]->subject};
        nodes += acc[j]->nodes;
      }
      DesignPtr subj = sum(std::move(branches));
      Derivation node;
      node.sequent = Sequent{subj, ctx};
      node.rule.kind = RuleTag::Negative;
      node.rule.conn = beta.cname;
      for (auto* e : acc) node.premises.push_back(e->derivation);
      out.push_back(Enumerated{subj, std::move(node), nodes});
    });
    return out;
  }

  Engine& eng_;
  std::map<std::string, std::vector<Enumerated>> memo_;
};

}  // namespace

std::vector<std::pair<DesignPtr, Derivation>> enumerate_proofs(
    const Context& ctx, Engine& eng, std::size_t size) {
  for (auto& [x, b] : ctx.positives) declare_behaviour_names(b, eng.sig);
  if (ctx.negative) declare_behaviour_names(ctx.negative, eng.sig);
  Enumerator en(eng);
  std::vector<std::pair<DesignPtr, Derivation>> out;
  for (auto& e : en.ctx_proofs(ctx, size))
    out.emplace_back(e.subject, e.derivation);
  return out;
}

// ---------------------------------------------------------------------------
// Serialization and parsing.

namespace {

std::string format_context(const Context& ctx) {
  std::string out;
  bool first = true;
  for (auto& [x, b] : ctx.positives) {
    if (!first) out += ", ";
    first = false;
    out += x + ":" + print_behaviour(b);
  }
  if (ctx.negative) {
    if (!first) out += ", ";
    out += print_behaviour(ctx.negative);
  }
  return out;
}

void emit_derivation(const Derivation& d, int indent, std::string& out) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  switch (d.rule.kind) {
    case RuleTag::Positive:
      out += "(" + d.rule.conn + ", " + d.rule.action + " @ " + d.rule.variable + ") ";
      break;
    case RuleTag::Negative:
      out += "(" + d.rule.conn + ") ";
      break;
    case RuleTag::Cut:
      out += "(cut " + d.rule.variable + " : " + print_behaviour(d.rule.lemma) + ") ";
      break;
  }
  out += print_design(d.sequent.subject);
  out += " |- ";
  out += format_context(d.sequent.ctx);
  out += "\n";
  for (auto& p : d.premises) emit_derivation(p, indent + 1, out);
}

}  // namespace

std::string print_derivation(const Derivation& d) {
  std::string out;
  emit_derivation(d, 0, out);
  return out;
}

Sequent parse_sequent(const std::string& text, Engine& eng) {
  internal::Lexer lx(text);
  internal::DesignParser dp(lx, eng);
  ConnectiveTable table;
  internal::BehaviourParser bp(lx, table);
  if (lx.at(internal::Tok::Ident) && lx.peek().text == "sig") dp.sigdecl();
  for (;;) {
    if (lx.at(internal::Tok::Ident) && lx.peek().text == "def") dp.definition();
    else if (bp.at_conn_decl()) bp.conn_decl();
    else break;
  }
  DesignPtr subject = dp.any();
  dp.validate_all();
  validate(subject, eng);
  lx.expect(internal::Tok::Turnstile, "'|-'");
  Context ctx = bp.context();
  lx.expect(internal::Tok::End, "end of input");
  for (auto& [x, b] : ctx.positives) declare_behaviour_names(b, eng.sig);
  if (ctx.negative) declare_behaviour_names(ctx.negative, eng.sig);
  bool subj_neg = is_negative(subject, eng.defs);
  if (subj_neg != ctx.is_negative())
    throw Error("sequent polarity mismatch between subject and context");
  std::set<Var> cv = context_vars(ctx);
  for (auto& v : free_vars(subject, eng.defs))
    if (!cv.count(v))
      throw Error("free variable '" + v + "' not bound by the context");
  return Sequent{std::move(subject), std::move(ctx)};
}

}  // namespace ludics
