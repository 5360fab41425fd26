#include "ludics/behaviour.hpp"

#include <algorithm>

#include "ludics/ops.hpp"
#include "ludics/print.hpp"
#include "ludics/proofsys.hpp"
#include "behaviour_internal.hpp"

namespace ludics {

std::vector<std::size_t> Connective::indices(const Name& a) const {
  auto it = actions.find(a);
  if (it == actions.end()) throw Error("connective has no action '" + a + "'");
  std::vector<std::size_t> out;
  for (auto& v : it->second) {
    auto p = std::find(params.begin(), params.end(), v);
    out.push_back(static_cast<std::size_t>(p - params.begin()));
  }
  return out;
}

Connective make_connective(std::string cname, std::vector<Var> params,
                           std::map<Name, std::vector<Var>> actions) {
  std::set<Var> ps(params.begin(), params.end());
  if (ps.size() != params.size())
    throw Error("connective placeholders must be distinct");
  for (auto& [a, vars] : actions) {
    std::set<Var> seen;
    for (auto& v : vars) {
      if (!ps.count(v))
        throw Error("action '" + a + "' uses variable '" + v +
                    "' outside the placeholders");
      if (!seen.insert(v).second)
        throw Error("action '" + a + "' repeats variable '" + v + "'");
    }
  }
  Connective c;
  c.cname = std::move(cname);
  c.params = std::move(params);
  c.actions = std::move(actions);
  return c;
}

BehaviourPtr behaviour(Polarity pol, Connective conn,
                       std::vector<BehaviourPtr> args) {
  if (args.size() != conn.arity())
    throw Error("connective '" + conn.cname + "' expects " +
                std::to_string(conn.arity()) + " arguments, got " +
                std::to_string(args.size()));
  for (auto& a : args)
    if (a->pol == pol)
      throw Error("behaviour arguments must have the opposite polarity");
  auto b = std::make_shared<Behaviour>();
  b->pol = pol;
  b->conn = std::move(conn);
  b->args = std::move(args);
  return b;
}

BehaviourPtr dual(const BehaviourPtr& b) {
  std::vector<BehaviourPtr> args;
  for (auto& a : b->args) args.push_back(dual(a));
  auto d = std::make_shared<Behaviour>();
  d->pol = b->pol == Polarity::Positive ? Polarity::Negative : Polarity::Positive;
  d->conn = b->conn;
  d->args = std::move(args);
  return d;
}

namespace {

// Structural connective fingerprint: placeholders by position, actions by
// (name, placeholder indices). The display name is not part of identity.
std::string conn_key(const Connective& c) {
  std::string out = "c" + std::to_string(c.arity()) + "{";
  for (auto& [a, vars] : c.actions) {
    out += a;
    out += "[";
    for (auto i : c.indices(a)) out += std::to_string(i) + ",";
    out += "]";
  }
  out += "}";
  return out;
}

}  // namespace

std::string behaviour_key(const BehaviourPtr& b) {
  std::string out = b->pol == Polarity::Positive ? "P" : "N";
  out += conn_key(b->conn);
  out += "<";
  for (auto& a : b->args) {
    out += behaviour_key(a);
    out += ",";
  }
  out += ">";
  return out;
}

bool same_behaviour(const BehaviourPtr& a, const BehaviourPtr& b) {
  return a == b || behaviour_key(a) == behaviour_key(b);
}

const Connective& conn_par() {
  static const Connective c = make_connective(
      "par", {"x1", "x2"}, {{"wp", {"x1", "x2"}}});
  return c;
}
const Connective& conn_with() {
  static const Connective c = make_connective(
      "with", {"x1", "x2"}, {{"pi1", {"x1"}}, {"pi2", {"x2"}}});
  return c;
}
const Connective& conn_up() {
  static const Connective c = make_connective("up", {"x"}, {{"up", {"x"}}});
  return c;
}
const Connective& conn_bot() {
  static const Connective c = make_connective("bot", {}, {{"*", {}}});
  return c;
}
const Connective& conn_top() {
  static const Connective c = make_connective("top", {}, {});
  return c;
}

BehaviourPtr one() { return behaviour(Polarity::Positive, conn_bot(), {}); }
BehaviourPtr bot() { return behaviour(Polarity::Negative, conn_bot(), {}); }
BehaviourPtr zero() { return behaviour(Polarity::Positive, conn_top(), {}); }
BehaviourPtr top() { return behaviour(Polarity::Negative, conn_top(), {}); }
BehaviourPtr down(BehaviourPtr n) {
  return behaviour(Polarity::Positive, conn_up(), {std::move(n)});
}
BehaviourPtr up(BehaviourPtr p) {
  return behaviour(Polarity::Negative, conn_up(), {std::move(p)});
}
BehaviourPtr tensor(BehaviourPtr n, BehaviourPtr m) {
  return behaviour(Polarity::Positive, conn_par(), {std::move(n), std::move(m)});
}
BehaviourPtr par(BehaviourPtr p, BehaviourPtr q) {
  return behaviour(Polarity::Negative, conn_par(), {std::move(p), std::move(q)});
}
BehaviourPtr plus(BehaviourPtr n, BehaviourPtr m) {
  return behaviour(Polarity::Positive, conn_with(), {std::move(n), std::move(m)});
}
BehaviourPtr with_(BehaviourPtr p, BehaviourPtr q) {
  return behaviour(Polarity::Negative, conn_with(), {std::move(p), std::move(q)});
}

void declare_behaviour_names(const BehaviourPtr& b, Signature& sig) {
  for (auto& [a, vars] : b->conn.actions)
    sig.declare(a, static_cast<int>(vars.size()));
  for (auto& arg : b->args) declare_behaviour_names(arg, sig);
}

namespace {

const char* library_cname(const Connective& c) {
  static const char* names[] = {"par", "with", "up", "bot", "top"};
  const Connective* lib[] = {&conn_par(), &conn_with(), &conn_up(), &conn_bot(),
                             &conn_top()};
  for (int i = 0; i < 5; ++i)
    if (c.cname == names[i] && conn_key(c) == conn_key(*lib[i])) return names[i];
  return nullptr;
}

}  // namespace

std::string print_behaviour(const BehaviourPtr& b) {
  bool pos = b->pol == Polarity::Positive;
  if (const char* lib = library_cname(b->conn)) {
    std::string n = lib;
    if (n == "bot") return pos ? "one" : "bot";
    if (n == "top") return pos ? "zero" : "top";
    std::string head = n == "up"     ? (pos ? "down" : "up")
                       : n == "par"  ? (pos ? "tensor" : "par")
                                     : (pos ? "plus" : "with");
    std::string out = head + "(";
    for (std::size_t i = 0; i < b->args.size(); ++i) {
      if (i) out += ", ";
      out += print_behaviour(b->args[i]);
    }
    return out + ")";
  }
  std::string out = pos ? "pos " : "neg ";
  out += b->conn.cname;
  out += pos ? "<" : "(";
  for (std::size_t i = 0; i < b->args.size(); ++i) {
    if (i) out += ", ";
    out += print_behaviour(b->args[i]);
  }
  out += pos ? ">" : ")";
  return out;
}

std::string print_connective(const Connective& c) {
  std::string out = "conn " + c.cname + "(";
  for (std::size_t i = 0; i < c.params.size(); ++i) {
    if (i) out += ", ";
    out += c.params[i];
  }
  out += ") {";
  bool first = true;
  for (auto& [a, vars] : c.actions) {
    out += first ? " " : "; ";
    first = false;
    out += a;
    if (!vars.empty()) {
      out += "(";
      for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i) out += ", ";
        out += vars[i];
      }
      out += ")";
    }
  }
  out += first ? "}" : " }";
  return out;
}

void collect_connectives(const BehaviourPtr& b,
                         std::map<std::string, Connective>& out) {
  if (!library_cname(b->conn)) out.emplace(b->conn.cname, b->conn);
  for (auto& a : b->args) collect_connectives(a, out);
}

BehaviourPtr parse_behaviour(const std::string& text, ConnectiveTable& table) {
  internal::Lexer lx(text);
  internal::BehaviourParser p(lx, table);
  while (p.at_conn_decl()) p.conn_decl();
  BehaviourPtr b = p.beh();
  lx.expect(internal::Tok::End, "end of input");
  return b;
}

Context parse_context(const std::string& text, ConnectiveTable& table) {
  internal::Lexer lx(text);
  internal::BehaviourParser p(lx, table);
  while (p.at_conn_decl()) p.conn_decl();
  Context ctx = p.context();
  lx.expect(internal::Tok::End, "end of input");
  return ctx;
}

// ---------------------------------------------------------------------------
// Member enumeration and membership, backed by the proof system.

namespace {

std::map<Name, int> action_arities(const Connective& c) {
  std::map<Name, int> out;
  for (auto& [a, vars] : c.actions) out[a] = static_cast<int>(vars.size());
  return out;
}

void sort_dedup(std::vector<DesignPtr>& xs) {
  std::stable_sort(xs.begin(), xs.end(), [](const DesignPtr& a, const DesignPtr& b) {
    std::size_t sa = design_size(a), sb = design_size(b);
    if (sa != sb) return sa < sb;
    return canonical_key(a) < canonical_key(b);
  });
  std::set<std::string> seen;
  std::vector<DesignPtr> out;
  for (auto& x : xs)
    if (seen.insert(canonical_key(x)).second) out.push_back(x);
  xs = std::move(out);
}

}  // namespace

std::vector<DesignPtr> members_negative(const BehaviourPtr& b, Engine& eng,
                                        std::size_t size) {
  if (b->pol != Polarity::Negative)
    throw Error("members_negative requires a negative behaviour");
  declare_behaviour_names(b, eng.sig);
  std::vector<DesignPtr> out;
  // The all-daimon sum over the connective's actions is a member of every
  // negative behaviour over that connective.
  out.push_back(daimon_minus(action_arities(b->conn), eng));
  Context ctx;
  ctx.negative = b;
  for (auto& [d, der] : enumerate_proofs(ctx, eng, size)) out.push_back(d);
  // Meets of pairs of proofs give nondeterministic model members.
  std::size_t n = out.size();
  for (std::size_t i = 1; i < n && i < 6; ++i)
    for (std::size_t j = i + 1; j < n && j < 6; ++j)
      out.push_back(meet(out[i], out[j], eng));
  sort_dedup(out);
  return out;
}

std::vector<DesignPtr> ethics_members(const BehaviourPtr& b, Engine& eng,
                                      std::size_t size) {
  if (b->pol != Polarity::Positive)
    throw Error("ethics_members requires a positive behaviour");
  declare_behaviour_names(b, eng.sig);
  std::vector<DesignPtr> out;
  for (auto& [a, vars] : b->conn.actions) {
    auto idx = b->conn.indices(a);
    std::vector<std::vector<DesignPtr>> pools;
    for (auto i : idx) pools.push_back(members_negative(b->args[i], eng, size));
    // Bounded cartesian product, mixed-radix order.
    std::size_t total = 1;
    for (auto& p : pools) total *= p.size();
    const std::size_t cap = 200;
    for (std::size_t t = 0; t < total && t < cap; ++t) {
      std::vector<DesignPtr> args;
      std::size_t r = t;
      for (auto& p : pools) {
        args.push_back(p[r % p.size()]);
        r /= p.size();
      }
      DesignPtr d = conj({pred(var(kInteractionVar), a, std::move(args))});
      if (design_size(d) <= size) out.push_back(d);
    }
  }
  sort_dedup(out);
  return out;
}

bool member_negative(const DesignPtr& n, const BehaviourPtr& b, Engine& eng,
                     std::uint64_t fuel) {
  if (b->pol != Polarity::Negative)
    throw Error("member_negative requires a negative behaviour");
  Classification cl = classify(n, eng);
  if (!cl.is_proof() || !cl.closed)
    throw Error("member_negative requires an atomic negative proof");
  DesignPtr r = n;
  while (as_ref(r)) r = unfold(r, eng);
  auto* s = as_sum(r);
  if (!s) throw Error("member_negative requires an abstraction");
  declare_behaviour_names(b, eng.sig);
  for (auto& [a, avars] : b->conn.actions) {
    auto it = s->branches.find(a);
    // An absent branch is the Omega component: underivable (unless the
    // action list is empty, which this loop then never reaches).
    if (it == s->branches.end()) return false;
    if (it->second.binders.size() != avars.size())
      throw Error("arity mismatch at action '" + a + "'");
    auto idx = b->conn.indices(a);
    Context ctx;
    for (std::size_t j = 0; j < idx.size(); ++j)
      ctx.positives.emplace_back(it->second.binders[j], b->args[idx[j]]);
    Sequent seq{it->second.body, std::move(ctx)};
    if (prove(seq, eng, fuel).kind != ProveResult::Derived) return false;
  }
  return true;
}

EntailReport entails_sampled(const DesignPtr& d, const Context& ctx, Engine& eng,
                             std::uint64_t fuel, std::size_t samples) {
  EntailReport rep;
  std::set<Var> ctxvars;
  for (auto& [x, b] : ctx.positives) ctxvars.insert(x);
  for (auto& v : free_vars(d, eng.defs))
    if (!ctxvars.count(v))
      throw Error("free variable '" + v + "' outside the context");
  bool neg_subject = ctx.is_negative();
  if (neg_subject != is_negative(d, eng.defs))
    throw Error("design and context polarities disagree");

  const std::size_t budget = 6;
  std::vector<std::vector<DesignPtr>> pools;  // one per positive entry
  for (auto& [x, b] : ctx.positives)
    pools.push_back(members_negative(dual(b), eng, budget));
  std::vector<DesignPtr> qpool;  // counter-designs for the negative slot
  if (neg_subject) {
    qpool = ethics_members(dual(ctx.negative), eng, budget);
    qpool.insert(qpool.begin(), daimon());
  }

  std::size_t total = 1;
  for (auto& p : pools) total *= p.size();
  if (neg_subject) total *= qpool.size();

  bool saw_unknown = false;
  // A finite counter-design pool smaller than the requested sample count is
  // cycled: every requested probe runs, revisiting tuples when needed.
  for (std::size_t t = 0; total > 0 && rep.samples_run < samples; ++t) {
    std::size_t r = t % total;
    std::map<Var, DesignPtr> bind;
    std::string desc;
    for (std::size_t i = 0; i < pools.size(); ++i) {
      const DesignPtr& k = pools[i][r % pools[i].size()];
      r /= pools[i].size();
      bind[ctx.positives[i].first] = k;
      desc += ctx.positives[i].first + " := " + print_design(k) + "; ";
    }
    DesignPtr closed = bind.empty() ? d : substitute(d, bind, eng);
    if (neg_subject) {
      const DesignPtr& q = qpool[r % qpool.size()];
      desc += "x0-counter := " + print_design(q) + "; ";
      closed = substitute(q, {{kInteractionVar, closed}}, eng);
    }
    ++rep.samples_run;
    EvalOutcome o = evaluate_closed(closed, eng, fuel);
    if (o.verdict == Verdict::Omega) {
      rep.verdict = Verdict::Omega;
      rep.failure = desc + "interaction diverges";
      return rep;
    }
    if (o.verdict == Verdict::Unknown) saw_unknown = true;
  }
  rep.verdict = saw_unknown ? Verdict::Unknown : Verdict::Daimon;
  return rep;
}

}  // namespace ludics
