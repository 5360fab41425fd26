#include "ludics/print.hpp"

#include <functional>

namespace ludics {

namespace {

// Deterministic friendly renaming for internally generated variables.
class Renamer {
public:
  explicit Renamer(std::set<std::string> taken) : taken_(std::move(taken)) {}

  std::string rename(const Var& v) {
    auto it = map_.find(v);
    if (it != map_.end()) return it->second;
    if (v.empty() || v[0] != kFreshPrefix) return v;
    static const char* pool[] = {"x", "y", "z", "w", "v", "u", "t", "s"};
    std::string pick;
    for (int round = 0;; ++round) {
      for (const char* p : pool) {
        pick = round == 0 ? std::string(p) : std::string(p) + std::to_string(round);
        if (!taken_.count(pick)) goto done;
      }
    }
  done:
    taken_.insert(pick);
    map_[v] = pick;
    return pick;
  }

private:
  std::set<std::string> taken_;
  std::map<Var, std::string> map_;
};

void collect_tokens(const DesignPtr& d, std::set<std::string>& out) {
  if (auto* c = as_conj(d)) {
    for (auto& s : c->conjuncts) collect_tokens(s, out);
  } else if (auto* p = as_pred(d)) {
    collect_tokens(p->head, out);
    for (auto& a : p->args) collect_tokens(a, out);
  } else if (auto* v = as_var(d)) {
    if (!v->var.empty() && v->var[0] != kFreshPrefix) out.insert(v->var);
  } else if (auto* s = as_sum(d)) {
    for (auto& [name, br] : s->branches) {
      for (auto& b : br.binders)
        if (!b.empty() && b[0] != kFreshPrefix) out.insert(b);
      collect_tokens(br.body, out);
    }
  } else if (auto* r = as_ref(d)) {
    for (auto& a : r->args)
      if (!a.empty() && a[0] != kFreshPrefix) out.insert(a);
  }
}

void emit(const DesignPtr& d, Renamer& rn, std::string& out);

void emit_pred_like(const DesignPtr& s, Renamer& rn, std::string& out) {
  if (auto* p = as_pred(s)) {
    emit(p->head, rn, out);
    out += "|";
    out += p->action == "up" ? "down" : p->action;
    if (!p->args.empty()) {
      out += "<";
      for (size_t i = 0; i < p->args.size(); ++i) {
        if (i) out += ", ";
        emit(p->args[i], rn, out);
      }
      out += ">";
    }
  } else {
    emit(s, rn, out);
  }
}

void emit(const DesignPtr& d, Renamer& rn, std::string& out) {
  if (is_omega(d)) {
    out += "omega";
  } else if (is_hole(d)) {
    out += "...";
  } else if (auto* c = as_conj(d)) {
    if (c->conjuncts.empty()) {
      out += "daimon";
    } else if (c->conjuncts.size() == 1) {
      emit_pred_like(c->conjuncts[0], rn, out);
    } else {
      out += "/\\{ ";
      for (size_t i = 0; i < c->conjuncts.size(); ++i) {
        if (i) out += ", ";
        emit_pred_like(c->conjuncts[i], rn, out);
      }
      out += " }";
    }
  } else if (as_pred(d)) {
    emit_pred_like(d, rn, out);
  } else if (auto* v = as_var(d)) {
    out += rn.rename(v->var);
  } else if (auto* s = as_sum(d)) {
    if (s->branches.empty()) {
      out += "{}";
      return;
    }
    out += "{ ";
    bool first = true;
    for (auto& [name, br] : s->branches) {
      if (!first) out += "; ";
      first = false;
      out += name;
      if (!br.binders.empty()) {
        out += "(";
        for (size_t i = 0; i < br.binders.size(); ++i) {
          if (i) out += ", ";
          out += rn.rename(br.binders[i]);
        }
        out += ")";
      }
      out += " => ";
      emit(br.body, rn, out);
    }
    out += " }";
  } else if (auto* r = as_ref(d)) {
    out += r->def;
    out += "(";
    for (size_t i = 0; i < r->args.size(); ++i) {
      if (i) out += ", ";
      out += rn.rename(r->args[i]);
    }
    out += ")";
  }
}

}  // namespace

std::string print_design(const DesignPtr& d) {
  std::set<std::string> taken;
  collect_tokens(d, taken);
  Renamer rn(std::move(taken));
  std::string out;
  emit(d, rn, out);
  return out;
}

std::string print_defs(const DefSystem& defs) {
  std::string out;
  for (auto& [name, df] : defs.all()) {
    std::set<std::string> taken;
    collect_tokens(df.body, taken);
    for (auto& p : df.params)
      if (!p.empty() && p[0] != kFreshPrefix) taken.insert(p);
    Renamer rn(std::move(taken));
    out += "def ";
    out += name;
    out += "(";
    for (size_t i = 0; i < df.params.size(); ++i) {
      if (i) out += ", ";
      out += rn.rename(df.params[i]);
    }
    out += ") = ";
    emit(df.body, rn, out);
    out += "\n";
  }
  return out;
}

}  // namespace ludics
