#include "mumall/sequent.hpp"

#include <algorithm>
#include <map>

namespace mumall {

namespace {

bool formula_less(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) < 0; }

}  // namespace

Sequent::Sequent(std::vector<std::string> vars, std::vector<FormulaPtr> left,
                 std::vector<FormulaPtr> right)
    : left_(std::move(left)), right_(std::move(right)) {
  for (auto& v : vars)
    if (std::find(vars_.begin(), vars_.end(), v) == vars_.end()) vars_.push_back(v);
  std::sort(left_.begin(), left_.end(), formula_less);
  std::sort(right_.begin(), right_.end(), formula_less);
}

bool Sequent::has_var(const std::string& name) const {
  return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
}

std::set<std::string> Sequent::var_set() const {
  return std::set<std::string>(vars_.begin(), vars_.end());
}

bool Sequent::well_scoped() const {
  std::set<std::string> free;
  for (const auto& f : left_) collect_free_vars(f, free);
  for (const auto& f : right_) collect_free_vars(f, free);
  auto vars = var_set();
  for (const auto& v : free)
    if (!vars.count(v)) return false;
  return true;
}

int Sequent::total_connectives() const {
  int n = 0;
  for (const auto& f : left_) n += connective_count(f);
  for (const auto& f : right_) n += connective_count(f);
  return n;
}

bool Sequent::fixpoint_free() const {
  for (const auto& f : left_)
    if (contains_fixpoint(f)) return false;
  for (const auto& f : right_)
    if (contains_fixpoint(f)) return false;
  return true;
}

bool Sequent::operator==(const Sequent& other) const { return compare(*this, other) == 0; }

int compare(const Sequent& a, const Sequent& b) {
  if (a.vars().size() != b.vars().size())
    return a.vars().size() < b.vars().size() ? -1 : 1;
  for (size_t i = 0; i < a.vars().size(); ++i)
    if (int c = a.vars()[i].compare(b.vars()[i])) return c;
  auto cmp_side = [](const std::vector<FormulaPtr>& x, const std::vector<FormulaPtr>& y) {
    if (x.size() != y.size()) return x.size() < y.size() ? -1 : 1;
    for (size_t i = 0; i < x.size(); ++i)
      if (int c = compare(x[i], y[i])) return c;
    return 0;
  };
  if (int c = cmp_side(a.left(), b.left())) return c;
  return cmp_side(a.right(), b.right());
}

namespace {

// Serializers for tabling keys. When `names` is null every free variable
// prints as "*"; otherwise unseen variables are assigned v0, v1, ... in
// encounter order.
void key_term(const TermPtr& t, std::map<std::string, int>* names, std::string& out) {
  switch (t->kind()) {
    case Term::Kind::Free:
      if (!names) {
        out += '*';
      } else {
        auto [it, inserted] = names->emplace(t->name(), static_cast<int>(names->size()));
        out += 'v';
        out += std::to_string(it->second);
      }
      return;
    case Term::Kind::Bound:
      out += 'b';
      out += std::to_string(t->up());
      out += '.';
      out += std::to_string(t->slot());
      return;
    case Term::Kind::App:
      out += t->name();
      if (!t->args().empty()) {
        out += '(';
        for (size_t i = 0; i < t->args().size(); ++i) {
          if (i) out += ',';
          key_term(t->args()[i], names, out);
        }
        out += ')';
      }
      return;
  }
}

void key_formula(const FormulaPtr& f, std::map<std::string, int>* names, std::string& out) {
  out += std::to_string(static_cast<int>(f->tag()));
  out += '[';
  switch (f->tag()) {
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      key_formula(f->lhs(), names, out);
      out += ';';
      key_formula(f->rhs(), names, out);
      break;
    case Conn::Eq:
    case Conn::Neq:
      key_term(f->t(), names, out);
      out += ';';
      key_term(f->s(), names, out);
      break;
    case Conn::All:
    case Conn::Ex:
      key_formula(f->body(), names, out);
      break;
    case Conn::Mu:
    case Conn::Nu:
      out += std::to_string(f->abs()->arity());
      out += ':';
      key_formula(f->abs()->body(), names, out);
      for (const auto& t : f->args()) {
        out += ';';
        key_term(t, names, out);
      }
      break;
    case Conn::PredVar:
      out += 'p';
      out += std::to_string(f->up());
      for (const auto& t : f->args()) {
        out += ';';
        key_term(t, names, out);
      }
      break;
    case Conn::Named:
      out += f->name();
      for (const auto& t : f->args()) {
        out += ';';
        key_term(t, names, out);
      }
      break;
    default:
      break;
  }
  out += ']';
}

std::string blind_key(const FormulaPtr& f) {
  std::string out;
  key_formula(f, nullptr, out);
  return out;
}

std::string render_key(const std::vector<const FormulaPtr*>& left,
                       const std::vector<const FormulaPtr*>& right, size_t var_count) {
  std::map<std::string, int> names;
  std::string out;
  out += std::to_string(var_count);
  out += '|';
  for (const auto* f : left) {
    key_formula(*f, &names, out);
    out += ',';
  }
  out += '|';
  for (const auto* f : right) {
    key_formula(*f, &names, out);
    out += ',';
  }
  return out;
}

// Enumerates permutation choices within tie groups, bounded; returns the
// lexicographically least rendering.
struct KeyBuilder {
  std::vector<std::pair<std::string, const FormulaPtr*>> left, right;
  size_t var_count = 0;
  long budget = 64;
  std::string best;

  static std::vector<std::vector<const FormulaPtr*>> groups(
      std::vector<std::pair<std::string, const FormulaPtr*>>& side) {
    std::sort(side.begin(), side.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<const FormulaPtr*>> out;
    for (size_t i = 0; i < side.size();) {
      size_t j = i;
      while (j < side.size() && side[j].first == side[i].first) ++j;
      std::vector<const FormulaPtr*> g;
      for (size_t k = i; k < j; ++k) g.push_back(side[k].second);
      out.push_back(std::move(g));
      i = j;
    }
    return out;
  }

  std::string run() {
    auto lg = groups(left);
    auto rg = groups(right);
    long combos = 1;
    auto fact = [](size_t n) {
      long f = 1;
      for (size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
      return f;
    };
    for (const auto& g : lg) combos *= fact(g.size());
    for (const auto& g : rg) combos *= fact(g.size());
    std::vector<const FormulaPtr*> lorder, rorder;
    if (combos > budget || combos <= 0) {
      // Fall back to the stable order; still deterministic, merely a
      // coarser equivalence for pathological ties.
      for (auto& g : lg) lorder.insert(lorder.end(), g.begin(), g.end());
      for (auto& g : rg) rorder.insert(rorder.end(), g.begin(), g.end());
      return render_key(lorder, rorder, var_count);
    }
    for (auto& g : lg) std::sort(g.begin(), g.end());
    for (auto& g : rg) std::sort(g.begin(), g.end());
    enumerate(lg, rg, 0, true, lorder, rorder);
    return best;
  }

  void enumerate(std::vector<std::vector<const FormulaPtr*>>& lg,
                 std::vector<std::vector<const FormulaPtr*>>& rg, size_t idx, bool on_left,
                 std::vector<const FormulaPtr*>& lorder,
                 std::vector<const FormulaPtr*>& rorder) {
    auto& gs = on_left ? lg : rg;
    if (idx == gs.size()) {
      if (on_left) {
        enumerate(lg, rg, 0, false, lorder, rorder);
      } else {
        std::string key = render_key(lorder, rorder, var_count);
        if (best.empty() || key < best) best = key;
      }
      return;
    }
    auto& order = on_left ? lorder : rorder;
    auto g = gs[idx];
    std::sort(g.begin(), g.end());
    do {
      size_t mark = order.size();
      order.insert(order.end(), g.begin(), g.end());
      enumerate(lg, rg, idx + 1, on_left, lorder, rorder);
      order.resize(mark);
    } while (std::next_permutation(g.begin(), g.end()));
  }
};

}  // namespace

std::string canonical_key(const Sequent& s) {
  KeyBuilder kb;
  kb.var_count = s.vars().size();
  for (const auto& f : s.left()) kb.left.emplace_back(blind_key(f), &f);
  for (const auto& f : s.right()) kb.right.emplace_back(blind_key(f), &f);
  return kb.run();
}

namespace {

bool match_term(const TermPtr& a, const TermPtr& b, std::map<std::string, std::string>& fwd,
                std::map<std::string, std::string>& rev) {
  if (a->kind() != b->kind()) return false;
  switch (a->kind()) {
    case Term::Kind::Free: {
      auto fit = fwd.find(a->name());
      auto rit = rev.find(b->name());
      if (fit == fwd.end() && rit == rev.end()) {
        fwd.emplace(a->name(), b->name());
        rev.emplace(b->name(), a->name());
        return true;
      }
      return fit != fwd.end() && rit != rev.end() && fit->second == b->name() &&
             rit->second == a->name();
    }
    case Term::Kind::Bound:
      return a->up() == b->up() && a->slot() == b->slot();
    case Term::Kind::App:
      if (a->name() != b->name() || a->args().size() != b->args().size()) return false;
      for (size_t i = 0; i < a->args().size(); ++i)
        if (!match_term(a->args()[i], b->args()[i], fwd, rev)) return false;
      return true;
  }
  return false;
}

bool match_formula(const FormulaPtr& a, const FormulaPtr& b,
                   std::map<std::string, std::string>& fwd,
                   std::map<std::string, std::string>& rev) {
  if (a->tag() != b->tag()) return false;
  switch (a->tag()) {
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return match_formula(a->lhs(), b->lhs(), fwd, rev) &&
             match_formula(a->rhs(), b->rhs(), fwd, rev);
    case Conn::Eq:
    case Conn::Neq:
      return match_term(a->t(), b->t(), fwd, rev) && match_term(a->s(), b->s(), fwd, rev);
    case Conn::All:
    case Conn::Ex:
      return match_formula(a->body(), b->body(), fwd, rev);
    case Conn::Mu:
    case Conn::Nu: {
      if (a->abs()->arity() != b->abs()->arity()) return false;
      if (!match_formula(a->abs()->body(), b->abs()->body(), fwd, rev)) return false;
      if (a->args().size() != b->args().size()) return false;
      for (size_t i = 0; i < a->args().size(); ++i)
        if (!match_term(a->args()[i], b->args()[i], fwd, rev)) return false;
      return true;
    }
    case Conn::PredVar:
    case Conn::Named: {
      if (a->tag() == Conn::PredVar && a->up() != b->up()) return false;
      if (a->tag() == Conn::Named && a->name() != b->name()) return false;
      if (a->args().size() != b->args().size()) return false;
      for (size_t i = 0; i < a->args().size(); ++i)
        if (!match_term(a->args()[i], b->args()[i], fwd, rev)) return false;
      return true;
    }
    default:
      return true;
  }
}

bool match_side(const std::vector<FormulaPtr>& as, const std::vector<FormulaPtr>& bs,
                size_t idx, std::vector<bool>& used, std::map<std::string, std::string>& fwd,
                std::map<std::string, std::string>& rev,
                const std::function<bool(std::map<std::string, std::string>&,
                                         std::map<std::string, std::string>&)>& next) {
  if (idx == as.size()) return next(fwd, rev);
  for (size_t j = 0; j < bs.size(); ++j) {
    if (used[j]) continue;
    auto fwd2 = fwd;
    auto rev2 = rev;
    if (!match_formula(as[idx], bs[j], fwd2, rev2)) continue;
    used[j] = true;
    if (match_side(as, bs, idx + 1, used, fwd2, rev2, next)) {
      used[j] = false;
      fwd = fwd2;
      rev = rev2;
      return true;
    }
    used[j] = false;
  }
  return false;
}

}  // namespace

bool alpha_equal(const Sequent& a, const Sequent& b) {
  if (a.vars().size() != b.vars().size()) return false;
  if (a.left().size() != b.left().size() || a.right().size() != b.right().size())
    return false;
  std::map<std::string, std::string> fwd, rev;
  std::vector<bool> used_l(b.left().size(), false);
  return match_side(
      a.left(), b.left(), 0, used_l, fwd, rev,
      [&](std::map<std::string, std::string>& f2, std::map<std::string, std::string>& r2) {
        std::vector<bool> used_r(b.right().size(), false);
        return match_side(a.right(), b.right(), 0, used_r, f2, r2,
                          [](std::map<std::string, std::string>&,
                             std::map<std::string, std::string>&) { return true; });
      });
}

}  // namespace mumall
