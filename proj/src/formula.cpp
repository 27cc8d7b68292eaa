#include "mumall/formula.hpp"

#include <cassert>
#include <stdexcept>

namespace mumall {

FormulaPtr Formula::binary(Conn c, FormulaPtr lhs, FormulaPtr rhs) {
  assert(c == Conn::AndNeg || c == Conn::OrNeg || c == Conn::AndPos ||
         c == Conn::OrPos || c == Conn::Imp);
  auto f = std::make_shared<Formula>();
  f->tag_ = c;
  f->lhs_ = std::move(lhs);
  f->rhs_ = std::move(rhs);
  return f;
}

FormulaPtr Formula::unit(Conn c) {
  assert(c == Conn::TrueNeg || c == Conn::FalseNeg || c == Conn::TruePos ||
         c == Conn::FalsePos);
  auto f = std::make_shared<Formula>();
  f->tag_ = c;
  return f;
}

FormulaPtr Formula::eq(TermPtr lhs, TermPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->tag_ = Conn::Eq;
  f->t_ = std::move(lhs);
  f->s_ = std::move(rhs);
  return f;
}

FormulaPtr Formula::neq(TermPtr lhs, TermPtr rhs) {
  auto f = std::make_shared<Formula>();
  f->tag_ = Conn::Neq;
  f->t_ = std::move(lhs);
  f->s_ = std::move(rhs);
  return f;
}

FormulaPtr Formula::quant(Conn c, std::string hint, FormulaPtr body) {
  assert(c == Conn::All || c == Conn::Ex);
  auto f = std::make_shared<Formula>();
  f->tag_ = c;
  f->hint_ = std::move(hint);
  f->rhs_ = std::move(body);
  return f;
}

FormulaPtr Formula::fixpoint(Conn c, AbstractionPtr abs, std::vector<TermPtr> args) {
  assert(c == Conn::Mu || c == Conn::Nu);
  if (static_cast<int>(args.size()) != abs->arity())
    throw std::runtime_error("fixed point applied to wrong number of arguments");
  auto f = std::make_shared<Formula>();
  f->tag_ = c;
  f->abs_ = std::move(abs);
  f->args_ = std::move(args);
  return f;
}

FormulaPtr Formula::pred_var(int up, std::vector<TermPtr> args, std::string hint) {
  auto f = std::make_shared<Formula>();
  f->tag_ = Conn::PredVar;
  f->up_ = up;
  f->args_ = std::move(args);
  f->hint_ = std::move(hint);
  return f;
}

FormulaPtr Formula::named(std::string name, std::vector<TermPtr> args) {
  auto f = std::make_shared<Formula>();
  f->tag_ = Conn::Named;
  f->hint_ = std::move(name);
  f->args_ = std::move(args);
  return f;
}

namespace {

int compare_args(const std::vector<TermPtr>& a, const std::vector<TermPtr>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (int c = compare(a[i], b[i])) return c;
  return 0;
}

}  // namespace

int compare(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->tag() != b->tag())
    return static_cast<int>(a->tag()) < static_cast<int>(b->tag()) ? -1 : 1;
  switch (a->tag()) {
    case Conn::TrueNeg:
    case Conn::FalseNeg:
    case Conn::TruePos:
    case Conn::FalsePos:
      return 0;
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      if (int c = compare(a->lhs(), b->lhs())) return c;
      return compare(a->rhs(), b->rhs());
    case Conn::Eq:
    case Conn::Neq:
      if (int c = compare(a->t(), b->t())) return c;
      return compare(a->s(), b->s());
    case Conn::All:
    case Conn::Ex:
      return compare(a->body(), b->body());
    case Conn::Mu:
    case Conn::Nu: {
      if (a->abs()->arity() != b->abs()->arity())
        return a->abs()->arity() < b->abs()->arity() ? -1 : 1;
      if (int c = compare(a->abs()->body(), b->abs()->body())) return c;
      return compare_args(a->args(), b->args());
    }
    case Conn::PredVar:
      if (a->up() != b->up()) return a->up() < b->up() ? -1 : 1;
      return compare_args(a->args(), b->args());
    case Conn::Named:
      if (int c = a->name().compare(b->name())) return c;
      return compare_args(a->args(), b->args());
  }
  return 0;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) { return compare(a, b) == 0; }

int connective_count(const FormulaPtr& f) {
  switch (f->tag()) {
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return 1 + connective_count(f->lhs()) + connective_count(f->rhs());
    case Conn::All:
    case Conn::Ex:
      return 1 + connective_count(f->body());
    case Conn::Mu:
    case Conn::Nu:
      return 1 + connective_count(f->abs()->body());
    default:
      return 1;
  }
}

void collect_free_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->tag()) {
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      collect_free_vars(f->lhs(), out);
      collect_free_vars(f->rhs(), out);
      return;
    case Conn::Eq:
    case Conn::Neq:
      collect_free_vars(f->t(), out);
      collect_free_vars(f->s(), out);
      return;
    case Conn::All:
    case Conn::Ex:
      collect_free_vars(f->body(), out);
      return;
    case Conn::Mu:
    case Conn::Nu:
      collect_free_vars(f->abs()->body(), out);
      for (const auto& t : f->args()) collect_free_vars(t, out);
      return;
    case Conn::PredVar:
    case Conn::Named:
      for (const auto& t : f->args()) collect_free_vars(t, out);
      return;
    default:
      return;
  }
}

bool contains_fixpoint(const FormulaPtr& f) {
  switch (f->tag()) {
    case Conn::Mu:
    case Conn::Nu:
      return true;
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return contains_fixpoint(f->lhs()) || contains_fixpoint(f->rhs());
    case Conn::All:
    case Conn::Ex:
      return contains_fixpoint(f->body());
    default:
      return false;
  }
}

bool contains_named(const FormulaPtr& f) {
  switch (f->tag()) {
    case Conn::Named:
      return true;
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return contains_named(f->lhs()) || contains_named(f->rhs());
    case Conn::All:
    case Conn::Ex:
      return contains_named(f->body());
    case Conn::Mu:
    case Conn::Nu:
      return contains_named(f->abs()->body());
    default:
      return false;
  }
}

namespace {

bool free_pred_var_at(const FormulaPtr& f, int depth) {
  switch (f->tag()) {
    case Conn::PredVar:
      return f->up() >= depth;
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return free_pred_var_at(f->lhs(), depth) || free_pred_var_at(f->rhs(), depth);
    case Conn::All:
    case Conn::Ex:
      return free_pred_var_at(f->body(), depth);
    case Conn::Mu:
    case Conn::Nu:
      return free_pred_var_at(f->abs()->body(), depth + 1);
    default:
      return false;
  }
}

}  // namespace

bool contains_free_pred_var(const FormulaPtr& f) { return free_pred_var_at(f, 0); }

FormulaPtr apply_substitution(const Substitution& theta, const FormulaPtr& f) {
  if (theta.empty()) return f;
  switch (f->tag()) {
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return Formula::binary(f->tag(), apply_substitution(theta, f->lhs()),
                             apply_substitution(theta, f->rhs()));
    case Conn::Eq:
      return Formula::eq(apply_substitution(theta, f->t()),
                         apply_substitution(theta, f->s()));
    case Conn::Neq:
      return Formula::neq(apply_substitution(theta, f->t()),
                          apply_substitution(theta, f->s()));
    case Conn::All:
    case Conn::Ex:
      return Formula::quant(f->tag(), f->hint(), apply_substitution(theta, f->body()));
    case Conn::Mu:
    case Conn::Nu: {
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const auto& t : f->args()) args.push_back(apply_substitution(theta, t));
      // Stored abstractions are closed; no need to descend into the body.
      return Formula::fixpoint(f->tag(), f->abs(), std::move(args));
    }
    case Conn::PredVar: {
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const auto& t : f->args()) args.push_back(apply_substitution(theta, t));
      return Formula::pred_var(f->up(), std::move(args), f->hint());
    }
    case Conn::Named: {
      std::vector<TermPtr> args;
      args.reserve(f->args().size());
      for (const auto& t : f->args()) args.push_back(apply_substitution(theta, t));
      return Formula::named(f->name(), std::move(args));
    }
    default:
      return f;
  }
}

namespace {

// Instantiates one term-binder group (and optionally the predicate binder
// of an abstraction). `tdepth` / `pdepth` track how many binder groups lie
// between the current node and the one being opened.
struct Instantiate {
  const std::vector<TermPtr>& terms;
  AbstractionPtr self_abs;  // when set, PredVar hits become fixpoints
  Conn self_tag = Conn::Mu;
  AbstractionPtr plug_abs;  // when set, PredVar hits get this applied
  bool open_pred = false;

  TermPtr term(const TermPtr& t, int tdepth) const {
    switch (t->kind()) {
      case Term::Kind::Free:
        return t;
      case Term::Kind::Bound:
        if (t->up() == tdepth) {
          assert(t->slot() >= 0 && t->slot() < static_cast<int>(terms.size()));
          return terms[t->slot()];
        }
        if (t->up() > tdepth) return Term::bound(t->up() - 1, t->slot(), t->hint());
        return t;
      case Term::Kind::App: {
        std::vector<TermPtr> args;
        args.reserve(t->args().size());
        for (const auto& a : t->args()) args.push_back(term(a, tdepth));
        return Term::app(t->name(), std::move(args));
      }
    }
    return t;
  }

  std::vector<TermPtr> term_list(const std::vector<TermPtr>& ts, int tdepth) const {
    std::vector<TermPtr> out;
    out.reserve(ts.size());
    for (const auto& t : ts) out.push_back(term(t, tdepth));
    return out;
  }

  FormulaPtr formula(const FormulaPtr& f, int tdepth, int pdepth) const {
    switch (f->tag()) {
      case Conn::AndNeg:
      case Conn::OrNeg:
      case Conn::AndPos:
      case Conn::OrPos:
      case Conn::Imp:
        return Formula::binary(f->tag(), formula(f->lhs(), tdepth, pdepth),
                               formula(f->rhs(), tdepth, pdepth));
      case Conn::Eq:
        return Formula::eq(term(f->t(), tdepth), term(f->s(), tdepth));
      case Conn::Neq:
        return Formula::neq(term(f->t(), tdepth), term(f->s(), tdepth));
      case Conn::All:
      case Conn::Ex:
        return Formula::quant(f->tag(), f->hint(), formula(f->body(), tdepth + 1, pdepth));
      case Conn::Mu:
      case Conn::Nu: {
        // Closed stored abstraction: binder-group bookkeeping still applies
        // to any bound occurrences that happen to point outward.
        auto body = formula(f->abs()->body(), tdepth + 1, pdepth + 1);
        AbstractionPtr abs = body.get() == f->abs()->body().get()
                                 ? f->abs()
                                 : std::make_shared<Abstraction>(Abstraction{
                                       f->abs()->pred_hint, f->abs()->param_hints, body});
        return Formula::fixpoint(f->tag(), abs, term_list(f->args(), tdepth));
      }
      case Conn::PredVar: {
        auto args = term_list(f->args(), tdepth);
        if (open_pred && f->up() == pdepth) {
          if (self_abs) return Formula::fixpoint(self_tag, self_abs, std::move(args));
          if (plug_abs) return apply_abstraction(*plug_abs, args);
          throw std::runtime_error("predicate variable escapes its abstraction");
        }
        int up = f->up();
        if (open_pred && up > pdepth) --up;
        return Formula::pred_var(up, std::move(args), f->hint());
      }
      case Conn::Named:
        return Formula::named(f->name(), term_list(f->args(), tdepth));
      default:
        return f;
    }
  }
};

}  // namespace

FormulaPtr open_quantifier(const FormulaPtr& body, const TermPtr& t) {
  std::vector<TermPtr> terms{t};
  Instantiate inst{terms};
  inst.open_pred = false;
  return inst.formula(body, 0, 0);
}

FormulaPtr apply_abstraction(const Abstraction& abs, const std::vector<TermPtr>& args) {
  if (static_cast<int>(args.size()) != abs.arity())
    throw std::runtime_error("abstraction applied to wrong number of arguments");
  Instantiate inst{args};
  inst.open_pred = true;
  return inst.formula(abs.body, 0, 0);
}

FormulaPtr apply_abstraction_with(const Abstraction& abs, const std::vector<TermPtr>& args,
                                  const AbstractionPtr& plug) {
  if (static_cast<int>(args.size()) != abs.arity())
    throw std::runtime_error("abstraction applied to wrong number of arguments");
  Instantiate inst{args};
  inst.open_pred = true;
  inst.plug_abs = plug;
  return inst.formula(abs.body, 0, 0);
}

FormulaPtr unfold(const FormulaPtr& fixpoint) {
  if (!fixpoint->is_fixpoint())
    throw std::runtime_error("unfold requires a fixed-point formula");
  Instantiate inst{fixpoint->args()};
  inst.open_pred = true;
  inst.self_abs = fixpoint->abs();
  inst.self_tag = fixpoint->tag();
  return inst.formula(fixpoint->abs()->body(), 0, 0);
}

namespace {

FormulaPtr dual_at(const FormulaPtr& f, int pdepth) {
  switch (f->tag()) {
    case Conn::AndNeg:
      return Formula::binary(Conn::OrPos, dual_at(f->lhs(), pdepth), dual_at(f->rhs(), pdepth));
    case Conn::OrPos:
      return Formula::binary(Conn::AndNeg, dual_at(f->lhs(), pdepth), dual_at(f->rhs(), pdepth));
    case Conn::AndPos:
      return Formula::binary(Conn::OrNeg, dual_at(f->lhs(), pdepth), dual_at(f->rhs(), pdepth));
    case Conn::OrNeg:
      return Formula::binary(Conn::AndPos, dual_at(f->lhs(), pdepth), dual_at(f->rhs(), pdepth));
    case Conn::TrueNeg:
      return Formula::unit(Conn::FalsePos);
    case Conn::FalsePos:
      return Formula::unit(Conn::TrueNeg);
    case Conn::TruePos:
      return Formula::unit(Conn::FalseNeg);
    case Conn::FalseNeg:
      return Formula::unit(Conn::TruePos);
    case Conn::Eq:
      return Formula::neq(f->t(), f->s());
    case Conn::Neq:
      return Formula::eq(f->t(), f->s());
    case Conn::All:
      return Formula::quant(Conn::Ex, f->hint(), dual_at(f->body(), pdepth));
    case Conn::Ex:
      return Formula::quant(Conn::All, f->hint(), dual_at(f->body(), pdepth));
    case Conn::Mu:
    case Conn::Nu: {
      auto abs = std::make_shared<Abstraction>(Abstraction{
          f->abs()->pred_hint, f->abs()->param_hints, dual_at(f->abs()->body(), pdepth + 1)});
      return Formula::fixpoint(f->tag() == Conn::Mu ? Conn::Nu : Conn::Mu, abs, f->args());
    }
    case Conn::PredVar:
      if (f->up() >= pdepth)
        throw std::runtime_error("dual applied to a formula with a free predicate variable");
      return f;  // kept positive under its abstraction
    case Conn::Imp:
      throw std::runtime_error("dual requires an implication-free formula");
    case Conn::Named:
      throw std::runtime_error("dual requires a desugared formula");
  }
  return f;
}

}  // namespace

FormulaPtr dual(const FormulaPtr& f) { return dual_at(f, 0); }

FormulaPtr eliminate_imp(const FormulaPtr& f) {
  switch (f->tag()) {
    case Conn::Imp:
      return Formula::binary(Conn::OrNeg, dual(eliminate_imp(f->lhs())),
                             eliminate_imp(f->rhs()));
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
      return Formula::binary(f->tag(), eliminate_imp(f->lhs()), eliminate_imp(f->rhs()));
    case Conn::All:
    case Conn::Ex:
      return Formula::quant(f->tag(), f->hint(), eliminate_imp(f->body()));
    case Conn::Mu:
    case Conn::Nu: {
      auto abs = std::make_shared<Abstraction>(Abstraction{
          f->abs()->pred_hint, f->abs()->param_hints, eliminate_imp(f->abs()->body())});
      return Formula::fixpoint(f->tag(), abs, f->args());
    }
    default:
      return f;
  }
}

namespace {

bool monotonic_at(const FormulaPtr& f, int target, int sign) {
  switch (f->tag()) {
    case Conn::PredVar:
      return f->up() != target || sign > 0;
    case Conn::Imp:
      return monotonic_at(f->lhs(), target, -sign) && monotonic_at(f->rhs(), target, sign);
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
      return monotonic_at(f->lhs(), target, sign) && monotonic_at(f->rhs(), target, sign);
    case Conn::All:
    case Conn::Ex:
      return monotonic_at(f->body(), target, sign);
    case Conn::Mu:
    case Conn::Nu:
      return monotonic_at(f->abs()->body(), target + 1, sign);
    default:
      return true;
  }
}

}  // namespace

bool check_monotonic(const Abstraction& abs) {
  return monotonic_at(abs.body, 0, +1);
}

void Definitions::define(const std::string& name, Conn polarity, AbstractionPtr abs) {
  assert(polarity == Conn::Mu || polarity == Conn::Nu);
  if (index_.count(name))
    throw std::runtime_error("predicate '" + name + "' defined twice");
  index_.emplace(name, entries_.size());
  entries_.emplace_back(name, Entry{polarity, std::move(abs)});
}

const Definitions::Entry* Definitions::find(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &entries_[it->second].second;
}

FormulaPtr desugar(const FormulaPtr& f, const Definitions& defs) {
  switch (f->tag()) {
    case Conn::Named: {
      const auto* entry = defs.find(f->name());
      if (!entry) throw DesugarError("unbound predicate name '" + f->name() + "'");
      if (entry->abs->arity() != static_cast<int>(f->args().size()))
        throw DesugarError("predicate '" + f->name() + "' expects " +
                           std::to_string(entry->abs->arity()) + " arguments, got " +
                           std::to_string(f->args().size()));
      return Formula::fixpoint(entry->polarity, entry->abs, f->args());
    }
    case Conn::AndNeg:
    case Conn::OrNeg:
    case Conn::AndPos:
    case Conn::OrPos:
    case Conn::Imp:
      return Formula::binary(f->tag(), desugar(f->lhs(), defs), desugar(f->rhs(), defs));
    case Conn::All:
    case Conn::Ex:
      return Formula::quant(f->tag(), f->hint(), desugar(f->body(), defs));
    case Conn::Mu:
    case Conn::Nu: {
      auto body = desugar(f->abs()->body(), defs);
      AbstractionPtr abs =
          body.get() == f->abs()->body().get()
              ? f->abs()
              : std::make_shared<Abstraction>(
                    Abstraction{f->abs()->pred_hint, f->abs()->param_hints, body});
      return Formula::fixpoint(f->tag(), abs, f->args());
    }
    default:
      return f;
  }
}

}  // namespace mumall
