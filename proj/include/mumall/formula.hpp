#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mumall/term.hpp"

namespace mumall {

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// The polarized connective set. OrNeg / FalseNeg (linear par / bottom) are
// internal: the surface language never needs them, but keeping them makes
// dualization total.
enum class Conn {
  AndNeg,    // additive conjunction
  TrueNeg,   // its unit
  OrNeg,     // multiplicative disjunction (internal)
  FalseNeg,  // its unit (internal)
  AndPos,    // multiplicative conjunction
  TruePos,   // its unit
  OrPos,     // additive disjunction
  FalsePos,  // its unit
  Imp,       // intuitionistic-style implication, kept primitive
  Eq,
  Neq,
  All,
  Ex,
  Mu,
  Nu,
  PredVar,  // bound predicate variable applied to terms
  Named,    // surface-only reference to a defined predicate
};

// A monotonic predicate abstraction: binds one predicate variable plus a
// group of term parameters over its body.
struct Abstraction {
  std::string pred_hint;
  std::vector<std::string> param_hints;
  FormulaPtr body;

  int arity() const { return static_cast<int>(param_hints.size()); }
};
using AbstractionPtr = std::shared_ptr<const Abstraction>;

class Formula {
public:
  static FormulaPtr binary(Conn c, FormulaPtr lhs, FormulaPtr rhs);
  static FormulaPtr unit(Conn c);
  static FormulaPtr eq(TermPtr lhs, TermPtr rhs);
  static FormulaPtr neq(TermPtr lhs, TermPtr rhs);
  static FormulaPtr quant(Conn c, std::string hint, FormulaPtr body);
  static FormulaPtr fixpoint(Conn c, AbstractionPtr abs, std::vector<TermPtr> args);
  static FormulaPtr pred_var(int up, std::vector<TermPtr> args, std::string hint = "");
  static FormulaPtr named(std::string name, std::vector<TermPtr> args);

  Conn tag() const { return tag_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  const TermPtr& t() const { return t_; }
  const TermPtr& s() const { return s_; }
  const FormulaPtr& body() const { return rhs_; }
  const std::string& hint() const { return hint_; }
  const AbstractionPtr& abs() const { return abs_; }
  const std::vector<TermPtr>& args() const { return args_; }
  int up() const { return up_; }
  const std::string& name() const { return hint_; }  // Named / PredVar hint

  bool is_unit() const {
    return tag_ == Conn::TrueNeg || tag_ == Conn::FalseNeg ||
           tag_ == Conn::TruePos || tag_ == Conn::FalsePos;
  }
  bool is_fixpoint() const { return tag_ == Conn::Mu || tag_ == Conn::Nu; }

private:
  Conn tag_;
  FormulaPtr lhs_, rhs_;  // rhs doubles as quantifier body
  TermPtr t_, s_;
  std::string hint_;
  AbstractionPtr abs_;
  std::vector<TermPtr> args_;
  int up_ = 0;
};

int compare(const FormulaPtr& a, const FormulaPtr& b);
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// Number of formula nodes; the proof-size measure for the fragment without
// fixed points.
int connective_count(const FormulaPtr& f);

void collect_free_vars(const FormulaPtr& f, std::set<std::string>& out);
bool contains_fixpoint(const FormulaPtr& f);
bool contains_named(const FormulaPtr& f);
bool contains_free_pred_var(const FormulaPtr& f);

FormulaPtr apply_substitution(const Substitution& theta, const FormulaPtr& f);

// Opens one quantifier binder, replacing its bound occurrences with `t`
// (which must not itself contain bound occurrences).
FormulaPtr open_quantifier(const FormulaPtr& body, const TermPtr& t);

// Applies an abstraction whose body never mentions its own predicate
// variable (an invariant, say) to argument terms.
FormulaPtr apply_abstraction(const Abstraction& abs, const std::vector<TermPtr>& args);

// B S t: body of `abs` with parameters replaced by `args` and occurrences of
// the bound predicate variable replaced by applications of `plug`.
FormulaPtr apply_abstraction_with(const Abstraction& abs, const std::vector<TermPtr>& args,
                                  const AbstractionPtr& plug);

// B(muB) t / B(nuB) t: one unfolding of a fixed-point formula.
FormulaPtr unfold(const FormulaPtr& fixpoint);

// De Morgan dual. Requires an Imp-free formula with no free predicate
// variable; bound predicate variables stay positive.
FormulaPtr dual(const FormulaPtr& f);

// Rewrites Imp(A, B) into OrNeg(dual(A), B) throughout.
FormulaPtr eliminate_imp(const FormulaPtr& f);

// True when the abstraction's own predicate variable occurs only under an
// even number of implication left-hand sides.
bool check_monotonic(const Abstraction& abs);

// Named fixed-point definitions, in declaration order. Bodies are fully
// resolved: the only predicate references are each abstraction's own bound
// variable.
class Definitions {
public:
  struct Entry {
    Conn polarity;  // Mu or Nu
    AbstractionPtr abs;
  };

  void define(const std::string& name, Conn polarity, AbstractionPtr abs);
  const Entry* find(const std::string& name) const;
  const std::vector<std::pair<std::string, Entry>>& entries() const { return entries_; }

private:
  std::vector<std::pair<std::string, Entry>> entries_;
  std::map<std::string, size_t> index_;
};

// Replaces Named references with their fixed-point expansions. Errors
// (unbound name, arity mismatch) are reported by exception.
FormulaPtr desugar(const FormulaPtr& f, const Definitions& defs);

struct DesugarError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace mumall
