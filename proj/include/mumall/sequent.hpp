#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mumall/formula.hpp"

namespace mumall {

// A two-sided sequent X; Gamma |- Delta. The eigenvariable context X is an
// ordered set of names; both formula multisets are kept sorted under the
// canonical syntax order so positions are stable and comparisons are
// deterministic.
class Sequent {
public:
  Sequent() = default;
  Sequent(std::vector<std::string> vars, std::vector<FormulaPtr> left,
          std::vector<FormulaPtr> right);

  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<FormulaPtr>& left() const { return left_; }
  const std::vector<FormulaPtr>& right() const { return right_; }

  bool has_var(const std::string& name) const;
  std::set<std::string> var_set() const;

  // All free variables of both sides lie inside vars().
  bool well_scoped() const;

  int total_connectives() const;
  bool fixpoint_free() const;

  bool operator==(const Sequent& other) const;

private:
  std::vector<std::string> vars_;
  std::vector<FormulaPtr> left_, right_;
};

int compare(const Sequent& a, const Sequent& b);

// A stable text key for the alpha-equivalence class of a sequent:
// eigenvariables are renamed canonically and the multisets re-sorted. Used
// for tabling; ties between structurally indistinguishable formulas are
// resolved by bounded minimization.
std::string canonical_key(const Sequent& s);

// True when some bijective renaming of eigenvariables maps `a` onto `b`
// (as multisets on both sides).
bool alpha_equal(const Sequent& a, const Sequent& b);

}  // namespace mumall
