#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mumall/formula.hpp"

namespace mumall {

enum class RuleTag {
  AndNegR,
  AndNegL1,
  AndNegL2,
  OrL,
  FalsePosL,
  OrR1,
  OrR2,
  AndPosR,
  AndPosL,
  TruePosR,
  TruePosL,
  TrueNegR,
  OrNegR,
  OrNegL,
  FalseNegR,
  FalseNegL,
  ImpR,
  ImpL,
  ExR,
  AllR,
  AllL,
  ExL,
  EqR,
  NeqL,
  EqLClash,
  NeqRClash,
  EqLUnify,
  NeqRUnify,
  MuR,
  NuL,
  MuLUnfold,
  NuRUnfold,
  MuLInd,
  NuRCoind,
  MuInit,
  NuInit,
  Cut,
};

const char* rule_name(RuleTag tag);
std::optional<RuleTag> rule_from_name(const std::string& name);

// Premise count of a rule (0, 1 or 2).
int rule_arity(RuleTag tag);

bool is_left_rule(RuleTag tag);
bool is_unfold_rule(RuleTag tag);

// Partition of the side formulas for multiplicative two-premise rules:
// indices (into the conclusion's sorted sides, principal removed) routed to
// the first premise; everything else goes to the second.
struct Split {
  std::vector<int> left;
  std::vector<int> right;
};

struct RuleApp {
  RuleTag tag;
  int principal = 0;  // index into the principal side's sorted multiset

  TermPtr witness;           // ExR / AllL
  std::string fresh;         // AllR / ExL
  Substitution mgu;          // EqLUnify / NeqRUnify
  AbstractionPtr invariant;  // MuLInd / NuRCoind
  FormulaPtr cut_formula;    // Cut
  std::optional<Split> split;

  static RuleApp at(RuleTag tag, int principal) {
    RuleApp r;
    r.tag = tag;
    r.principal = principal;
    return r;
  }
};

struct RuleConfig {
  bool allow_cut = false;
  bool allow_init = false;
  bool allow_induction = true;
  bool enumerate_splits = true;
  int witness_depth = 3;
};

}  // namespace mumall
