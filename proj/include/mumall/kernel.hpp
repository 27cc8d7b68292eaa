#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mumall/rules.hpp"
#include "mumall/sequent.hpp"

namespace mumall {

struct Expansion {
  bool ok = false;
  std::string error;
  std::vector<Sequent> premises;

  static Expansion fail(std::string why) { return {false, std::move(why), {}}; }
  static Expansion of(std::vector<Sequent> ps) { return {true, {}, std::move(ps)}; }
};

// Applies one inference rule to a conclusion sequent, producing its premise
// sequents (empty for axioms). All rule data is validated: principal
// position and connective, split well-formedness, mgu canonicity, witness
// scoping, eigenvariable freshness, invariant shape.
Expansion expand_rule(const Sequent& s, const RuleApp& r);

// Enumerates every rule application on `s` that expand_rule accepts, with
// existential/universal witnesses drawn from Sigma(X)-terms of depth at
// most config.witness_depth and context splits enumerated exhaustively.
// Induction, coinduction and cut carry unbounded data and are not
// enumerated here; the search layer synthesizes them.
std::vector<RuleApp> list_applicable_rules(const Sequent& s, const Signature& sig,
                                           const RuleConfig& config);

// All Sigma(X)-terms of depth <= max_depth, ordered by depth then by the
// canonical term order.
std::vector<TermPtr> enumerate_terms(const Signature& sig,
                                     const std::vector<std::string>& vars, int max_depth);

struct Certificate;
using CertificatePtr = std::shared_ptr<const Certificate>;

// A proof tree. Conclusions are optional everywhere except the root: the
// checker recomputes premise sequents through expand_rule, so serialized
// certificates stay compact and cannot smuggle in unchecked sequents.
struct Certificate {
  std::optional<Sequent> conclusion;
  RuleApp rule;
  std::vector<CertificatePtr> premises;

  static CertificatePtr make(Sequent conclusion, RuleApp rule,
                             std::vector<CertificatePtr> premises = {});
  static CertificatePtr make_bare(RuleApp rule, std::vector<CertificatePtr> premises = {});
};

size_t certificate_size(const Certificate& c);

struct CheckResult {
  bool ok = true;
  std::string path;  // node path like "0.1.0" to the first failure
  std::string reason;
};

// Recursively validates a certificate: every rule must expand, premise
// counts must match, and stored intermediate conclusions (when present)
// must equal the recomputed premises up to multiset order and renaming of
// eigenvariables. Rules outside `config` (cut, the fixed-point initial
// rules, induction) are rejected.
CheckResult check_certificate(const Certificate& cert, const RuleConfig& config);

}  // namespace mumall
