#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace mumall {

class Term;
using TermPtr = std::shared_ptr<const Term>;

// First-order terms over a ranked signature. Variables come in two kinds:
// free eigenvariables (named, owned by a sequent context) and bound
// occurrences (de Bruijn style, pointing at an enclosing binder group in a
// formula). Terms stored inside sequents never contain bound occurrences.
class Term {
public:
  enum class Kind { Free, Bound, App };

  static TermPtr free(std::string name);
  // `up` counts enclosing term-binder groups (quantifier = group of one,
  // fixed-point abstraction = group of its parameters), `slot` indexes into
  // the group.
  static TermPtr bound(int up, int slot, std::string hint = "");
  static TermPtr app(std::string ctor, std::vector<TermPtr> args = {});

  Kind kind() const { return kind_; }
  bool is_free() const { return kind_ == Kind::Free; }
  bool is_bound() const { return kind_ == Kind::Bound; }
  bool is_app() const { return kind_ == Kind::App; }

  const std::string& name() const { return name_; }  // Free / App ctor
  int up() const { return up_; }
  int slot() const { return slot_; }
  const std::string& hint() const { return name_; }  // Bound display hint
  const std::vector<TermPtr>& args() const { return args_; }

private:
  Kind kind_;
  std::string name_;
  int up_ = 0, slot_ = 0;
  std::vector<TermPtr> args_;
};

// Total order on terms; bound-variable hints do not participate.
int compare(const TermPtr& a, const TermPtr& b);
bool equal(const TermPtr& a, const TermPtr& b);

bool is_ground(const TermPtr& t);
void collect_free_vars(const TermPtr& t, std::set<std::string>& out);
int term_depth(const TermPtr& t);  // constants and variables have depth 0

// Ranked signature: constructor name -> arity. Valid signatures declare at
// least one constructor of arity 0.
class Signature {
public:
  void declare(const std::string& name, int arity);
  bool has(const std::string& name) const;
  int arity(const std::string& name) const;  // -1 when absent
  const std::map<std::string, int>& entries() const { return entries_; }
  bool has_nullary() const;
  std::vector<std::string> constants() const;

private:
  std::map<std::string, int> entries_;
};

// Idempotent substitution from eigenvariable names to terms. The bindings
// are kept fully resolved: no bound variable of the map appears in any
// range term.
class Substitution {
public:
  Substitution() = default;
  explicit Substitution(std::map<std::string, TermPtr> bindings);

  bool empty() const { return bindings_.empty(); }
  const std::map<std::string, TermPtr>& bindings() const { return bindings_; }
  const TermPtr* lookup(const std::string& name) const;

  bool operator==(const Substitution& other) const;

private:
  std::map<std::string, TermPtr> bindings_;
};

TermPtr apply_substitution(const Substitution& theta, const TermPtr& t);

// Most general unifier with occurs check. Variable-variable pairs bind the
// lexicographically larger name to the smaller one, so the result is
// canonical. Returns nullopt when the terms do not unify.
std::optional<Substitution> unify(const TermPtr& t, const TermPtr& s);

// Fresh-name supply, scoped to one proof attempt.
class FreshNames {
public:
  // Returns a name based on `hint` that is not in `avoid`; remembers
  // everything it hands out.
  std::string fresh(const std::string& hint, const std::set<std::string>& avoid);

private:
  long counter_ = 0;
  std::set<std::string> used_;
};

// Renames the free variables of t injectively away from `avoid`.
TermPtr rename_apart(const TermPtr& t, const std::set<std::string>& avoid,
                     FreshNames& names);

}  // namespace mumall
