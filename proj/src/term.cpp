#include "mumall/term.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <stdexcept>

namespace mumall {

TermPtr Term::free(std::string name) {
  auto t = std::make_shared<Term>();
  t->kind_ = Kind::Free;
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::bound(int up, int slot, std::string hint) {
  auto t = std::make_shared<Term>();
  t->kind_ = Kind::Bound;
  t->up_ = up;
  t->slot_ = slot;
  t->name_ = std::move(hint);
  return t;
}

TermPtr Term::app(std::string ctor, std::vector<TermPtr> args) {
  auto t = std::make_shared<Term>();
  t->kind_ = Kind::App;
  t->name_ = std::move(ctor);
  t->args_ = std::move(args);
  return t;
}

int compare(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return 0;
  if (a->kind() != b->kind())
    return static_cast<int>(a->kind()) < static_cast<int>(b->kind()) ? -1 : 1;
  switch (a->kind()) {
    case Term::Kind::Free:
      return a->name().compare(b->name());
    case Term::Kind::Bound:
      if (a->up() != b->up()) return a->up() < b->up() ? -1 : 1;
      if (a->slot() != b->slot()) return a->slot() < b->slot() ? -1 : 1;
      return 0;
    case Term::Kind::App: {
      if (int c = a->name().compare(b->name())) return c;
      if (a->args().size() != b->args().size())
        return a->args().size() < b->args().size() ? -1 : 1;
      for (size_t i = 0; i < a->args().size(); ++i)
        if (int c = compare(a->args()[i], b->args()[i])) return c;
      return 0;
    }
  }
  return 0;
}

bool equal(const TermPtr& a, const TermPtr& b) { return compare(a, b) == 0; }

bool is_ground(const TermPtr& t) {
  if (t->is_free() || t->is_bound()) return false;
  for (const auto& a : t->args())
    if (!is_ground(a)) return false;
  return true;
}

void collect_free_vars(const TermPtr& t, std::set<std::string>& out) {
  if (t->is_free()) {
    out.insert(t->name());
  } else if (t->is_app()) {
    for (const auto& a : t->args()) collect_free_vars(a, out);
  }
}

int term_depth(const TermPtr& t) {
  if (!t->is_app() || t->args().empty()) return 0;
  int d = 0;
  for (const auto& a : t->args()) d = std::max(d, term_depth(a));
  return d + 1;
}

void Signature::declare(const std::string& name, int arity) {
  auto [it, inserted] = entries_.emplace(name, arity);
  if (!inserted && it->second != arity)
    throw std::runtime_error("constructor '" + name + "' redeclared with different arity");
}

bool Signature::has(const std::string& name) const { return entries_.count(name) != 0; }

int Signature::arity(const std::string& name) const {
  auto it = entries_.find(name);
  return it == entries_.end() ? -1 : it->second;
}

bool Signature::has_nullary() const {
  for (const auto& [name, ar] : entries_)
    if (ar == 0) return true;
  return false;
}

std::vector<std::string> Signature::constants() const {
  std::vector<std::string> out;
  for (const auto& [name, ar] : entries_)
    if (ar == 0) out.push_back(name);
  return out;
}

namespace {

bool occurs(const std::string& name, const TermPtr& t) {
  if (t->is_free()) return t->name() == name;
  if (t->is_app())
    for (const auto& a : t->args())
      if (occurs(name, a)) return true;
  return false;
}

}  // namespace

Substitution::Substitution(std::map<std::string, TermPtr> bindings)
    : bindings_(std::move(bindings)) {
  for (const auto& [name, t] : bindings_)
    assert(!occurs(name, t) && "substitution must be occurs-checked");
}

const TermPtr* Substitution::lookup(const std::string& name) const {
  auto it = bindings_.find(name);
  return it == bindings_.end() ? nullptr : &it->second;
}

bool Substitution::operator==(const Substitution& other) const {
  if (bindings_.size() != other.bindings_.size()) return false;
  auto it = other.bindings_.begin();
  for (const auto& [name, t] : bindings_) {
    if (name != it->first || !equal(t, it->second)) return false;
    ++it;
  }
  return true;
}

TermPtr apply_substitution(const Substitution& theta, const TermPtr& t) {
  if (theta.empty()) return t;
  switch (t->kind()) {
    case Term::Kind::Free:
      if (const TermPtr* r = theta.lookup(t->name())) return *r;
      return t;
    case Term::Kind::Bound:
      return t;
    case Term::Kind::App: {
      bool changed = false;
      std::vector<TermPtr> args;
      args.reserve(t->args().size());
      for (const auto& a : t->args()) {
        args.push_back(apply_substitution(theta, a));
        changed |= args.back().get() != a.get();
      }
      return changed ? Term::app(t->name(), std::move(args)) : t;
    }
  }
  return t;
}

namespace {

// Resolves a term through the working bindings until its head is stable.
TermPtr walk(const std::map<std::string, TermPtr>& bind, TermPtr t) {
  while (t->is_free()) {
    auto it = bind.find(t->name());
    if (it == bind.end()) return t;
    t = it->second;
  }
  return t;
}

TermPtr resolve(const std::map<std::string, TermPtr>& bind, const TermPtr& t) {
  TermPtr w = walk(bind, t);
  if (!w->is_app()) return w;
  std::vector<TermPtr> args;
  args.reserve(w->args().size());
  for (const auto& a : w->args()) args.push_back(resolve(bind, a));
  return Term::app(w->name(), std::move(args));
}

bool occurs_resolved(const std::map<std::string, TermPtr>& bind,
                     const std::string& name, const TermPtr& t) {
  TermPtr w = walk(bind, t);
  if (w->is_free()) return w->name() == name;
  if (w->is_app())
    for (const auto& a : w->args())
      if (occurs_resolved(bind, name, a)) return true;
  return false;
}

bool solve(std::map<std::string, TermPtr>& bind, const TermPtr& lhs, const TermPtr& rhs) {
  TermPtr t = walk(bind, lhs);
  TermPtr s = walk(bind, rhs);
  if (t->is_free() && s->is_free()) {
    if (t->name() == s->name()) return true;
    // Canonical orientation: larger name bound to the smaller term.
    if (t->name() < s->name()) std::swap(t, s);
    bind.emplace(t->name(), s);
    return true;
  }
  if (t->is_free() || s->is_free()) {
    if (s->is_free()) std::swap(t, s);
    if (occurs_resolved(bind, t->name(), s)) return false;
    bind.emplace(t->name(), s);
    return true;
  }
  if (t->name() != s->name() || t->args().size() != s->args().size()) return false;
  for (size_t i = 0; i < t->args().size(); ++i)
    if (!solve(bind, t->args()[i], s->args()[i])) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify(const TermPtr& t, const TermPtr& s) {
  std::map<std::string, TermPtr> bind;
  if (!solve(bind, t, s)) return std::nullopt;
  // Flatten the triangular bindings into idempotent form.
  std::map<std::string, TermPtr> flat;
  for (const auto& [name, _] : bind) flat.emplace(name, resolve(bind, Term::free(name)));
  return Substitution(std::move(flat));
}

std::string FreshNames::fresh(const std::string& hint,
                              const std::set<std::string>& avoid) {
  std::string base = hint.empty() ? "x" : hint;
  // Strip a previous freshness suffix so names do not pile up underscores.
  if (auto pos = base.rfind('_'); pos != std::string::npos && pos + 1 < base.size()) {
    bool digits = true;
    for (size_t i = pos + 1; i < base.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(base[i]));
    if (digits) base = base.substr(0, pos);
  }
  if (!avoid.count(base) && !used_.count(base)) {
    used_.insert(base);
    return base;
  }
  for (;;) {
    std::string cand = base + "_" + std::to_string(counter_++);
    if (!avoid.count(cand) && !used_.count(cand)) {
      used_.insert(cand);
      return cand;
    }
  }
}

TermPtr rename_apart(const TermPtr& t, const std::set<std::string>& avoid,
                     FreshNames& names) {
  std::set<std::string> vars;
  collect_free_vars(t, vars);
  std::set<std::string> blocked = avoid;
  blocked.insert(vars.begin(), vars.end());
  std::map<std::string, TermPtr> map;
  for (const auto& v : vars)
    if (avoid.count(v)) map.emplace(v, Term::free(names.fresh(v, blocked)));
  if (map.empty()) return t;
  return apply_substitution(Substitution(std::move(map)), t);
}

}  // namespace mumall
