#pragma once

// Terms over the signature {*, \, /, ^, v} with constants e, bot, top.
// Immutable nodes shared by pointer; cheap to copy.

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "resbinar/errors.hpp"

namespace resbinar {

enum class TermKind { Var, Unit, Bot, Top, Meet, Join, Prod, Ldiv, Rdiv };

struct TermNode;
using Term = std::shared_ptr<const TermNode>;

struct TermNode {
  TermKind kind;
  std::string name;  // Var only
  Term lhs, rhs;     // binary kinds only
};

namespace term {

inline Term var(std::string name) {
  return std::make_shared<const TermNode>(
      TermNode{TermKind::Var, std::move(name), nullptr, nullptr});
}

inline Term constant(TermKind k) {
  return std::make_shared<const TermNode>(TermNode{k, {}, nullptr, nullptr});
}

inline Term e() { return constant(TermKind::Unit); }
inline Term bot() { return constant(TermKind::Bot); }
inline Term top() { return constant(TermKind::Top); }

inline Term binary(TermKind k, Term l, Term r) {
  return std::make_shared<const TermNode>(
      TermNode{k, {}, std::move(l), std::move(r)});
}

inline Term meet(Term l, Term r) {
  return binary(TermKind::Meet, std::move(l), std::move(r));
}
inline Term join(Term l, Term r) {
  return binary(TermKind::Join, std::move(l), std::move(r));
}
inline Term prod(Term l, Term r) {
  return binary(TermKind::Prod, std::move(l), std::move(r));
}
inline Term ldiv(Term l, Term r) {
  return binary(TermKind::Ldiv, std::move(l), std::move(r));
}
inline Term rdiv(Term l, Term r) {
  return binary(TermKind::Rdiv, std::move(l), std::move(r));
}

}  // namespace term

// Binding tightness: * binds tighter than \ and /, which bind tighter than
// ^ and v. Operators of equal tightness associate to the left.
inline int precedence(TermKind k) {
  switch (k) {
    case TermKind::Prod:
      return 3;
    case TermKind::Ldiv:
    case TermKind::Rdiv:
      return 2;
    case TermKind::Meet:
    case TermKind::Join:
      return 1;
    default:
      return 4;
  }
}

inline bool is_binary(TermKind k) { return precedence(k) < 4; }

inline const char* op_token(TermKind k) {
  switch (k) {
    case TermKind::Prod:
      return "*";
    case TermKind::Ldiv:
      return "\\";
    case TermKind::Rdiv:
      return "/";
    case TermKind::Meet:
      return "^";
    case TermKind::Join:
      return "v";
    default:
      return "";
  }
}

namespace detail {

// Parens are kept whenever dropping them would change how the string reads
// back: lower tightness below higher, a right operand at equal tightness,
// or a different operator at equal tightness (so "(x v y) ^ e" keeps its
// parens even though left association would disambiguate).
inline bool needs_parens(const Term& child, TermKind parent, bool right) {
  if (!is_binary(child->kind)) return false;
  const int pc = precedence(child->kind);
  const int pp = precedence(parent);
  if (pc != pp) return pc < pp;
  return right || child->kind != parent;
}

inline void format_into(const Term& t, std::string& out) {
  switch (t->kind) {
    case TermKind::Var:
      out += t->name;
      return;
    case TermKind::Unit:
      out += "e";
      return;
    case TermKind::Bot:
      out += "bot";
      return;
    case TermKind::Top:
      out += "top";
      return;
    default:
      break;
  }
  const bool spaced = precedence(t->kind) == 1;
  auto emit = [&](const Term& c, bool right) {
    if (needs_parens(c, t->kind, right)) {
      out += '(';
      format_into(c, out);
      out += ')';
    } else {
      format_into(c, out);
    }
  };
  emit(t->lhs, false);
  if (spaced) out += ' ';
  out += op_token(t->kind);
  if (spaced) out += ' ';
  emit(t->rhs, true);
}

}  // namespace detail

inline std::string format_term(const Term& t) {
  std::string out;
  detail::format_into(t, out);
  return out;
}

enum class Rel { Eq, Leq };

struct Statement {
  Term lhs;
  Rel rel;
  Term rhs;
};

inline std::string format_statement(const Statement& s) {
  return format_term(s.lhs) + (s.rel == Rel::Eq ? " = " : " <= ") +
         format_term(s.rhs);
}

namespace detail {

inline void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t->kind == TermKind::Var) {
    if (std::find(out.begin(), out.end(), t->name) == out.end())
      out.push_back(t->name);
    return;
  }
  if (is_binary(t->kind)) {
    collect_vars(t->lhs, out);
    collect_vars(t->rhs, out);
  }
}

}  // namespace detail

// First-occurrence order, left side before right. This is the quantifier
// order used when enumerating assignments.
inline std::vector<std::string> variables_of(const Statement& s) {
  std::vector<std::string> vars;
  detail::collect_vars(s.lhs, vars);
  detail::collect_vars(s.rhs, vars);
  return vars;
}

// Dual of a term: reverse every product and swap the two divisions, so that
// evaluating the result in an algebra equals evaluating the original in the
// opposite algebra.
inline Term opposite_term(const Term& t) {
  switch (t->kind) {
    case TermKind::Var:
    case TermKind::Unit:
    case TermKind::Bot:
    case TermKind::Top:
      return t;
    case TermKind::Meet:
      return term::meet(opposite_term(t->rhs), opposite_term(t->lhs));
    case TermKind::Join:
      return term::join(opposite_term(t->rhs), opposite_term(t->lhs));
    case TermKind::Prod:
      return term::prod(opposite_term(t->rhs), opposite_term(t->lhs));
    case TermKind::Ldiv:
      return term::rdiv(opposite_term(t->rhs), opposite_term(t->lhs));
    case TermKind::Rdiv:
      return term::ldiv(opposite_term(t->rhs), opposite_term(t->lhs));
  }
  return t;  // unreachable
}

inline Statement opposite_statement(const Statement& s) {
  return {opposite_term(s.lhs), s.rel, opposite_term(s.rhs)};
}

}  // namespace resbinar
