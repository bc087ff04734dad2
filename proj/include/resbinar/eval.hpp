#pragma once

// Term evaluation. eval_term is the plain recursive form; CompiledStatement
// flattens both sides to postfix once and is what the quantifier loops run.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "resbinar/algebra.hpp"
#include "resbinar/errors.hpp"
#include "resbinar/term.hpp"

namespace resbinar {

using Env = std::vector<std::pair<std::string, int>>;

inline int eval_term(const Term& t, const ResiduatedBinar& alg,
                     const Env& env) {
  switch (t->kind) {
    case TermKind::Var:
      for (const auto& [name, value] : env)
        if (name == t->name) return value;
      throw UnboundVariable(t->name);
    case TermKind::Unit:
      if (auto u = alg.unit()) return *u;
      throw NoUnit();
    case TermKind::Bot:
      return alg.lattice().bot();
    case TermKind::Top:
      return alg.lattice().top();
    case TermKind::Meet:
      return alg.lattice().meet(eval_term(t->lhs, alg, env),
                                eval_term(t->rhs, alg, env));
    case TermKind::Join:
      return alg.lattice().join(eval_term(t->lhs, alg, env),
                                eval_term(t->rhs, alg, env));
    case TermKind::Prod:
      return alg.mult(eval_term(t->lhs, alg, env),
                      eval_term(t->rhs, alg, env));
    case TermKind::Ldiv:
      return alg.ldiv(eval_term(t->lhs, alg, env),
                      eval_term(t->rhs, alg, env));
    case TermKind::Rdiv:
      return alg.rdiv(eval_term(t->lhs, alg, env),
                      eval_term(t->rhs, alg, env));
  }
  throw Error("internal: bad term kind");
}

namespace detail {

enum class OpCode : std::uint8_t { PushVar, PushConst, Meet, Join, Prod, Ldiv, Rdiv };

struct Instr {
  OpCode op;
  std::uint8_t arg;  // variable slot or element index
};

class CompiledTerm {
 public:
  CompiledTerm(const Term& t, const ResiduatedBinar& alg,
               const std::vector<std::string>& vars) {
    compile(t, alg, vars);
  }

  int eval(const ResiduatedBinar& alg, const int* assignment) const {
    int stack[kMaxElements];
    int sp = 0;
    for (const Instr& in : code_) {
      switch (in.op) {
        case OpCode::PushVar:
          stack[sp++] = assignment[in.arg];
          break;
        case OpCode::PushConst:
          stack[sp++] = in.arg;
          break;
        case OpCode::Meet:
          --sp;
          stack[sp - 1] = alg.lattice().meet(stack[sp - 1], stack[sp]);
          break;
        case OpCode::Join:
          --sp;
          stack[sp - 1] = alg.lattice().join(stack[sp - 1], stack[sp]);
          break;
        case OpCode::Prod:
          --sp;
          stack[sp - 1] = alg.mult(stack[sp - 1], stack[sp]);
          break;
        case OpCode::Ldiv:
          --sp;
          stack[sp - 1] = alg.ldiv(stack[sp - 1], stack[sp]);
          break;
        case OpCode::Rdiv:
          --sp;
          stack[sp - 1] = alg.rdiv(stack[sp - 1], stack[sp]);
          break;
      }
    }
    return stack[0];
  }

 private:
  void compile(const Term& t, const ResiduatedBinar& alg,
               const std::vector<std::string>& vars) {
    switch (t->kind) {
      case TermKind::Var: {
        std::size_t slot = 0;
        while (slot < vars.size() && vars[slot] != t->name) ++slot;
        if (slot == vars.size()) throw UnboundVariable(t->name);
        code_.push_back({OpCode::PushVar, static_cast<std::uint8_t>(slot)});
        return;
      }
      case TermKind::Unit: {
        auto u = alg.unit();
        if (!u) throw NoUnit();
        code_.push_back({OpCode::PushConst, static_cast<std::uint8_t>(*u)});
        return;
      }
      case TermKind::Bot:
        code_.push_back(
            {OpCode::PushConst, static_cast<std::uint8_t>(alg.lattice().bot())});
        return;
      case TermKind::Top:
        code_.push_back(
            {OpCode::PushConst, static_cast<std::uint8_t>(alg.lattice().top())});
        return;
      default:
        break;
    }
    compile(t->lhs, alg, vars);
    compile(t->rhs, alg, vars);
    switch (t->kind) {
      case TermKind::Meet: code_.push_back({OpCode::Meet, 0}); break;
      case TermKind::Join: code_.push_back({OpCode::Join, 0}); break;
      case TermKind::Prod: code_.push_back({OpCode::Prod, 0}); break;
      case TermKind::Ldiv: code_.push_back({OpCode::Ldiv, 0}); break;
      case TermKind::Rdiv: code_.push_back({OpCode::Rdiv, 0}); break;
      default: throw Error("internal: bad term kind");
    }
  }

  std::vector<Instr> code_;
};

}  // namespace detail

class CompiledStatement {
 public:
  CompiledStatement(const Statement& s, const ResiduatedBinar& alg)
      : vars_(variables_of(s)),
        lhs_(s.lhs, alg, vars_),
        rhs_(s.rhs, alg, vars_),
        eq_(s.rel == Rel::Eq) {}

  const std::vector<std::string>& vars() const { return vars_; }

  int eval_lhs(const ResiduatedBinar& alg, const int* asg) const {
    return lhs_.eval(alg, asg);
  }
  int eval_rhs(const ResiduatedBinar& alg, const int* asg) const {
    return rhs_.eval(alg, asg);
  }

  bool holds_at(const ResiduatedBinar& alg, const int* asg) const {
    const int l = lhs_.eval(alg, asg);
    const int r = rhs_.eval(alg, asg);
    return eq_ ? l == r : alg.lattice().leq(l, r);
  }

 private:
  std::vector<std::string> vars_;
  detail::CompiledTerm lhs_, rhs_;
  bool eq_;
};

struct CheckResult {
  bool holds = true;
  Env witness;             // first failing assignment, empty when holds
  int lhs_value = -1;      // both sides at the witness
  int rhs_value = -1;
};

// Quantifies over all assignments in lexicographic order (variables in
// first-occurrence order, the last one varying fastest) and reports the
// first failure.
inline CheckResult check_statement(const Statement& s,
                                   const ResiduatedBinar& alg) {
  const CompiledStatement cs(s, alg);
  const int n = alg.size();
  const std::size_t k = cs.vars().size();
  std::vector<int> asg(k, 0);
  while (true) {
    if (!cs.holds_at(alg, asg.data())) {
      CheckResult r;
      r.holds = false;
      for (std::size_t i = 0; i < k; ++i)
        r.witness.emplace_back(cs.vars()[i], asg[i]);
      r.lhs_value = cs.eval_lhs(alg, asg.data());
      r.rhs_value = cs.eval_rhs(alg, asg.data());
      return r;
    }
    int i = static_cast<int>(k) - 1;
    for (; i >= 0; --i) {
      if (++asg[i] < n) break;
      asg[i] = 0;
    }
    if (i < 0) return {};
  }
}

}  // namespace resbinar
