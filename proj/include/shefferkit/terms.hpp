#pragma once

// Terms over the single binary operation `|`, laws (identities and
// quasi-identities), their concrete syntax, and exhaustive checking
// against a finite groupoid.
//
// Grammar:
//   law    := eq | eq ('&' eq)* '=>' eq
//   eq     := term '=' term
//   term   := factor ('|' factor)*          left-associative
//   factor := atom "'"*                     t' abbreviates t|t
//   atom   := variable | '0' | '1' | '(' term ')'
//   variable matches [a-z][a-z0-9]*

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "shefferkit/common.hpp"
#include "shefferkit/groupoid.hpp"

namespace shefferkit {

/// Syntax error with the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(std::string const& message, std::size_t position);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Immutable term tree stored as a postorder node array. Structurally
/// equal trees have identical arrays, so equality is array equality.
class Term {
 public:
  enum class Kind : std::uint8_t { Variable, Apply, Bottom, Top };

  struct Node {
    Kind kind = Kind::Variable;
    std::uint32_t left = 0;   // Apply: index of left child root
    std::uint32_t right = 0;  // Apply: index of right child root
    std::uint32_t start = 0;  // first index of this node's subtree
    std::string name;         // Variable only
    friend bool operator==(Node const&, Node const&) = default;
  };

  static Term variable(std::string name);
  static Term bottom();
  static Term top();
  static Term apply(Term const& left, Term const& right);
  /// t' = t|t.
  static Term prime(Term const& t) { return apply(t, t); }

  Kind kind() const noexcept { return nodes_.back().kind; }
  std::string const& name() const { return nodes_.back().name; }
  /// Children of an Apply root.
  Term left() const;
  Term right() const;

  std::vector<Node> const& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }
  std::size_t depth() const;
  /// Variables in order of first (left-to-right) appearance.
  std::vector<std::string> variables() const;

  friend bool operator==(Term const&, Term const&) = default;

 private:
  Term() = default;
  Term subterm(std::uint32_t root) const;
  std::vector<Node> nodes_;
};

struct Equation {
  Term lhs;
  Term rhs;
  friend bool operator==(Equation const&, Equation const&) = default;
};

/// Identity s = t (no premises) or quasi-identity
/// s1 = t1 & ... & sk = tk => s = t.
class Law {
 public:
  static constexpr std::size_t kMaxVariables = 6;

  explicit Law(Equation conclusion, std::vector<Equation> premises = {});

  bool is_identity() const noexcept { return premises_.empty(); }
  std::vector<Equation> const& premises() const noexcept { return premises_; }
  Equation const& conclusion() const noexcept { return conclusion_; }
  /// Variables in order of first appearance, premises before conclusion.
  std::vector<std::string> const& variables() const noexcept { return variables_; }
  bool uses_constants() const;

  friend bool operator==(Law const&, Law const&) = default;

 private:
  std::vector<Equation> premises_;
  Equation conclusion_;
  std::vector<std::string> variables_;
};

using Assignment = std::map<std::string, Element, std::less<>>;

Term parse_term(std::string_view text);
Law parse_law(std::string_view text);

/// Canonical text: t|t prints as t', binary operands that are themselves
/// binary applications are parenthesized.
std::string format_term(Term const& t);
std::string format_law(Law const& law);

/// Throws Error on an unbound variable or on a constant the groupoid
/// does not designate.
Element eval_term(Groupoid const& g, Term const& t, Assignment const& asg);

/// Slot-addressed evaluation program for a term: one instruction per
/// postorder node, operands referring to earlier instructions.
struct TermProgram {
  enum class Op : std::uint8_t { Variable, Apply, Bottom, Top };
  struct Instr {
    Op op;
    std::uint32_t a;  // variable slot, or left operand instruction
    std::uint32_t b;  // right operand instruction
  };
  std::vector<Instr> code;
};

/// Compiles a term against an ordered variable list.
TermProgram compile_term(Term const& t, std::vector<std::string> const& variables);

struct CompiledLaw {
  std::vector<std::string> variables;
  std::vector<std::pair<TermProgram, TermProgram>> premises;
  std::pair<TermProgram, TermProgram> conclusion;
  bool uses_constants = false;
};

CompiledLaw compile_law(Law const& law);

struct LawCheckStats {
  std::uint64_t assignments = 0;
};

/// Exhaustive check over all n^k assignments in lexicographic order
/// (first variable most significant). The first violating assignment is
/// returned as witness, with evaluated conclusion sides.
Verdict check_law(Groupoid const& g, Law const& law, LawCheckStats* stats = nullptr);
Verdict check_law(Groupoid const& g, CompiledLaw const& law, LawCheckStats* stats = nullptr);

}  // namespace shefferkit
