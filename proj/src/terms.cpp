#include "shefferkit/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace shefferkit {

ParseError::ParseError(std::string const& message, std::size_t position)
    : Error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

bool valid_variable_name(std::string_view name) {
  if (name.empty() || name[0] < 'a' || name[0] > 'z') return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
  });
}

}  // namespace

Term Term::variable(std::string name) {
  if (!valid_variable_name(name)) throw Error("invalid variable name '" + name + "'");
  Term t;
  t.nodes_.push_back(Node{Kind::Variable, 0, 0, 0, std::move(name)});
  return t;
}

Term Term::bottom() {
  Term t;
  t.nodes_.push_back(Node{Kind::Bottom, 0, 0, 0, {}});
  return t;
}

Term Term::top() {
  Term t;
  t.nodes_.push_back(Node{Kind::Top, 0, 0, 0, {}});
  return t;
}

Term Term::apply(Term const& left, Term const& right) {
  Term t;
  t.nodes_ = left.nodes_;
  t.nodes_.reserve(left.size() + right.size() + 1);
  auto offset = static_cast<std::uint32_t>(left.size());
  for (Node n : right.nodes_) {
    n.start += offset;
    if (n.kind == Kind::Apply) {
      n.left += offset;
      n.right += offset;
    }
    t.nodes_.push_back(std::move(n));
  }
  t.nodes_.push_back(Node{Kind::Apply, offset - 1,
                          static_cast<std::uint32_t>(t.nodes_.size() - 1), 0, {}});
  return t;
}

Term Term::subterm(std::uint32_t root) const {
  Term t;
  std::uint32_t start = nodes_[root].start;
  for (std::uint32_t i = start; i <= root; ++i) {
    Node n = nodes_[i];
    n.start -= start;
    if (n.kind == Kind::Apply) {
      n.left -= start;
      n.right -= start;
    }
    t.nodes_.push_back(std::move(n));
  }
  return t;
}

Term Term::left() const {
  if (kind() != Kind::Apply) throw Error("left() of a non-application term");
  return subterm(nodes_.back().left);
}

Term Term::right() const {
  if (kind() != Kind::Apply) throw Error("right() of a non-application term");
  return subterm(nodes_.back().right);
}

std::size_t Term::depth() const {
  std::vector<std::size_t> d(nodes_.size(), 1);
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].kind == Kind::Apply) {
      d[i] = 1 + std::max(d[nodes_[i].left], d[nodes_[i].right]);
    }
  }
  return d.back();
}

std::vector<std::string> Term::variables() const {
  std::vector<std::string> out;
  for (auto const& n : nodes_) {
    if (n.kind == Kind::Variable && std::find(out.begin(), out.end(), n.name) == out.end()) {
      out.push_back(n.name);
    }
  }
  return out;
}

Law::Law(Equation conclusion, std::vector<Equation> premises)
    : premises_(std::move(premises)), conclusion_(std::move(conclusion)) {
  auto add = [this](Term const& t) {
    for (auto& v : t.variables()) {
      if (std::find(variables_.begin(), variables_.end(), v) == variables_.end()) {
        variables_.push_back(v);
      }
    }
  };
  for (auto const& eq : premises_) {
    add(eq.lhs);
    add(eq.rhs);
  }
  add(conclusion_.lhs);
  add(conclusion_.rhs);
  if (variables_.size() > kMaxVariables) {
    throw Error("law has " + std::to_string(variables_.size()) +
                " variables; at most 6 are supported");
  }
}

bool Law::uses_constants() const {
  auto has = [](Term const& t) {
    return std::any_of(t.nodes().begin(), t.nodes().end(), [](Term::Node const& n) {
      return n.kind == Term::Kind::Bottom || n.kind == Term::Kind::Top;
    });
  };
  if (has(conclusion_.lhs) || has(conclusion_.rhs)) return true;
  return std::any_of(premises_.begin(), premises_.end(),
                     [&](Equation const& e) { return has(e.lhs) || has(e.rhs); });
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term term() {
    Term acc = factor();
    while (accept('|')) acc = Term::apply(acc, factor());
    return acc;
  }

  Equation equation() {
    Term lhs = term();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '=' && !at("=>")) {
      ++pos_;
    } else {
      fail("expected '='");
    }
    return Equation{std::move(lhs), term()};
  }

  Law law() {
    skip_ws();
    if (at("=>")) fail("empty premise list before '=>'");
    std::vector<Equation> eqs;
    eqs.push_back(equation());
    while (accept('&')) eqs.push_back(equation());
    skip_ws();
    if (at("=>")) {
      pos_ += 2;
      Equation concl = equation();
      expect_end();
      return Law(std::move(concl), std::move(eqs));
    }
    if (eqs.size() > 1) fail("premises joined by '&' must be followed by '=>'");
    expect_end();
    return Law(std::move(eqs.front()));
  }

  void expect_end() {
    skip_ws();
    if (pos_ != text_.size()) {
      if (text_[pos_] == ')') fail("unbalanced ')'");
      fail(std::string("unexpected '") + text_[pos_] + "'");
    }
  }

 private:
  Term factor() {
    Term t = atom();
    while (accept('\'')) t = Term::prime(t);
    return t;
  }

  Term atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      Term t = term();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') {
        throw ParseError("unclosed '(' (opened at offset " + std::to_string(open) + ")", pos_);
      }
      ++pos_;
      return t;
    }
    if (c == '0') {
      ++pos_;
      return Term::bottom();
    }
    if (c == '1') {
      ++pos_;
      return Term::top();
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t begin = pos_;
      while (pos_ < text_.size() && ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
                                     (text_[pos_] >= '0' && text_[pos_] <= '9'))) {
        ++pos_;
      }
      return Term::variable(std::string(text_.substr(begin, pos_ - begin)));
    }
    if (c == ')') fail("unbalanced ')'");
    fail(std::string("unexpected '") + c + "'");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at(std::string_view token) const { return text_.substr(pos_, token.size()) == token; }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(std::string const& message) const { throw ParseError(message, pos_); }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text) {
  Parser p(text);
  Term t = p.term();
  p.expect_end();
  return t;
}

Law parse_law(std::string_view text) { return Parser(text).law(); }

// ---------------------------------------------------------------------------
// Printing

namespace {

class Printer {
 public:
  explicit Printer(Term const& t) : nodes_(t.nodes()) {}

  std::string print(std::uint32_t i) const {
    auto const& n = nodes_[i];
    switch (n.kind) {
      case Term::Kind::Variable:
        return n.name;
      case Term::Kind::Bottom:
        return "0";
      case Term::Kind::Top:
        return "1";
      case Term::Kind::Apply:
        break;
    }
    if (is_prime(i)) {
      std::uint32_t arg = n.left;
      if (is_binary(arg)) return "(" + print(arg) + ")'";
      return print(arg) + "'";
    }
    return operand(n.left) + "|" + operand(n.right);
  }

 private:
  std::string operand(std::uint32_t i) const {
    return is_binary(i) ? "(" + print(i) + ")" : print(i);
  }

  bool is_binary(std::uint32_t i) const {
    return nodes_[i].kind == Term::Kind::Apply && !is_prime(i);
  }

  bool is_prime(std::uint32_t i) const {
    auto const& n = nodes_[i];
    return n.kind == Term::Kind::Apply && same_subtree(n.left, n.right);
  }

  bool same_subtree(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t sa = nodes_[a].start;
    std::uint32_t sb = nodes_[b].start;
    if (a - sa != b - sb) return false;
    for (std::uint32_t k = 0; k <= a - sa; ++k) {
      auto const& x = nodes_[sa + k];
      auto const& y = nodes_[sb + k];
      if (x.kind != y.kind || x.name != y.name) return false;
      if (x.kind == Term::Kind::Apply && (x.left - sa != y.left - sb || x.right - sa != y.right - sb)) {
        return false;
      }
    }
    return true;
  }

  std::vector<Term::Node> const& nodes_;
};

std::string format_equation(Equation const& eq) {
  return format_term(eq.lhs) + " = " + format_term(eq.rhs);
}

}  // namespace

std::string format_term(Term const& t) {
  return Printer(t).print(static_cast<std::uint32_t>(t.size() - 1));
}

std::string format_law(Law const& law) {
  std::string out;
  for (std::size_t i = 0; i < law.premises().size(); ++i) {
    if (i > 0) out += " & ";
    out += format_equation(law.premises()[i]);
  }
  if (!law.is_identity()) out += " => ";
  out += format_equation(law.conclusion());
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

TermProgram compile_term(Term const& t, std::vector<std::string> const& variables) {
  TermProgram prog;
  prog.code.reserve(t.size());
  for (auto const& n : t.nodes()) {
    switch (n.kind) {
      case Term::Kind::Variable: {
        auto it = std::find(variables.begin(), variables.end(), n.name);
        if (it == variables.end()) throw Error("unbound variable '" + n.name + "'");
        prog.code.push_back({TermProgram::Op::Variable,
                             static_cast<std::uint32_t>(it - variables.begin()), 0});
        break;
      }
      case Term::Kind::Apply:
        prog.code.push_back({TermProgram::Op::Apply, n.left, n.right});
        break;
      case Term::Kind::Bottom:
        prog.code.push_back({TermProgram::Op::Bottom, 0, 0});
        break;
      case Term::Kind::Top:
        prog.code.push_back({TermProgram::Op::Top, 0, 0});
        break;
    }
  }
  return prog;
}

CompiledLaw compile_law(Law const& law) {
  CompiledLaw c;
  c.variables = law.variables();
  for (auto const& eq : law.premises()) {
    c.premises.emplace_back(compile_term(eq.lhs, c.variables), compile_term(eq.rhs, c.variables));
  }
  c.conclusion = {compile_term(law.conclusion().lhs, c.variables),
                  compile_term(law.conclusion().rhs, c.variables)};
  c.uses_constants = law.uses_constants();
  return c;
}

namespace {

/// Postorder evaluation; `scratch` is reused across calls.
Element run(Groupoid const& g, TermProgram const& prog, Element const* values,
            std::vector<Element>& scratch) {
  scratch.resize(prog.code.size());
  for (std::size_t i = 0; i < prog.code.size(); ++i) {
    auto const& ins = prog.code[i];
    switch (ins.op) {
      case TermProgram::Op::Variable:
        scratch[i] = values[ins.a];
        break;
      case TermProgram::Op::Apply:
        scratch[i] = g.op(scratch[ins.a], scratch[ins.b]);
        break;
      case TermProgram::Op::Bottom:
        if (!g.bottom()) throw Error("constant 0 used but the groupoid designates no bottom");
        scratch[i] = *g.bottom();
        break;
      case TermProgram::Op::Top:
        if (!g.top()) throw Error("constant 1 used but the groupoid designates no top");
        scratch[i] = *g.top();
        break;
    }
  }
  return scratch.back();
}

}  // namespace

Element eval_term(Groupoid const& g, Term const& t, Assignment const& asg) {
  std::vector<std::string> vars = t.variables();
  std::vector<Element> values;
  for (auto const& v : vars) {
    auto it = asg.find(v);
    if (it == asg.end()) throw Error("unbound variable '" + v + "'");
    if (it->second >= g.size()) throw Error("assignment of '" + v + "' out of range");
    values.push_back(it->second);
  }
  std::vector<Element> scratch;
  return run(g, compile_term(t, vars), values.data(), scratch);
}

Verdict check_law(Groupoid const& g, CompiledLaw const& law, LawCheckStats* stats) {
  if (law.uses_constants && (!g.bottom() || !g.top())) {
    throw Error("law uses constants 0/1 but the groupoid designates no bounds");
  }
  std::size_t k = law.variables.size();
  auto n = static_cast<Element>(g.size());
  std::vector<Element> values(k, 0);
  std::vector<Element> scratch;
  while (true) {
    if (stats) ++stats->assignments;
    bool premises_hold = true;
    for (auto const& [lhs, rhs] : law.premises) {
      if (run(g, lhs, values.data(), scratch) != run(g, rhs, values.data(), scratch)) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold) {
      Element l = run(g, law.conclusion.first, values.data(), scratch);
      Element r = run(g, law.conclusion.second, values.data(), scratch);
      if (l != r) {
        Verdict v = Verdict::fail("violated", values, law.variables);
        v.sides = {l, r};
        return v;
      }
    }
    // Odometer increment; last variable least significant.
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++values[pos] < n) break;
      values[pos] = 0;
      if (pos == 0) return Verdict::pass();
    }
    if (k == 0) return Verdict::pass();
  }
}

Verdict check_law(Groupoid const& g, Law const& law, LawCheckStats* stats) {
  return check_law(g, compile_law(law), stats);
}

}  // namespace shefferkit
