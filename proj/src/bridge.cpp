#include "shefferkit/bridge.hpp"

#include "shefferkit/sheffer.hpp"

namespace shefferkit {

namespace {

void require_drsi(RelationalSystem const& sys) {
  DrsiReport rep = validate_drsi(sys);
  if (!rep.passes()) {
    Verdict const& bad = !rep.reflexive ? rep.reflexive : !rep.directed ? rep.directed : rep.involution;
    throw Error("not a directed relational system with involution: " + describe(bad, sys.carrier()));
  }
}

std::string pair_name(Carrier const& c, Element x, Element y) {
  return "(" + c.name(x) + "," + c.name(y) + ")";
}

std::uint64_t lcg_next(std::uint64_t state) {
  return state * 6364136223846793005ULL + 1442695040888963407ULL;
}

}  // namespace

std::vector<AssignmentSpace::Cell const*> AssignmentSpace::unforced() const {
  std::vector<Cell const*> out;
  for (auto const& c : cells) {
    if (!c.forced) out.push_back(&c);
  }
  return out;
}

std::vector<AssignmentSpace::Cell const*> AssignmentSpace::free_pairs() const {
  std::vector<Cell const*> out;
  for (auto const& c : cells) {
    if (!c.forced && c.candidates.size() > 1) out.push_back(&c);
  }
  return out;
}

RelationalSystem induce_system(Groupoid const& g) {
  ElementMap prime = derived_involution(g);
  auto const n = static_cast<Element>(g.size());
  BinaryRelation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (g.op(prime(x), prime(y)) == y) rel.set(x, y);
    }
  }
  return RelationalSystem(g.carrier(), std::move(rel), std::move(prime), g.bottom(), g.top());
}

AssignmentSpace assignment_space(RelationalSystem const& sys) {
  require_drsi(sys);
  ElementMap const& u = sys.involution();
  auto const n = static_cast<Element>(sys.size());
  AssignmentSpace space;
  space.n = n;
  space.cells.reserve(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      AssignmentSpace::Cell cell;
      cell.pair = {x, y};
      if (sys.related(u(x), u(y))) {
        cell.forced = true;
        cell.candidates = ElementSet{u(y)};
      } else {
        cell.candidates = upper_cone(sys, u(x), u(y));
        space.count *= cell.candidates.size();
      }
      space.cells.push_back(cell);
    }
  }
  return space;
}

Groupoid assign(RelationalSystem const& sys, ChoicePolicy const& policy) {
  AssignmentSpace space = assignment_space(sys);
  std::vector<Element> table(space.cells.size());
  std::uint64_t state = 0;
  if (auto const* r = std::get_if<ChoicePolicy::SeededRandom>(&policy.rule)) state = r->seed;
  auto const* expl = std::get_if<ChoicePolicy::Explicit>(&policy.rule);

  for (std::size_t i = 0; i < space.cells.size(); ++i) {
    auto const& cell = space.cells[i];
    if (expl) {
      auto it = expl->choices.find(cell.pair);
      if (it != expl->choices.end()) {
        if (!cell.candidates.contains(it->second)) {
          throw Error("explicit choice for " +
                      pair_name(sys.carrier(), cell.pair.first, cell.pair.second) +
                      " lies outside its candidate set");
        }
        table[i] = it->second;
        continue;
      }
    }
    if (cell.forced) {
      table[i] = cell.candidates.min();
      continue;
    }
    if (std::holds_alternative<ChoicePolicy::Max>(policy.rule)) {
      table[i] = cell.candidates.max();
    } else if (std::holds_alternative<ChoicePolicy::SeededRandom>(policy.rule)) {
      state = lcg_next(state);
      auto pick = static_cast<std::size_t>((state >> 32) % cell.candidates.size());
      table[i] = cell.candidates.elements()[pick];
    } else {
      table[i] = cell.candidates.min();
    }
  }
  return Groupoid(sys.carrier(), std::move(table), sys.bottom(), sys.top());
}

void for_each_assignment(RelationalSystem const& sys,
                         std::function<bool(Groupoid const&)> const& visit) {
  AssignmentSpace space = assignment_space(sys);
  std::vector<std::vector<Element>> options;
  for (auto const& cell : space.cells) options.push_back(cell.candidates.elements());
  std::vector<std::size_t> pick(options.size(), 0);
  std::vector<Element> table(options.size());
  while (true) {
    for (std::size_t i = 0; i < options.size(); ++i) table[i] = options[i][pick[i]];
    if (!visit(Groupoid(sys.carrier(), table, sys.bottom(), sys.top()))) return;
    std::size_t pos = options.size();
    while (true) {
      if (pos == 0) return;
      --pos;
      if (++pick[pos] < options[pos].size()) break;
      pick[pos] = 0;
    }
  }
}

Verdict is_assigned(RelationalSystem const& sys, Groupoid const& g) {
  if (sys.size() != g.size()) throw Error("carrier size mismatch");
  ElementMap const& u = sys.involution();
  auto const n = static_cast<Element>(sys.size());
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (sys.related(x, y) != (g.op(u(x), u(y)) == y)) {
        return Verdict::fail("(x,y) in R iff x'|y' = y", {x, y}, {"x", "y"});
      }
    }
  }
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      bool in_upper = upper_cone(sys, u(x), u(y)).contains(g.op(x, y));
      bool in_lower = lower_cone(sys, x, y).contains(g.prime(g.op(x, y)));
      if (!in_upper) return Verdict::fail("x|y in U(x',y')", {x, y}, {"x", "y"});
      if (!in_lower) {
        return Verdict::fail("(x|y)' not in L(x,y)", {x, y}, {"x", "y"});
      }
    }
  }
  return Verdict::pass();
}

bool verify_roundtrip(RelationalSystem const& sys, ChoicePolicy const& policy) {
  RelationalSystem back = induce_system(assign(sys, policy));
  return back.relation() == sys.relation() && back.involution() == sys.involution();
}

std::vector<ElementPair> coincidence_pairs(Groupoid const& g) {
  if (!is_sheffer(g)) throw Error("not a Sheffer groupoid");
  std::vector<ElementPair> out;
  for (Element x = 0; x < g.size(); ++x) {
    for (Element y = 0; y < g.size(); ++y) {
      if (g.op(x, y) == g.prime(y)) out.emplace_back(x, y);
    }
  }
  return out;
}

Groupoid lattice_sheffer(RelationalSystem const& order, LatticeMode mode) {
  PropertyReport props = relation_properties(order.relation());
  if (!props.reflexive || !props.antisymmetric || !props.transitive) {
    throw Error("relation is not a partial order");
  }
  ElementMap const& u = order.involution();
  if (!check_involution(order, u)) throw Error("involution is not antitone of period 2");

  auto const n = static_cast<Element>(order.size());
  Carrier const& c = order.carrier();
  // Least element of U(a,b) (join) or greatest of L(a,b) (meet).
  auto bound = [&](Element a, Element b) {
    ElementSet cone = mode == LatticeMode::Join ? upper_cone(order, a, b) : lower_cone(order, a, b);
    for (Element cand : cone.elements()) {
      bool extreme = true;
      for (Element other : cone.elements()) {
        bool ok = mode == LatticeMode::Join ? order.related(cand, other) : order.related(other, cand);
        if (!ok) {
          extreme = false;
          break;
        }
      }
      if (extreme) return cand;
    }
    throw Error("pair " + pair_name(c, a, b) + " has no " +
                (mode == LatticeMode::Join ? "least upper bound" : "greatest lower bound"));
  };

  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[x * n + y] = bound(u(x), u(y));
  }
  return Groupoid(c, std::move(table), order.bottom(), order.top());
}

}  // namespace shefferkit
