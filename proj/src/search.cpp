#include "shefferkit/search.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include <omp.h>

#include "shefferkit/sheffer.hpp"

namespace shefferkit {

EnumerationSpec& EnumerationSpec::require(std::string_view catalog_key) {
  required.push_back(catalog_entry(catalog_key).law);
  return *this;
}

EnumerationSpec& EnumerationSpec::forbid(std::string_view catalog_key) {
  forbidden.push_back(catalog_entry(catalog_key).law);
  return *this;
}

namespace {

constexpr Element kUnset = ~Element{0};

/// Backtracking over table cells with lazily watched law instances.
///
/// An instance is one required law at one variable assignment. Each
/// undecided instance sits in the watch list of the first unfilled cell
/// its evaluation needs; filling that cell re-evaluates it. Satisfied
/// instances stay in the list of the cell that completed them, so that
/// refilling the cell after backtracking re-checks them. Watch lists are
/// never restored on backtrack: an instance parked on a later cell is
/// still evaluated when that cell is filled, which keeps every complete
/// table checked against every instance.
class Engine {
 public:
  struct Bounds {
    std::optional<Element> bottom;
    std::optional<Element> top;
  };

  Engine(EnumerationSpec const& spec, std::vector<CompiledLaw> const& required,
         std::vector<CompiledLaw> const& forbidden, Bounds bounds)
      : spec_(spec),
        n_(static_cast<Element>(spec.n)),
        required_(required),
        forbidden_(forbidden),
        bounds_(bounds),
        table_(spec.n * spec.n, kUnset),
        watch_(spec.n * spec.n) {
    build_order();
  }

  /// Runs the search with the first cell fixed to `first` (or over all
  /// values when empty). `emit` returns false to stop.
  void run(std::optional<Element> first, std::function<bool(Groupoid const&)> const& emit) {
    emit_ = &emit;
    if (!seed_instances()) return;
    Element cell = order_.front();
    for (Element v = 0; v < n_ && !stop_; ++v) {
      if (first && v != *first) continue;
      ++nodes_;
      if (fill(cell, v)) descend(1);
      unfill(cell);
    }
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  enum class Status { Satisfied, Violated, Blocked };

  struct Instance {
    std::uint32_t law;
    std::array<Element, Law::kMaxVariables> values;
  };

  void build_order() {
    auto push = [this](Element x, Element y) {
      if (spec_.commutative && x > y) return;
      order_.push_back(x * n_ + y);
    };
    if (spec_.order == FillOrder::DiagonalFirst) {
      for (Element x = 0; x < n_; ++x) push(x, x);
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) {
          if (x != y) push(x, y);
        }
      }
    } else {
      for (Element x = 0; x < n_; ++x) {
        for (Element y = 0; y < n_; ++y) push(x, y);
      }
    }
  }

  Element canonical_cell(Element cell) const {
    if (!spec_.commutative) return cell;
    Element x = cell / n_, y = cell % n_;
    return x <= y ? cell : y * n_ + x;
  }

  /// Evaluates one program; sets `blocked` to the first unfilled cell met.
  bool run_program(TermProgram const& prog, Element const* values, Element& result,
                   Element& blocked) {
    scratch_.resize(prog.code.size());
    for (std::size_t i = 0; i < prog.code.size(); ++i) {
      auto const& ins = prog.code[i];
      switch (ins.op) {
        case TermProgram::Op::Variable:
          scratch_[i] = values[ins.a];
          break;
        case TermProgram::Op::Bottom:
          scratch_[i] = *bounds_.bottom;
          break;
        case TermProgram::Op::Top:
          scratch_[i] = *bounds_.top;
          break;
        case TermProgram::Op::Apply: {
          Element cell = scratch_[ins.a] * n_ + scratch_[ins.b];
          if (table_[cell] == kUnset) {
            blocked = canonical_cell(cell);
            return false;
          }
          scratch_[i] = table_[cell];
          break;
        }
      }
    }
    result = scratch_.back();
    return true;
  }

  Status evaluate(Instance const& inst, Element& blocked) {
    CompiledLaw const& law = required_[inst.law];
    Element const* values = inst.values.data();
    std::optional<Element> pending;
    for (auto const& [lhs, rhs] : law.premises) {
      Element l = 0, r = 0, cell = 0;
      if (!run_program(lhs, values, l, cell) || !run_program(rhs, values, r, cell)) {
        if (!pending) pending = cell;
        continue;
      }
      if (l != r) return Status::Satisfied;
    }
    if (pending) {
      blocked = *pending;
      return Status::Blocked;
    }
    Element l = 0, r = 0;
    if (!run_program(law.conclusion.first, values, l, blocked) ||
        !run_program(law.conclusion.second, values, r, blocked)) {
      return Status::Blocked;
    }
    return l == r ? Status::Satisfied : Status::Violated;
  }

  bool seed_instances() {
    for (std::uint32_t li = 0; li < required_.size(); ++li) {
      std::size_t k = required_[li].variables.size();
      Instance inst{li, {}};
      while (true) {
        Element blocked = 0;
        Status s = evaluate(inst, blocked);
        if (s == Status::Violated) return false;
        if (s == Status::Blocked) {
          instances_.push_back(inst);
          watch_[blocked].push_back(static_cast<std::uint32_t>(instances_.size() - 1));
        }
        std::size_t pos = k;
        bool done = true;
        while (pos > 0) {
          --pos;
          if (++inst.values[pos] < n_) {
            done = false;
            break;
          }
          inst.values[pos] = 0;
        }
        if (done) break;
      }
    }
    return true;
  }

  bool fill(Element cell, Element value) {
    table_[cell] = value;
    Element x = cell / n_, y = cell % n_;
    if (spec_.commutative) table_[y * n_ + x] = value;
    auto& list = watch_[cell];
    std::size_t i = 0;
    while (i < list.size()) {
      Element blocked = 0;
      Status s = evaluate(instances_[list[i]], blocked);
      if (s == Status::Violated) return false;
      if (s == Status::Blocked) {
        watch_[blocked].push_back(list[i]);
        list[i] = list.back();
        list.pop_back();
        continue;
      }
      ++i;
    }
    return true;
  }

  void unfill(Element cell) {
    table_[cell] = kUnset;
    Element x = cell / n_, y = cell % n_;
    if (spec_.commutative) table_[y * n_ + x] = kUnset;
  }

  void descend(std::size_t depth) {
    if (depth == order_.size()) {
      leaf();
      return;
    }
    Element cell = order_[depth];
    for (Element v = 0; v < n_ && !stop_; ++v) {
      ++nodes_;
      if (fill(cell, v)) descend(depth + 1);
      unfill(cell);
    }
  }

  void leaf() {
    Groupoid g(Carrier(spec_.n), table_, bounds_.bottom, bounds_.top);
    for (auto const& law : forbidden_) {
      if (check_law(g, law)) return;
    }
    if (spec_.up_to_isomorphism) {
      // Keep the table only when it is its own least relabeling.
      std::vector<std::uint32_t> own(table_.begin(), table_.end());
      own.push_back(bounds_.bottom ? *bounds_.bottom : kUnset);
      own.push_back(bounds_.top ? *bounds_.top : kUnset);
      if (canonical_form(g).code != own) return;
    }
    if (!(*emit_)(g)) stop_ = true;
  }

  EnumerationSpec const& spec_;
  Element n_;
  std::vector<CompiledLaw> const& required_;
  std::vector<CompiledLaw> const& forbidden_;
  Bounds bounds_;
  std::vector<Element> table_;
  std::vector<Element> order_;
  std::vector<Instance> instances_;
  std::vector<std::vector<std::uint32_t>> watch_;
  std::vector<Element> scratch_;
  std::function<bool(Groupoid const&)> const* emit_ = nullptr;
  std::uint64_t nodes_ = 0;
  bool stop_ = false;
};

std::vector<Engine::Bounds> bound_choices(EnumerationSpec const& spec) {
  if (!spec.with_bounds) return {Engine::Bounds{}};
  std::vector<Engine::Bounds> out;
  for (Element b = 0; b < spec.n; ++b) {
    for (Element t = 0; t < spec.n; ++t) out.push_back({b, t});
  }
  return out;
}

bool model_less(Groupoid const& a, Groupoid const& b) {
  if (a.bottom() != b.bottom()) return a.bottom() < b.bottom();
  if (a.top() != b.top()) return a.top() < b.top();
  return a.table() < b.table();
}

struct BranchResult {
  std::vector<Groupoid> models;
  std::uint64_t count = 0;
  std::uint64_t nodes = 0;
};

std::vector<BranchResult> run_branches(EnumerationSpec const& spec, Execution exec,
                                       bool keep_models) {
  if (spec.n == 0 || spec.n > kMaxGroupoidEnumeration) {
    throw Error("groupoid enumeration supports carriers of size 1..5");
  }
  std::vector<CompiledLaw> required, forbidden;
  for (auto const& law : spec.required) required.push_back(compile_law(law));
  for (auto const& law : spec.forbidden) forbidden.push_back(compile_law(law));
  if (!spec.with_bounds) {
    for (auto const* laws : {&required, &forbidden}) {
      for (auto const& law : *laws) {
        if (law.uses_constants) throw Error("laws mention 0/1; enumerate with bounds");
      }
    }
  }

  std::vector<Engine::Bounds> bounds = bound_choices(spec);
  auto const n = static_cast<int>(spec.n);
  auto const branches = static_cast<int>(bounds.size()) * n;
  std::vector<BranchResult> results(static_cast<std::size_t>(branches));
  // Early stop inside a branch is sound only when its leaves come out
  // in lexicographic order.
  bool stop_at_limit = spec.limit && spec.order == FillOrder::RowMajor;

  auto work = [&](int b) {
    BranchResult& res = results[static_cast<std::size_t>(b)];
    Engine engine(spec, required, forbidden, bounds[static_cast<std::size_t>(b / n)]);
    engine.run(static_cast<Element>(b % n), [&](Groupoid const& g) {
      ++res.count;
      if (keep_models) res.models.push_back(g);
      return !(stop_at_limit && res.count >= *spec.limit);
    });
    res.nodes = engine.nodes();
  };

  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic, 1) num_threads(worker_count())
    for (int b = 0; b < branches; ++b) work(b);
  } else {
    for (int b = 0; b < branches; ++b) work(b);
  }
  return results;
}

}  // namespace

std::vector<Groupoid> enumerate_groupoids(EnumerationSpec const& spec, EnumerationStats* stats,
                                          Execution exec) {
  std::vector<BranchResult> results = run_branches(spec, exec, true);
  std::vector<Groupoid> out;
  std::uint64_t nodes = 0;
  for (auto& r : results) {
    nodes += r.nodes;
    std::move(r.models.begin(), r.models.end(), std::back_inserter(out));
  }
  std::stable_sort(out.begin(), out.end(), model_less);
  if (spec.limit && out.size() > *spec.limit) {
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(*spec.limit), out.end());
  }
  if (stats) {
    stats->nodes = nodes;
    stats->models = out.size();
  }
  return out;
}

std::uint64_t count_models(EnumerationSpec const& spec, Execution exec) {
  if (spec.limit) return enumerate_groupoids(spec, nullptr, exec).size();
  std::uint64_t total = 0;
  for (auto const& r : run_branches(spec, exec, false)) total += r.count;
  return total;
}

std::optional<Groupoid> find_model(std::vector<Law> const& required,
                                   std::vector<Law> const& forbidden, std::size_t max_n) {
  if (max_n > kMaxGroupoidEnumeration) throw Error("find_model supports sizes up to 5");
  bool constants = false;
  for (auto const* laws : {&required, &forbidden}) {
    for (auto const& law : *laws) constants = constants || law.uses_constants();
  }
  for (std::size_t n = 1; n <= max_n; ++n) {
    EnumerationSpec spec;
    spec.n = n;
    spec.required = required;
    spec.forbidden = forbidden;
    spec.with_bounds = constants;
    spec.order = FillOrder::RowMajor;
    spec.limit = 1;
    std::vector<Groupoid> found = enumerate_groupoids(spec, nullptr, Execution::Serial);
    if (!found.empty()) return found.front();
  }
  return std::nullopt;
}

std::vector<ElementMap> period_two_maps(std::size_t n) {
  std::vector<ElementMap> out;
  std::vector<Element> image(n, kUnset);
  std::function<void(Element)> rec = [&](Element x) {
    while (x < n && image[x] != kUnset) ++x;
    if (x == n) {
      out.emplace_back(n, image);
      return;
    }
    for (Element y = x; y < n; ++y) {
      if (image[y] != kUnset) continue;
      image[x] = y;
      image[y] = x;
      rec(x + 1);
      image[x] = kUnset;
      image[y] = kUnset;
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(),
            [](ElementMap const& a, ElementMap const& b) { return a.image() < b.image(); });
  return out;
}

namespace {

void require_system_size(std::size_t n) {
  if (n == 0 || n > kMaxSystemEnumeration) {
    throw Error("system enumeration supports carriers of size 1..4");
  }
}

}  // namespace

std::vector<RelationalSystem> enumerate_drsi(std::size_t n) {
  require_system_size(n);
  std::vector<std::pair<Element, Element>> off;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (x != y) off.emplace_back(x, y);
    }
  }
  std::vector<ElementMap> involutions = period_two_maps(n);
  std::vector<RelationalSystem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << off.size()); ++mask) {
    BinaryRelation rel = BinaryRelation::diagonal(n);
    for (std::size_t i = 0; i < off.size(); ++i) {
      if ((mask >> i) & 1u) rel.set(off[i].first, off[i].second);
    }
    if (!is_directed(rel)) continue;
    for (auto const& u : involutions) {
      if (check_involution(rel, u)) out.emplace_back(Carrier(n), rel, u);
    }
  }
  return out;
}

std::vector<RelationalSystem> enumerate_directed(std::size_t n) {
  require_system_size(n);
  std::vector<RelationalSystem> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * n)); ++mask) {
    BinaryRelation rel(n);
    for (Element c = 0; c < n * n; ++c) {
      if ((mask >> c) & 1u) rel.set(c / n, c % n);
    }
    if (is_directed(rel)) out.emplace_back(Carrier(n), rel);
  }
  return out;
}

Groupoid relabel(Groupoid const& g, std::vector<Element> const& perm) {
  std::size_t n = g.size();
  std::vector<Element> table(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) table[perm[x] * n + perm[y]] = perm[g.op(x, y)];
  }
  auto map = [&perm](std::optional<Element> e) -> std::optional<Element> {
    if (e) return perm[*e];
    return std::nullopt;
  };
  return Groupoid(Carrier(n), std::move(table), map(g.bottom()), map(g.top()));
}

RelationalSystem relabel(RelationalSystem const& sys, std::vector<Element> const& perm) {
  std::size_t n = sys.size();
  BinaryRelation rel(n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (sys.related(x, y)) rel.set(perm[x], perm[y]);
    }
  }
  std::optional<ElementMap> inv;
  if (sys.has_involution()) {
    std::vector<Element> image(n);
    for (Element x = 0; x < n; ++x) image[perm[x]] = perm[sys.prime(x)];
    inv = ElementMap(n, std::move(image));
  }
  auto map = [&perm](std::optional<Element> e) -> std::optional<Element> {
    if (e) return perm[*e];
    return std::nullopt;
  };
  return RelationalSystem(Carrier(n), std::move(rel), std::move(inv), map(sys.bottom()),
                          map(sys.top()));
}

namespace {

constexpr std::uint32_t kAbsent = kUnset;

CanonicalForm code_of(Groupoid const& g) {
  CanonicalForm f;
  f.code.assign(g.table().begin(), g.table().end());
  f.code.push_back(g.bottom() ? *g.bottom() : kAbsent);
  f.code.push_back(g.top() ? *g.top() : kAbsent);
  return f;
}

CanonicalForm code_of(RelationalSystem const& sys) {
  CanonicalForm f;
  std::size_t n = sys.size();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) f.code.push_back(sys.related(x, y) ? 1 : 0);
  }
  if (sys.has_involution()) {
    for (Element x = 0; x < n; ++x) f.code.push_back(sys.prime(x));
  }
  f.code.push_back(sys.bottom() ? *sys.bottom() : kAbsent);
  f.code.push_back(sys.top() ? *sys.top() : kAbsent);
  return f;
}

template <typename Structure>
CanonicalForm least_code(Structure const& s) {
  std::vector<Element> perm(s.size());
  std::iota(perm.begin(), perm.end(), Element{0});
  CanonicalForm best = code_of(relabel(s, perm));
  while (std::next_permutation(perm.begin(), perm.end())) {
    CanonicalForm c = code_of(relabel(s, perm));
    if (c < best) best = std::move(c);
  }
  return best;
}

}  // namespace

CanonicalForm canonical_form(Groupoid const& g) { return least_code(g); }

CanonicalForm canonical_form(RelationalSystem const& sys) { return least_code(sys); }

}  // namespace shefferkit
