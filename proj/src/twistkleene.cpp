#include "shefferkit/twistkleene.hpp"

#include <omp.h>

#include "shefferkit/morphisms.hpp"

namespace shefferkit {

namespace {

void require_pair_capacity(std::size_t n) {
  if (n * n > kMaxCarrier) {
    throw Error("twist-product of a carrier of size " + std::to_string(n) +
                " exceeds the 64-element cap");
  }
}

ElementMap swap_map(PairIndexing const& idx) {
  std::vector<Element> image(idx.size());
  for (Element p = 0; p < idx.size(); ++p) image[p] = idx.flat(idx.second(p), idx.first(p));
  return ElementMap(idx.size(), std::move(image));
}

// Row p = (x,y) of S: all (z,v) with z in succ(x) and v in pred(y).
std::uint64_t twist_row(BinaryRelation const& rel, PairIndexing const& idx, Element p) {
  std::uint64_t row = 0;
  std::uint64_t below_y = rel.predecessors(idx.second(p)).bits();
  for (Element z : rel.successors(idx.first(p)).elements()) {
    row |= below_y << (z * idx.base_size());
  }
  return row;
}

}  // namespace

Carrier pair_carrier(Carrier const& base) {
  std::vector<std::string> names;
  names.reserve(base.size() * base.size());
  for (auto const& x : base.names()) {
    for (auto const& y : base.names()) names.push_back("(" + x + "," + y + ")");
  }
  return Carrier(std::move(names));
}

RelationalSystem twist_product(RelationalSystem const& sys, Execution exec) {
  std::size_t n = sys.size();
  require_pair_capacity(n);
  PairIndexing idx(n);
  auto const m = static_cast<int>(idx.size());
  std::vector<std::uint64_t> rows(idx.size(), 0);
  BinaryRelation const& rel = sys.relation();
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(static) num_threads(worker_count())
    for (int p = 0; p < m; ++p) rows[p] = twist_row(rel, idx, static_cast<Element>(p));
  } else {
    for (int p = 0; p < m; ++p) rows[p] = twist_row(rel, idx, static_cast<Element>(p));
  }
  return RelationalSystem(pair_carrier(sys.carrier()), BinaryRelation::from_rows(idx.size(), rows),
                          swap_map(idx));
}

Groupoid twist_sheffer(Groupoid const& g, ElementMap const& inv) {
  std::size_t n = g.size();
  require_pair_capacity(n);
  if (inv.domain_size() != n || inv.codomain_size() != n) {
    throw Error("involution must be a self-map of the base carrier");
  }
  for (Element x = 0; x < n; ++x) {
    if (inv(x) != g.prime(x)) {
      throw Error("involution differs from x|x at " + g.carrier().name(x));
    }
  }
  PairIndexing idx(n);
  std::vector<Element> table(idx.size() * idx.size());
  for (Element p = 0; p < idx.size(); ++p) {
    Element x = idx.first(p), y = idx.second(p);
    for (Element q = 0; q < idx.size(); ++q) {
      Element z = idx.first(q), v = idx.second(q);
      table[p * idx.size() + q] = idx.flat(g.op(inv(y), inv(v)), inv(g.op(x, z)));
    }
  }
  return Groupoid(pair_carrier(g.carrier()), std::move(table));
}

BaseEmbedding embed_base(RelationalSystem const& sys, Element a) {
  if (a >= sys.size()) throw Error("base point out of range");
  if (!sys.related(a, a)) {
    throw Error("base point " + sys.carrier().name(a) + " is not related to itself");
  }
  PairIndexing idx(sys.size());
  std::vector<Element> image(sys.size());
  for (Element x = 0; x < sys.size(); ++x) image[x] = idx.flat(x, a);
  ElementMap f(idx.size(), std::move(image));

  RelationalSystem twist = twist_product(sys);
  RelationalSystem plain_src(sys.carrier(), sys.relation());
  RelationalSystem plain_dst(twist.carrier(), twist.relation());
  Verdict v = f.injective() ? is_rel_homomorphism(plain_src, plain_dst, f, true)
                            : Verdict::fail("not injective");
  return {std::move(f), std::move(v)};
}

namespace {

Verdict kleene_condition(BinaryRelation const& rel, ElementMap const& u) {
  auto const n = static_cast<Element>(rel.size());
  for (Element x = 0; x < n; ++x) {
    ElementSet low = lower_cone(rel, x, u(x));
    for (Element y = 0; y < n; ++y) {
      if (!set_related(rel, low, upper_cone(rel, y, u(y)))) {
        return Verdict::fail("(L(x,x'),U(y,y')) not in R", {x, y}, {"x", "y"});
      }
    }
  }
  return Verdict::pass();
}

}  // namespace

Verdict is_kleene(RelationalSystem const& sys) {
  return kleene_condition(sys.relation(), sys.involution());
}

ElementSet p_a_subset(RelationalSystem const& sys, Element a) {
  std::size_t n = sys.size();
  require_pair_capacity(n);
  if (a >= n) throw Error("base point out of range");
  PairIndexing idx(n);
  BinaryRelation const& rel = sys.relation();
  ElementSet above_a = rel.successors(a);
  ElementSet below_a = rel.predecessors(a);
  ElementSet out;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      ElementSet low = lower_cone(rel, x, y);
      ElementSet up = upper_cone(rel, x, y);
      if ((low & below_a) == low && (up & above_a) == up) out.insert(idx.flat(x, y));
    }
  }
  return out;
}

KleeneSubsystem kleene_subsystem(RelationalSystem const& sys, Element a) {
  if (Verdict d = is_directed(sys); !d) {
    throw Error("base system is not directed: " + describe(d, sys.carrier()));
  }
  PairIndexing idx(sys.size());
  RelationalSystem twist = twist_product(sys);
  std::vector<Element> members = p_a_subset(sys, a).elements();

  std::vector<Element> local(idx.size(), ~Element{0});
  for (std::size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<Element>(i);

  auto const k = members.size();
  std::vector<std::string> names;
  BinaryRelation t(k);
  std::vector<Element> star(k);
  for (Element i = 0; i < k; ++i) {
    names.push_back(twist.carrier().name(members[i]));
    for (Element j = 0; j < k; ++j) {
      if (twist.related(members[i], members[j])) t.set(i, j);
    }
    Element image = local[twist.prime(members[i])];
    if (image == ~Element{0}) throw Error("P_a is not closed under the twist involution");
    star[i] = image;
  }

  KleeneSubsystem out{
      RelationalSystem(Carrier(std::move(names)), std::move(t), ElementMap(k, std::move(star))),
      members, {}, {}, {}, {}, {}};
  out.drsi = validate_drsi(out.system);
  out.kleene = is_kleene(out.system);

  // Cones of the full twist-product, tested only on members of P_a.
  BinaryRelation const& s = twist.relation();
  for (Element i = 0; i < k && out.kleene_ambient.holds; ++i) {
    Element x = members[i];
    ElementSet low = lower_cone(s, x, twist.prime(x));
    for (Element j = 0; j < k; ++j) {
      Element y = members[j];
      if (!set_related(s, low, upper_cone(s, y, twist.prime(y)))) {
        out.kleene_ambient = Verdict::fail("(L(x,x*),U(y,y*)) not in S", {i, j}, {"x", "y"});
        break;
      }
    }
  }

  std::vector<Element> image(sys.size());
  bool lands = true;
  for (Element x = 0; x < sys.size(); ++x) {
    image[x] = local[idx.flat(x, a)];
    if (image[x] == ~Element{0}) {
      lands = false;
      image[x] = 0;
    }
  }
  out.embedding = ElementMap(k, std::move(image));
  if (!lands) {
    out.embedding_verdict = Verdict::fail("some (x,a) lies outside P_a");
  } else if (!out.embedding.injective()) {
    out.embedding_verdict = Verdict::fail("not injective");
  } else {
    out.embedding_verdict =
        is_rel_homomorphism(RelationalSystem(sys.carrier(), sys.relation()),
                            RelationalSystem(out.system.carrier(), out.system.relation()),
                            out.embedding, true);
  }
  return out;
}

}  // namespace shefferkit
