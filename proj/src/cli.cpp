#include "shefferkit/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "shefferkit/bridge.hpp"
#include "shefferkit/morphisms.hpp"
#include "shefferkit/search.hpp"
#include "shefferkit/sheffer.hpp"
#include "shefferkit/terms.hpp"
#include "shefferkit/twistkleene.hpp"

namespace shefferkit::cli {

FormatError::FormatError(std::string const& message, std::size_t line)
    : Error(line ? "line " + std::to_string(line) + ": " + message : message), line_(line) {}

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> words;
};

std::vector<Line> significant_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream words{std::string(raw)};
    Line line{number, {}};
    for (std::string w; words >> w;) line.words.push_back(std::move(w));
    if (!line.words.empty()) out.push_back(std::move(line));
    pos = end + 1;
  }
  return out;
}

/// Sections shared by system and groupoid files.
class SectionReader {
 public:
  SectionReader(std::string_view text, std::string_view header) : lines_(significant_lines(text)) {
    if (lines_.empty()) throw FormatError("empty file, expected '" + std::string(header) + "'", 0);
    auto const& first = lines_.front();
    if (first.words.size() != 1 || first.words[0] != header) {
      throw FormatError("expected '" + std::string(header) + "' header", first.number);
    }
    next_ = 1;
  }

  bool done() const { return next_ >= lines_.size(); }
  Line const& take() { return lines_[next_++]; }

  /// Next `rows` lines of exactly `width` words each.
  std::vector<Line const*> block(Line const& head, std::size_t rows, std::size_t width) {
    std::vector<Line const*> out;
    for (std::size_t r = 0; r < rows; ++r) {
      if (done()) {
        throw FormatError("'" + head.words[0] + "' needs " + std::to_string(rows) +
                              " rows, found " + std::to_string(r),
                          head.number);
      }
      Line const& row = take();
      if (row.words.size() != width) {
        throw FormatError("row has " + std::to_string(row.words.size()) + " entries, expected " +
                              std::to_string(width),
                          row.number);
      }
      out.push_back(&row);
    }
    return out;
  }

  void mark(Line const& line, std::string const& section) {
    for (auto const& s : seen_) {
      if (s == section) throw FormatError("duplicate '" + section + "' section", line.number);
    }
    seen_.push_back(section);
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::vector<std::string> seen_;
};

Carrier read_elements(Line const& line) {
  if (line.words.size() < 2) throw FormatError("'elements' needs at least one name", line.number);
  try {
    return Carrier(std::vector<std::string>(line.words.begin() + 1, line.words.end()));
  } catch (FormatError const&) {
    throw;
  } catch (Error const& e) {
    throw FormatError(e.what(), line.number);
  }
}

Element lookup(Carrier const& c, std::string const& name, std::size_t line) {
  if (auto e = c.find(name)) return *e;
  throw FormatError("unknown element '" + name + "'", line);
}

Carrier const& need(std::optional<Carrier> const& c, Line const& line) {
  if (!c) throw FormatError("'" + line.words[0] + "' before 'elements'", line.number);
  return *c;
}

std::pair<Element, Element> read_bounds(Carrier const& c, Line const& line) {
  if (line.words.size() != 3) throw FormatError("'bounds' needs bottom and top", line.number);
  return {lookup(c, line.words[1], line.number), lookup(c, line.words[2], line.number)};
}

void expect_bare(Line const& line) {
  if (line.words.size() != 1) {
    throw FormatError("'" + line.words[0] + "' takes no arguments", line.number);
  }
}

}  // namespace

RelationalSystem parse_system_file(std::string_view text) {
  SectionReader in(text, "system");
  std::optional<Carrier> carrier;
  std::optional<BinaryRelation> rel;
  std::optional<ElementMap> inv;
  std::optional<std::pair<Element, Element>> bounds;
  while (!in.done()) {
    Line const& line = in.take();
    std::string const& kw = line.words[0];
    if (kw == "elements") {
      in.mark(line, kw);
      carrier = read_elements(line);
    } else if (kw == "relation") {
      in.mark(line, kw);
      expect_bare(line);
      std::size_t n = need(carrier, line).size();
      BinaryRelation r(n);
      auto rows = in.block(line, n, n);
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          std::string const& d = rows[x]->words[y];
          if (d != "0" && d != "1") throw FormatError("expected 0 or 1, found '" + d + "'", rows[x]->number);
          if (d == "1") r.set(x, y);
        }
      }
      rel = std::move(r);
    } else if (kw == "involution") {
      in.mark(line, kw);
      Carrier const& c = need(carrier, line);
      if (line.words.size() != c.size() + 1) {
        throw FormatError("'involution' needs " + std::to_string(c.size()) + " names", line.number);
      }
      std::vector<Element> image;
      for (std::size_t i = 1; i < line.words.size(); ++i) {
        image.push_back(lookup(c, line.words[i], line.number));
      }
      inv = ElementMap(c.size(), std::move(image));
    } else if (kw == "bounds") {
      in.mark(line, kw);
      bounds = read_bounds(need(carrier, line), line);
    } else {
      throw FormatError("unknown section '" + kw + "'", line.number);
    }
  }
  if (!carrier) throw FormatError("missing 'elements' section", 0);
  if (!rel) throw FormatError("missing 'relation' section", 0);
  std::optional<Element> bottom, top;
  if (bounds) std::tie(bottom, top) = *bounds;
  return RelationalSystem(std::move(*carrier), std::move(*rel), std::move(inv), bottom, top);
}

Groupoid parse_groupoid_file(std::string_view text) {
  SectionReader in(text, "groupoid");
  std::optional<Carrier> carrier;
  std::optional<std::vector<Element>> table;
  std::optional<std::pair<Element, Element>> bounds;
  while (!in.done()) {
    Line const& line = in.take();
    std::string const& kw = line.words[0];
    if (kw == "elements") {
      in.mark(line, kw);
      carrier = read_elements(line);
    } else if (kw == "table") {
      in.mark(line, kw);
      expect_bare(line);
      Carrier const& c = need(carrier, line);
      std::size_t n = c.size();
      std::vector<Element> t;
      for (Line const* row : in.block(line, n, n)) {
        for (auto const& name : row->words) t.push_back(lookup(c, name, row->number));
      }
      table = std::move(t);
    } else if (kw == "bounds") {
      in.mark(line, kw);
      bounds = read_bounds(need(carrier, line), line);
    } else {
      throw FormatError("unknown section '" + kw + "'", line.number);
    }
  }
  if (!carrier) throw FormatError("missing 'elements' section", 0);
  if (!table) throw FormatError("missing 'table' section", 0);
  std::optional<Element> bottom, top;
  if (bounds) std::tie(bottom, top) = *bounds;
  return Groupoid(std::move(*carrier), std::move(*table), bottom, top);
}

ElementMap parse_map_file(std::string_view text, Carrier const& src, Carrier const& dst) {
  SectionReader in(text, "map");
  std::optional<ElementMap> f;
  while (!in.done()) {
    Line const& line = in.take();
    std::string const& kw = line.words[0];
    if (kw != "image") throw FormatError("unknown section '" + kw + "'", line.number);
    in.mark(line, kw);
    if (line.words.size() != src.size() + 1) {
      throw FormatError("'image' needs " + std::to_string(src.size()) + " names", line.number);
    }
    std::vector<Element> image;
    for (std::size_t i = 1; i < line.words.size(); ++i) {
      image.push_back(lookup(dst, line.words[i], line.number));
    }
    f = ElementMap(dst.size(), std::move(image));
  }
  if (!f) throw FormatError("missing 'image' section", 0);
  return *f;
}

namespace {

void print_names(std::ostream& os, std::string_view keyword, std::vector<std::string> const& names) {
  os << keyword;
  for (auto const& n : names) os << ' ' << n;
  os << '\n';
}

std::vector<std::string> names_of(Carrier const& c, std::vector<Element> const& elems) {
  std::vector<std::string> out;
  for (Element e : elems) out.push_back(c.name(e));
  return out;
}

void print_bounds(std::ostream& os, Carrier const& c, std::optional<Element> bottom,
                  std::optional<Element> top) {
  if (bottom && top) os << "bounds " << c.name(*bottom) << ' ' << c.name(*top) << '\n';
}

}  // namespace

std::string print_system_file(RelationalSystem const& sys) {
  std::ostringstream os;
  Carrier const& c = sys.carrier();
  os << "system\n";
  print_names(os, "elements", c.names());
  os << "relation\n";
  for (Element x = 0; x < sys.size(); ++x) {
    for (Element y = 0; y < sys.size(); ++y) os << (y ? " " : "") << (sys.related(x, y) ? '1' : '0');
    os << '\n';
  }
  if (sys.has_involution()) print_names(os, "involution", names_of(c, sys.involution().image()));
  print_bounds(os, c, sys.bottom(), sys.top());
  return os.str();
}

std::string print_groupoid_file(Groupoid const& g) {
  std::ostringstream os;
  Carrier const& c = g.carrier();
  os << "groupoid\n";
  print_names(os, "elements", c.names());
  os << "table\n";
  for (Element x = 0; x < g.size(); ++x) {
    for (Element y = 0; y < g.size(); ++y) os << (y ? " " : "") << c.name(g.op(x, y));
    os << '\n';
  }
  print_bounds(os, c, g.bottom(), g.top());
  return os.str();
}

std::string print_map_file(ElementMap const& f, Carrier const& dst) {
  std::ostringstream os;
  os << "map\n";
  print_names(os, "image", names_of(dst, f.image()));
  return os.str();
}

namespace {

/// Input problem already phrased for the user.
class InputError : public Error {
 public:
  using Error::Error;
};

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename Parse>
auto load(std::string const& path, Parse parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (FormatError const& e) {
    throw InputError(path + ": " + e.what());
  } catch (Error const& e) {
    throw InputError(path + ": " + e.what());
  }
}

RelationalSystem load_system(std::string const& path) {
  return load(path, [](std::string const& t) { return parse_system_file(t); });
}

Groupoid load_groupoid(std::string const& path) {
  return load(path, [](std::string const& t) { return parse_groupoid_file(t); });
}

/// "<title>: holds" or "<title>: fails (...)"; a reason equal to the title is dropped.
bool report(std::ostream& out, std::string const& title, Verdict v, Carrier const& c) {
  if (v.reason == title) v.reason.clear();
  out << title << ": " << describe(v, c) << '\n';
  return v.holds;
}

std::string pair_name(Carrier const& c, Element x, Element y) {
  return "(" + c.name(x) + "," + c.name(y) + ")";
}

std::vector<std::string> split_keys(std::string const& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string key; std::getline(ss, key, ',');) {
    if (!key.empty()) out.push_back(key);
  }
  return out;
}

ChoicePolicy parse_policy(std::string const& text) {
  if (text == "min") return ChoicePolicy::min();
  if (text == "max") return ChoicePolicy::max();
  if (text.rfind("rand:", 0) == 0) {
    std::uint64_t seed = 0;
    char const* first = text.data() + 5;
    char const* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, seed);
    if (ec == std::errc() && ptr == last && first != last) return ChoicePolicy::seeded(seed);
  }
  throw InputError("unknown policy '" + text + "' (expected min, max or rand:<seed>)");
}

Element element_named(Carrier const& c, std::string const& name) {
  if (auto e = c.find(name)) return *e;
  throw InputError("unknown element '" + name + "'");
}

// Exit 1 with the failing DRSI component, or 0 when the system qualifies.
int require_drsi(std::ostream& out, RelationalSystem const& sys) {
  DrsiReport rep = validate_drsi(sys);
  if (rep.passes()) return kHolds;
  Carrier const& c = sys.carrier();
  if (!rep.reflexive) report(out, "reflexive", rep.reflexive, c);
  if (!rep.directed) report(out, "directed", rep.directed, c);
  if (!rep.involution) report(out, "involution", rep.involution, c);
  return kFails;
}

int cmd_check_sheffer(std::ostream& out, Groupoid const& g) {
  return report(out, "sheffer", is_sheffer(g), g.carrier()) ? kHolds : kFails;
}

int cmd_check_named(std::ostream& out, std::string const& key, Groupoid const& g) {
  catalog_entry(key);
  return report(out, key, check_named(g, key), g.carrier()) ? kHolds : kFails;
}

int cmd_check_law(std::ostream& out, std::string const& text, Groupoid const& g) {
  Law law = [&] {
    try {
      return parse_law(text);
    } catch (ParseError const& e) {
      throw InputError("law: " + std::string(e.what()));
    }
  }();
  Verdict v = check_law(g, law);
  v.reason.clear();
  return report(out, format_law(law), v, g.carrier()) ? kHolds : kFails;
}

int cmd_check_props(std::ostream& out, RelationalSystem const& sys) {
  PropertyReport p = relation_properties(sys.relation());
  Carrier const& c = sys.carrier();
  auto line = [&](char const* name, bool holds, std::vector<Element> const& w,
                  std::vector<std::string> labels) {
    Verdict v = holds ? Verdict::pass() : Verdict::fail("", w, std::move(labels));
    report(out, name, v, c);
  };
  line("reflexive", p.reflexive, p.reflexive_witness, {"x"});
  line("symmetric", p.symmetric, p.symmetric_witness, {"x", "y"});
  line("antisymmetric", p.antisymmetric, p.antisymmetric_witness, {"x", "y"});
  line("transitive", p.transitive, p.transitive_witness, {"x", "y", "z"});
  return kHolds;
}

int cmd_check_drsi(std::ostream& out, RelationalSystem const& sys) {
  DrsiReport rep = validate_drsi(sys);
  Carrier const& c = sys.carrier();
  report(out, "reflexive", rep.reflexive, c);
  report(out, "directed", rep.directed, c);
  report(out, "involution", rep.involution, c);
  report(out, "cone duality", rep.cone_duality, c);
  return rep.passes() ? kHolds : kFails;
}

int cmd_check_kleene(std::ostream& out, RelationalSystem const& sys) {
  return report(out, "kleene", is_kleene(sys), sys.carrier()) ? kHolds : kFails;
}

int cmd_space(std::ostream& out, RelationalSystem const& sys) {
  if (int rc = require_drsi(out, sys); rc != kHolds) return rc;
  AssignmentSpace space = assignment_space(sys);
  Carrier const& c = sys.carrier();
  auto free = space.free_pairs();
  for (auto const* cell : free) {
    out << "free " << pair_name(c, cell->pair.first, cell->pair.second) << ':';
    for (Element e : cell->candidates.elements()) out << ' ' << c.name(e);
    out << '\n';
  }
  out << "free pairs: " << free.size() << '\n';
  out << "assignments: " << space.count << '\n';
  return kHolds;
}

int cmd_roundtrip(std::ostream& out, RelationalSystem const& sys) {
  if (int rc = require_drsi(out, sys); rc != kHolds) return rc;
  bool all = true;
  for (auto const& [name, policy] :
       {std::pair{"min", ChoicePolicy::min()}, std::pair{"max", ChoicePolicy::max()}}) {
    bool ok = verify_roundtrip(sys, policy);
    out << "roundtrip " << name << ": " << (ok ? "holds" : "fails") << '\n';
    all = all && ok;
  }
  return all ? kHolds : kFails;
}

int cmd_kleene_sub(std::ostream& out, RelationalSystem const& sys, std::string const& base) {
  Element a = element_named(sys.carrier(), base);
  KleeneSubsystem k = kleene_subsystem(sys, a);
  Carrier const& c = k.system.carrier();
  print_names(out, "members:", c.names());
  report(out, "reflexive", k.drsi.reflexive, c);
  report(out, "directed", k.drsi.directed, c);
  report(out, "involution", k.drsi.involution, c);
  report(out, "kleene", k.kleene, c);
  Verdict emb = k.embedding_verdict;
  out << "embedding: " << describe(emb, sys.carrier()) << '\n';
  out << print_system_file(k.system);
  return k.passes() ? kHolds : kFails;
}

void print_hom(std::ostream& out, ElementMap const& f, Carrier const& src, Carrier const& dst) {
  for (Element x = 0; x < f.domain_size(); ++x) {
    out << (x ? " " : "") << src.name(x) << "->" << dst.name(f(x));
  }
  out << '\n';
}

int cmd_hom(std::ostream& out, std::string const& src_path, std::string const& dst_path,
            bool strong, bool groupoids) {
  HomSearchOptions opts;
  opts.strong = strong;
  std::size_t count = 0;
  if (groupoids) {
    Groupoid a = load_groupoid(src_path);
    Groupoid b = load_groupoid(dst_path);
    find_groupoid_homomorphisms(a, b, opts, [&](ElementMap const& f) {
      print_hom(out, f, a.carrier(), b.carrier());
      ++count;
      return true;
    });
  } else {
    RelationalSystem a = load_system(src_path);
    RelationalSystem b = load_system(dst_path);
    find_system_homomorphisms(a, b, opts, [&](ElementMap const& f) {
      print_hom(out, f, a.carrier(), b.carrier());
      ++count;
      return true;
    });
  }
  out << "homomorphisms: " << count << '\n';
  return count ? kHolds : kFails;
}

int cmd_quotient(std::ostream& out, std::string const& g_path, std::string const& map_path,
                 std::string const& dst_path) {
  Groupoid g = load_groupoid(g_path);
  RelationalSystem dst = load_system(dst_path);
  ElementMap f = load(map_path, [&](std::string const& t) {
    return parse_map_file(t, g.carrier(), dst.carrier());
  });
  if (Verdict v = is_sheffer(g); !v) return report(out, "sheffer", v, g.carrier()), kFails;
  RelationalSystem src = induce_system(g);
  try {
    out << print_groupoid_file(induced_image_operation(g, src, f, dst));
  } catch (Error const& e) {
    out << "quotient: fails (" << e.what() << ")\n";
    return kFails;
  }
  return kHolds;
}

struct EnumerateArgs {
  std::size_t n = 0;
  std::string require;
  std::string forbid;
  bool commutative = false;
  bool iso = false;
  bool count = false;
  std::optional<std::size_t> limit;
};

int cmd_enumerate(std::ostream& out, EnumerateArgs const& args) {
  EnumerationSpec spec;
  spec.n = args.n;
  spec.commutative = args.commutative;
  spec.up_to_isomorphism = args.iso;
  spec.limit = args.limit;
  for (auto const& key : split_keys(args.require)) spec.require(key);
  for (auto const& key : split_keys(args.forbid)) spec.forbid(key);
  for (auto const* laws : {&spec.required, &spec.forbidden}) {
    for (auto const& law : *laws) spec.with_bounds = spec.with_bounds || law.uses_constants();
  }
  if (args.count) {
    out << count_models(spec) << '\n';
    return kHolds;
  }
  std::vector<Groupoid> models = enumerate_groupoids(spec);
  for (std::size_t i = 0; i < models.size(); ++i) {
    if (i) out << '\n';
    out << print_groupoid_file(models[i]);
  }
  out << "models: " << models.size() << '\n';
  return kHolds;
}

int cmd_independence(std::ostream& out) {
  struct Case {
    char const* title;
    char const* keep;
    char const* drop;
    std::size_t max_n;
  };
  bool all = true;
  for (Case const& c : {Case{"AX1 without AX2", "AX1", "AX2", 2}, Case{"AX2 without AX1", "AX2", "AX1", 3}}) {
    auto model = find_model({catalog_entry(c.keep).law}, {catalog_entry(c.drop).law}, c.max_n);
    if (model) {
      out << c.title << ":\n" << print_groupoid_file(*model);
    } else {
      out << c.title << ": none up to size " << c.max_n << '\n';
      all = false;
    }
  }
  return all ? kHolds : kFails;
}

void apply_thread_setting() {
  char const* env = std::getenv("SHEFFERKIT_THREADS");
  if (!env || !*env) return;
  int workers = 0;
  std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), workers);
  if (ec != std::errc() || ptr != text.data() + text.size() || workers <= 0) {
    throw InputError("SHEFFERKIT_THREADS must be a positive integer");
  }
  set_worker_count(workers);
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sheffer groupoids and directed relational systems", "shefferkit"};
  app.require_subcommand(1);

  std::string file_a, file_b, file_c, key, law_text, policy = "min", base;
  bool strong = false, groupoids = false;
  EnumerateArgs en;

  auto* check = app.add_subcommand("check", "Check a property")->require_subcommand(1);
  auto* c_sheffer = check->add_subcommand("sheffer", "Both Sheffer axioms");
  c_sheffer->add_option("groupoid", file_a)->required();
  auto* c_named = check->add_subcommand("named", "A catalog law by key");
  c_named->add_option("key", key)->required();
  c_named->add_option("groupoid", file_a)->required();
  auto* c_law = check->add_subcommand("law", "A law given as text");
  c_law->add_option("-e,--law", law_text, "e.g. \"x|y = y|x\"")->required();
  c_law->add_option("groupoid", file_a)->required();
  auto* c_props = check->add_subcommand("props", "Relation properties");
  c_props->add_option("system", file_a)->required();
  auto* c_drsi = check->add_subcommand("drsi", "Reflexive, directed, antitone involution");
  c_drsi->add_option("system", file_a)->required();
  auto* c_kleene = check->add_subcommand("kleene", "Kleene condition");
  c_kleene->add_option("system", file_a)->required();

  auto* induce = app.add_subcommand("induce", "Print the system induced by a Sheffer groupoid");
  induce->add_option("groupoid", file_a)->required();
  auto* assign_cmd = app.add_subcommand("assign", "Print an assigned Sheffer operation");
  assign_cmd->add_option("--policy", policy, "min, max or rand:<seed>");
  assign_cmd->add_option("system", file_a)->required();
  auto* space = app.add_subcommand("space", "Free pairs of the assignment space");
  space->add_option("system", file_a)->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "Induce back from assigned operations");
  roundtrip->add_option("system", file_a)->required();
  auto* twist = app.add_subcommand("twist", "Print the twist-product system");
  twist->add_option("system", file_a)->required();
  auto* twist_op = app.add_subcommand("twist-op", "Print the twist-product operation");
  twist_op->add_option("groupoid", file_a)->required();
  auto* ksub = app.add_subcommand("kleene-sub", "Kleene subsystem at a base point");
  ksub->add_option("--base", base)->required();
  ksub->add_option("system", file_a)->required();
  auto* hom = app.add_subcommand("hom", "List homomorphisms");
  hom->add_flag("--strong", strong);
  hom->add_flag("--groupoid", groupoids, "Inputs are groupoid files");
  hom->add_option("source", file_a)->required();
  hom->add_option("target", file_b)->required();
  auto* quotient = app.add_subcommand("quotient", "Operation induced on a homomorphic image");
  quotient->add_option("groupoid", file_a)->required();
  quotient->add_option("map", file_b)->required();
  quotient->add_option("target", file_c)->required();
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate finite models");
  enumerate->add_option("-n", en.n, "Carrier size")->required()->check(CLI::Range(1, 5));
  enumerate->add_option("--require", en.require, "Catalog keys, comma separated");
  enumerate->add_option("--forbid", en.forbid, "Catalog keys, comma separated");
  enumerate->add_flag("--commutative", en.commutative);
  enumerate->add_flag("--iso", en.iso, "One model per isomorphism class");
  enumerate->add_flag("--count", en.count, "Print only the number of models");
  enumerate->add_option("--limit", en.limit);
  auto* independence = app.add_subcommand("independence", "Models separating the two axioms");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e, out, err) == 0 ? kHolds : kUsage;
  } catch (CLI::ParseError const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    apply_thread_setting();
    if (*c_sheffer) return cmd_check_sheffer(out, load_groupoid(file_a));
    if (*c_named) return cmd_check_named(out, key, load_groupoid(file_a));
    if (*c_law) return cmd_check_law(out, law_text, load_groupoid(file_a));
    if (*c_props) return cmd_check_props(out, load_system(file_a));
    if (*c_drsi) return cmd_check_drsi(out, load_system(file_a));
    if (*c_kleene) return cmd_check_kleene(out, load_system(file_a));
    if (*induce) {
      Groupoid g = load_groupoid(file_a);
      if (Verdict v = is_sheffer(g); !v) return report(out, "sheffer", v, g.carrier()), kFails;
      out << print_system_file(induce_system(g));
      return kHolds;
    }
    if (*assign_cmd) {
      ChoicePolicy p = parse_policy(policy);
      RelationalSystem sys = load_system(file_a);
      if (int rc = require_drsi(out, sys); rc != kHolds) return rc;
      out << print_groupoid_file(assign(sys, p));
      return kHolds;
    }
    if (*space) return cmd_space(out, load_system(file_a));
    if (*roundtrip) return cmd_roundtrip(out, load_system(file_a));
    if (*twist) {
      out << print_system_file(twist_product(load_system(file_a)));
      return kHolds;
    }
    if (*twist_op) {
      Groupoid g = load_groupoid(file_a);
      if (Verdict v = is_sheffer(g); !v) return report(out, "sheffer", v, g.carrier()), kFails;
      out << print_groupoid_file(twist_sheffer(g, derived_involution(g)));
      return kHolds;
    }
    if (*ksub) return cmd_kleene_sub(out, load_system(file_a), base);
    if (*hom) return cmd_hom(out, file_a, file_b, strong, groupoids);
    if (*quotient) return cmd_quotient(out, file_a, file_b, file_c);
    if (*enumerate) return cmd_enumerate(out, en);
    if (*independence) return cmd_independence(out);
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace shefferkit::cli
