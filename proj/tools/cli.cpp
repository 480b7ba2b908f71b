#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "markov/markov.hpp"
#include "report.hpp"

namespace markov::cli {
namespace {

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  std::string out;
  std::size_t max_digits = Budget{}.max_digits;
  std::size_t max_nodes = Budget{}.max_nodes;

  Budget budget() const { return Budget{max_digits, max_nodes}; }
};

BigInt parse_region(const std::string& s) {
  BigInt r;
  try {
    r = parse_bigint(s);
  } catch (const Error&) {
    throw Usage("--region expects a positive integer, got '" + s + "'");
  }
  if (r < 1) throw Usage("--region expects a positive integer, got '" + s + "'");
  return r;
}

Triplet head_of(const BigInt& R, MarkovTree& tree) {
  if (R == 1) return make_triplet(1, 1, 1);
  if (R == 2) return make_triplet(1, 2, 1);
  return tree.lookup(R).first;
}

// Singular regions have one edge each: {1,1,1} the right, {1,2,1} the left.
std::vector<EdgeSide> sides_of(const Triplet& h) {
  if (h == make_triplet(1, 1, 1)) return {EdgeSide::Right};
  if (h == make_triplet(1, 2, 1)) return {EdgeSide::Left};
  return {EdgeSide::Left, EdgeSide::Right};
}

std::string side_text(EdgeSide s) { return std::string(side_name(s)); }

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& s) {
  static const std::regex re(R"((-?\d{1,9})\.\.(-?\d{1,9}))");
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw Usage("expected a range A..B, got '" + s + "'");
  const std::int64_t a = std::stoll(m[1]), b = std::stoll(m[2]);
  if (a > b) throw Usage("range start exceeds its end in '" + s + "'");
  return {a, b};
}

void check_span(std::int64_t a, std::int64_t b) {
  if (b - a > 100000) throw Usage("at most 100001 indices per request");
}

const MarkovList& list_for(const Triplet& h, EdgeSide s, MarkovTree& tree,
                           std::shared_ptr<const MarkovList>& keep) {
  // Edge lists need the first two triplets along the edge.
  keep = tree.containing(edge_triplet(h, s, 2).R);
  return *keep;
}

// ---- subcommands -------------------------------------------------------

Report cmd_tree(unsigned depth, const Options& o) {
  Report r{"tree", {}};
  Table& t = r.table("triplets", {"position", "depth", "x", "R", "z"});
  MarkovList list = enumerate(depth, o.budget());
  for (const auto& e : list.entries()) {
    t.add({integer(static_cast<std::int64_t>(e.position)), integer(static_cast<std::int64_t>(e.depth)),
           integer(e.triplet.x), integer(e.triplet.R), integer(e.triplet.z)});
  }
  return r;
}

Report cmd_edge(const BigInt& R, EdgeSide side, std::int64_t from, std::int64_t to, const Options& o) {
  check_span(from, to);
  MarkovTree tree(3, o.budget());
  const Triplet h = head_of(R, tree);
  Report r{"edge", {}};
  Table& t = r.table("edge", {"R", "side", "n", "value"});
  for (std::int64_t n = from; n <= to; ++n) {
    t.add({integer(h.R), text(side_text(side)), integer(n), integer(edge_region_number(h, side, n, o.budget()))});
  }
  return r;
}

Report cmd_pell(const BigInt& R, std::optional<std::string> brute, std::optional<std::size_t> generate,
                const Options& o) {
  Report r{"pell", {}};
  MarkovTree tree(3, o.budget());
  if (brute) {
    const BigInt bound = parse_region(*brute);
    Table& t = r.table("solutions", {"R", "J", "K"});
    for (const auto& j : solve_pell_brute(R, bound)) {
      t.add({integer(R), integer(j), integer(isqrt(discriminant(R) * j * j - 4 * R * R))});
    }
    return r;
  }
  if (generate) {
    const Triplet h = head_of(R, tree);
    Table& t = r.table("solutions", {"R", "direction", "n", "K", "J", "residual"});
    for (auto dir : {PellDirection::Forward, PellDirection::Backward}) {
      for (const auto& s : generate_solutions(h, *generate, dir)) {
        t.add({integer(R), text(dir == PellDirection::Forward ? "forward" : "backward"), integer(s.n), integer(s.K),
               integer(s.J), integer(pell_residual(s.K, s.J, s.R))});
      }
    }
    return r;
  }
  UniquenessReport u = uniqueness_check(R, *tree.containing(R));
  Table& t = r.table("verdict", {"R", "x", "z", "bound", "solutions", "verdict"});
  t.add({integer(u.R), integer(u.triplet.x), integer(u.triplet.z), integer(u.bound), integers(u.solutions),
         text(u.ok ? "OK" : "FAIL")});
  return r;
}

Report cmd_cycles(const BigInt& R, unsigned d, bool palindrome, bool structure, const Options& o) {
  MarkovTree tree(3, o.budget());
  const Triplet h = head_of(R, tree);
  Report r{"cycles", {}};
  Table& t = r.table("cycles", {"R", "side", "digits", "length"});
  for (EdgeSide s : sides_of(h)) {
    t.add({integer(h.R), text(side_text(s)), integer(static_cast<std::int64_t>(d)),
           integer(static_cast<std::int64_t>(cycle_length(h, s, d)))});
  }
  if (palindrome) {
    PalindromicCycle pc = palindromic_cycle(h, d);
    Table& p = r.table("palindrome", {"side", "length", "palindromic", "residues"});
    for (const CycleReport* c : {&pc.left, &pc.right}) {
      p.add({text(side_text(c->side)), integer(static_cast<std::int64_t>(c->length)), flag(c->palindromic_with_opposite),
             integers(c->residues)});
    }
  }
  if (structure) {
    const EdgeSide side = sides_of(h).front();
    StructureReport s = internal_structure(h, side, d);
    Table& p = r.table("structure", {"field", "value"});
    const std::vector<std::uint64_t> pattern(s.pattern.begin(), s.pattern.end());
    p.add({text("family"), text(s.family == CycleFamily::Fibonacci30 ? "fibonacci" : "lucas")});
    p.add({text("pattern"), integers(pattern)});
    if (s.family == CycleFamily::Fibonacci30) {
      p.add({text("split_found"), flag(s.split_found)});
      p.add({text("first"), integers(s.first)});
      p.add({text("first_is_odd_fibonacci"), flag(s.first_is_odd_fibonacci)});
      p.add({text("second"), integers(s.second)});
      p.add({text("second_offset"), integer(static_cast<std::int64_t>(s.second_offset))});
      p.add({text("second_matches"), integer(static_cast<std::int64_t>(s.second_matches))});
    } else {
      p.add({text("unit"), integers(s.unit)});
      p.add({text("copies"), integer(static_cast<std::int64_t>(s.copies))});
      p.add({text("ascending"), flag(s.ascending)});
      p.add({text("descending"), flag(s.descending)});
      p.add({text("lucas_offset"), integer(static_cast<std::int64_t>(s.lucas_offset))});
    }
  }
  return r;
}

Report cmd_freq(unsigned depth, unsigned d, const Options& o) {
  auto counts = last_digit_frequency(depth, d, o.budget());
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  Report r{"freq", {}};
  Table& t = r.table("frequency", {"residue", "count", "share"});
  for (std::size_t i = 0; i < counts.size(); ++i) {
    t.add({integer(static_cast<std::int64_t>(i)), integer(static_cast<std::int64_t>(counts[i])),
           number(total ? static_cast<double>(counts[i]) / static_cast<double>(total) : 0.0)});
  }
  return r;
}

Report cmd_squares(const BigInt& R, bool lists, std::optional<std::string> ksf, std::optional<std::int64_t> osc,
                   const Options& o) {
  MarkovTree tree(3, o.budget());
  const Triplet h = head_of(R, tree);
  std::shared_ptr<const MarkovList> keep;
  Report r{"squares", {}};
  if (lists) {
    Table& t = r.table("lists", {"side", "list", "sigma", "lambda"});
    for (EdgeSide s : sides_of(h)) {
      EdgeSquareLists ls = edge_square_lists(h, s, list_for(h, s, tree, keep));
      const std::pair<const char*, const SquarePair*> named[] = {
          {"alpha", &ls.alpha}, {"beta", &ls.beta}, {"gamma", &ls.gamma}, {"delta", &ls.delta}};
      for (const auto& [name, p] : named) t.add({text(side_text(s)), text(name), integer(p->sigma), integer(p->lambda)});
    }
    return r;
  }
  if (ksf) {
    auto [a, b] = parse_range(*ksf);
    check_span(a, b);
    Table& t = r.table("ksf", {"side", "n", "sigma", "lambda"});
    for (EdgeSide s : sides_of(h)) {
      EdgeSquareLists ls = edge_square_lists(h, s, list_for(h, s, tree, keep));
      for (std::int64_t n = a; n <= b; ++n) {
        if (n == 0) continue;
        SquarePair p = k_sf(ls, h.R, n);
        t.add({text(side_text(s)), integer(n), integer(p.sigma), integer(p.lambda)});
      }
    }
    return r;
  }
  if (osc) {
    Table& series = r.table("series", {"side", "n", "sigma", "lambda", "ratio"});
    Table& bounds = r.table("bounds", {"side", "lower", "upper", "ratio", "odd_step", "even_step"});
    for (EdgeSide s : sides_of(h)) {
      OscillationReport rep = oscillation_ratio(edge_square_lists(h, s, list_for(h, s, tree, keep)), h.R, *osc);
      for (const auto& pt : rep.series) {
        series.add({text(side_text(s)), integer(pt.n), integer(pt.pair.sigma), integer(pt.pair.lambda),
                    number(Rational(pt.pair.lambda, pt.pair.sigma).get_d())});
      }
      bounds.add({text(side_text(s)), number(rep.lower), number(rep.upper), number(rep.ratio), number(rep.odd_step),
                  number(rep.even_step)});
    }
    return r;
  }
  const auto snap = tree.containing(h.R);
  const MarkovList& list = *snap;
  QResult q = q_decompose(h, list);
  Table& t = r.table("decomposition", {"R", "sigma", "lambda", "sibling", "sibling_sigma", "sibling_lambda",
                                       "region_sign", "brahmagupta"});
  t.add({integer(h.R), integer(q.region.sigma), integer(q.region.lambda), integer(sibling_number(h)),
         integer(q.sibling.sigma), integer(q.sibling.lambda), integer(static_cast<std::int64_t>(region_sign(h, list))),
         flag(brahmagupta_check(h, q).ok())});
  return r;
}

Report cmd_farey(std::optional<std::string> region, std::optional<unsigned> plot_depth, const Options& o) {
  Report r{"farey", {}};
  if (plot_depth) {
    Table& t = r.table("plot", {"farey_numerator", "farey_denominator", "farey_decimal", "log10_R", "depth"});
    MarkovList list = enumerate(*plot_depth, o.budget());
    for (const auto& p : plot_points(*plot_depth, list)) {
      t.add({integer(BigInt(p.farey.get_num())), integer(BigInt(p.farey.get_den())), number(p.farey.get_d()),
             number(p.log10_R), integer(static_cast<std::int64_t>(p.depth))});
    }
    return r;
  }
  const BigInt R = parse_region(*region);
  MarkovTree tree(3, o.budget());
  tree.lookup(R);
  FareyTriplet f = farey_for_region(R, *tree.containing(R));
  Table& t = r.table("farey", {"R", "left", "mid", "right", "left_k1", "right_k1"});
  t.add({integer(R), rational(f.left), rational(f.mid), rational(f.right),
         rational(farey_edge_sequence(f, EdgeSide::Left, 1)), rational(farey_edge_sequence(f, EdgeSide::Right, 1))});
  return r;
}

// ---- plumbing ----------------------------------------------------------

Format format_of(const std::string& s) {
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  return Format::Text;
}

std::filesystem::path resolve_out(const std::string& out) {
  std::filesystem::path p(out);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("MARKOVTREE_OUT_DIR"); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void report_error(std::ostream& err, const std::string& format, const std::string& code, const std::string& msg) {
  if (format == "json") {
    nlohmann::ordered_json j;
    j["error"] = {{"code", code}, {"message", msg}};
    err << j.dump() << '\n';
  } else {
    err << "error [" << code << "]: " << msg << '\n';
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Markov triple tree explorer", "markovtree"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--out", opt.out, "Write output to this file (relative paths honour MARKOVTREE_OUT_DIR)");
  app.add_option("--max-digits", opt.max_digits, "Largest integer size, in decimal digits")->check(CLI::PositiveNumber);
  app.add_option("--max-nodes", opt.max_nodes, "Largest tree traversal, in nodes")->check(CLI::PositiveNumber);

  std::string region;
  unsigned depth = 0, digits = 1;

  auto* tree = app.add_subcommand("tree", "List triplets breadth-first through a depth");
  tree->add_option("--depth", depth, "Tree depth (0 lists the singular triplets)")->required()->check(CLI::Range(0u, 40u));

  auto* edge = app.add_subcommand("edge", "Region numbers along one edge, negative indices included");
  std::string side = "L";
  std::int64_t from = -4, to = 4;
  edge->add_option("--region", region, "Region number")->required();
  edge->add_option("--side", side, "Edge side")->check(CLI::IsMember({"L", "R"}));
  edge->add_option("--from", from, "First index");
  edge->add_option("--to", to, "Last index");

  auto* pell = app.add_subcommand("pell", "Pell equation solutions for a region");
  std::optional<std::string> brute;
  std::optional<std::size_t> generate;
  bool verify = false;
  pell->add_option("--region", region, "Region number")->required();
  auto* o_brute = pell->add_option("--brute-bound", brute, "Every J up to this bound by search");
  auto* o_gen = pell->add_option("--generate", generate, "Generate this many solutions each way")->check(CLI::Range(1, 100000));
  auto* o_ver = pell->add_flag("--verify", verify, "Check that the two smallest solutions are the triplet's outer members");
  o_brute->excludes(o_gen)->excludes(o_ver);
  o_gen->excludes(o_ver);

  auto* cycles = app.add_subcommand("cycles", "Last-digit repeat cycles of a region's edges");
  bool palindrome = false, structure = false;
  cycles->add_option("--region", region, "Region number")->required();
  cycles->add_option("--digits", digits, "Number of trailing digits")->required()->check(CLI::Range(1u, 9u));
  cycles->add_flag("--palindrome", palindrome, "Show both cycles anchored at n = 0");
  cycles->add_flag("--structure", structure, "Classify the cycle's Fibonacci or Lucas structure");

  auto* freq = app.add_subcommand("freq", "Region residues over the tree");
  freq->add_option("--depth", depth, "Tree depth")->required()->check(CLI::Range(1u, 40u));
  freq->add_option("--digits", digits, "Number of trailing digits")->required()->check(CLI::Range(1u, 4u));

  auto* squares = app.add_subcommand("squares", "Special sum-of-two-squares terms");
  bool lists = false;
  std::optional<std::string> ksf;
  std::optional<std::int64_t> osc;
  squares->add_option("--region", region, "Region number")->required();
  auto* o_lists = squares->add_flag("--lists", lists, "Alpha, beta, gamma, delta of each edge");
  auto* o_ksf = squares->add_option("--ksf", ksf, "Sequence-function terms for indices A..B");
  auto* o_osc = squares->add_option("--oscillation", osc, "Lambda/sigma through this index")->check(CLI::Range(8, 2000));
  o_lists->excludes(o_ksf)->excludes(o_osc);
  o_ksf->excludes(o_osc);

  auto* farey = app.add_subcommand("farey", "Farey-tree indexing of regions");
  std::optional<std::string> farey_region;
  std::optional<unsigned> plot_depth;
  auto* o_fr = farey->add_option("--region", farey_region, "Region number");
  auto* o_pd = farey->add_option("--plot-depth", plot_depth, "Farey value and log10 R for one level")->check(CLI::Range(1u, 24u));
  o_fr->excludes(o_pd);
  farey->require_option(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return 2;
  }

  try {
    Report report;
    if (tree->parsed()) report = cmd_tree(depth, opt);
    else if (edge->parsed()) report = cmd_edge(parse_region(region), side == "L" ? EdgeSide::Left : EdgeSide::Right, from, to, opt);
    else if (pell->parsed()) report = cmd_pell(parse_region(region), brute, generate, opt);
    else if (cycles->parsed()) report = cmd_cycles(parse_region(region), digits, palindrome, structure, opt);
    else if (freq->parsed()) report = cmd_freq(depth, digits, opt);
    else if (squares->parsed()) report = cmd_squares(parse_region(region), lists, ksf, osc, opt);
    else report = cmd_farey(farey_region, plot_depth, opt);

    std::ostringstream buf;
    render(report, format_of(opt.format), buf);
    if (opt.out.empty()) {
      out << buf.str();
    } else {
      const auto path = resolve_out(opt.out);
      std::ofstream f(path, std::ios::binary);
      if (!f || !(f << buf.str()) || !f.flush()) {
        report_error(err, opt.format, "IoError", "cannot write " + path.string());
        return 1;
      }
    }
    return 0;
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    report_error(err, opt.format, std::string(errc_name(e.code())), e.what());
    return e.code() == Errc::InvalidArgument ? 2 : 1;
  }
}

}  // namespace markov::cli
