#include "kpalg/cli.hpp"

#include <CLI11.hpp>
#include <sstream>

#include "kpalg/analysis.hpp"
#include "kpalg/center.hpp"

namespace kpalg {

namespace {

constexpr const char* kGrammar = R"(Graph file (.kg), one declaration per line, '#' starts a comment:
  k <int>
  vertex <id>
  edge <id> <color> <range-id> <source-id>
  square <g> <h> = <h'> <g'>      (g∘h = h'∘g', color(g) = color(g') < color(h) = color(h'))
  ids match [A-Za-z0-9_]+, colors are 1..k, text is 7-bit printable.

Element expressions:
  element := ['+'|'-'] term (('+'|'-') term)* | '0'
  term    := [coeff '*'] factor ('*' factor)*
  factor  := 'p(' vertex ')' | 's(' path ')' | 'st(' path ')'
  path    := id ('.' id)*
  coeff   := integer | integer '/' integer      (interpreted in the ring)
  Whitespace is insignificant.

Rings:    --ring Q | Fp:<p> | Z
Degrees:  comma-separated non-negative integers, exactly k of them, e.g. 1,0

Exit codes: 0 success, 1 domain error, 2 parse error.)";

/// Bad command-line values; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string file;
  bool allow_sources = false;
  std::string ring = "Q";
  std::string from;
  std::string degree;
  std::string ghost;
  std::string cap;
  std::string check;
  bool verify = false;
  unsigned bound = 3;
  unsigned threads = 1;
  std::vector<std::string> exprs;
};

MultiDegree parse_degree(const std::string& text, std::size_t k, const std::string& what) {
  std::vector<std::uint32_t> coords;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos ||
        part.size() > 9) {
      throw UsageError(what + ": '" + text + "' is not a list of non-negative integers");
    }
    coords.push_back(static_cast<std::uint32_t>(std::stoul(part)));
  }
  if (!text.empty() && text.back() == ',') throw UsageError(what + ": trailing comma in '" + text + "'");
  if (coords.size() != k) {
    throw UsageError(what + ": expected " + std::to_string(k) + " entries, got " +
                     std::to_string(coords.size()));
  }
  return MultiDegree(std::move(coords));
}

RingSpec parse_ring(const std::string& text) {
  try {
    return RingSpec::parse(text);
  } catch (const RingError& e) {
    throw UsageError(std::string("--ring: ") + e.what());
  }
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string vertex_set(const KGraph& g, const std::vector<VertexId>& vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + g.vertex(vs[i]).id;
  return s + "}";
}

GraphPtr load_graph(const Options& o) {
  return KGraph::load(o.file, o.allow_sources ? SourcePolicy::Allow : SourcePolicy::Reject);
}

int cmd_validate(const Options& o, std::ostream& out) {
  const Presentation p = load_presentation(o.file);
  const ValidationReport r = validate(p);
  if (r.valid()) {
    out << "valid: yes\n";
    return 0;
  }
  out << "valid: no\n" << r.to_string();
  if (o.allow_sources && r.only_sources()) {
    out << "accepted with --allow-sources\n";
    return 0;
  }
  return 1;
}

int cmd_paths(const Options& o, std::ostream& out) {
  const GraphPtr g = load_graph(o);
  if (o.from.empty()) throw UsageError("paths: --from is required");
  const MultiDegree d = parse_degree(o.degree.empty() ? std::string() : o.degree, g->rank(), "--degree");
  for (const Path& p : g->paths_from(g->vertex_named(o.from), d)) out << g->format_path(p) << '\n';
  return 0;
}

int cmd_mul(const Options& o, std::ostream& out) {
  const GraphPtr g = load_graph(o);
  const RingSpec spec = parse_ring(o.ring);
  if (o.exprs.size() < 2) throw UsageError("mul: two element expressions are required");
  AlgebraElement product = parse_element(g, spec, o.exprs[0]);
  for (std::size_t i = 1; i < o.exprs.size(); ++i) product = product * parse_element(g, spec, o.exprs[i]);
  out << format(normalize(product)) << '\n';
  return 0;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  const GraphPtr g = load_graph(o);
  const RingSpec spec = parse_ring(o.ring);
  if (o.exprs.size() != 1) throw UsageError("normalize: exactly one element expression is required");
  out << format(normalize(parse_element(g, spec, o.exprs[0]))) << '\n';
  return 0;
}

void print_properties(const KGraph& g, const PropertyReport& p, std::ostream& out) {
  out << "rank: " << g.rank() << '\n';
  out << "vertices: " << g.vertex_count() << '\n';
  out << "edges: " << g.edge_count() << '\n';
  out << "sources: " << yes_no(g.has_sources()) << '\n';
  out << "has_closed_path: " << yes_no(p.has_closed_path) << '\n';
  out << "cofinal: " << yes_no(p.cofinal) << '\n';
  out << "aperiodicity: " << to_string(p.aperiodicity.verdict) << '\n';
  out << "aperiodicity_mode: " << to_string(p.aperiodicity.mode) << '\n';
  out << "aperiodicity_bound: " << p.aperiodicity.bound << '\n';
  if (p.aperiodicity.witness) {
    const auto& w = *p.aperiodicity.witness;
    out << "periodic_witness: vertex " << g.vertex(w.vertex).id << ", m = (" << w.m.to_string()
        << "), n = (" << w.n.to_string() << ")\n";
  }
  out << "commutative_graph: " << yes_no(p.commutative_graph) << '\n';
  out << "components:";
  for (const auto& c : p.components) out << ' ' << vertex_set(g, c);
  out << '\n';
}

int cmd_props(const Options& o, std::ostream& out) {
  const GraphPtr g = load_graph(o);
  print_properties(*g, analyze(*g, o.bound, o.threads), out);
  return 0;
}

std::string filter_line(const FilterReport& f) {
  std::string s = "range_match=" + std::string(yes_no(f.range_match)) +
                  " reach_closed=" + yes_no(f.reach_closed) + " range_cover=" + yes_no(f.range_cover) +
                  " beta_cycle=" + yes_no(f.beta_cycle);
  if (f.cycle_degenerate) s += " (vertices only)";
  return s;
}

std::string diagnostic_line(const ElementDiagnostic& d) {
  return "ranges_cover=" + std::string(yes_no(d.ranges_cover)) + " diagonal=" + yes_no(d.diagonal) +
         " uniform=" + yes_no(d.uniform);
}

Window window_from(const Options& o, const KGraph& g) {
  Window w{o.ghost.empty() ? g.zero_degree() : parse_degree(o.ghost, g.rank(), "--ghost"),
           o.cap.empty() ? MultiDegree::uniform(g.rank(), 1) : parse_degree(o.cap, g.rank(), "--cap")};
  if (o.ghost.empty() || !o.cap.empty()) return w;
  w.cap = w.ghost.join(w.cap);
  return w;
}

std::string overall_verdict(const TheoremReport& r) {
  for (Verdict v : {r.simple, r.commutative, r.acyclic}) {
    if (v == Verdict::Refuted) return to_string(v);
  }
  if (r.simple != Verdict::HypothesesUnmet) return to_string(r.simple);
  if (r.commutative == Verdict::Verified) return "VERIFIED-commutative";
  if (r.acyclic == Verdict::Verified) return "VERIFIED-no-closed-paths";
  return to_string(Verdict::HypothesesUnmet);
}

void print_verification(const TheoremReport& r, std::ostream& out) {
  for (const auto& w : r.windows) {
    out << "  window " << w.window.to_string() << ": size " << w.window_size << ", rank " << w.rank
        << ", scalar " << yes_no(w.scalar) << ", filters " << (w.filters_pass ? "pass" : "fail")
        << '\n';
  }
  out << "scalar_center: " << to_string(r.simple) << '\n';
  out << "commutative_center: " << to_string(r.commutative) << '\n';
  out << "no_closed_paths_center: " << to_string(r.acyclic) << '\n';
  out << "filters: " << (r.filters_pass ? "pass" : "fail") << '\n';
  out << "verdict: " << overall_verdict(r) << '\n';
}

void print_center(const GraphPtr& g, const RingSpec& spec, const Window& w, unsigned threads,
                  std::ostream& out) {
  const CenterResult result = central_in_window(g, spec, w, threads);
  const auto diags = diagnostics(result);
  out << "window: " << w.to_string() << '\n';
  out << "ring: " << spec.to_string() << '\n';
  out << "window_size: " << result.window_size << '\n';
  out << (spec.is_field() ? "dimension: " : "rank: ") << result.rank() << '\n';
  out << "basis:\n";
  for (std::size_t i = 0; i < result.basis.size(); ++i) {
    out << "  [" << i + 1 << "] " << format(result.basis[i]) << '\n';
    out << "      filters: " << filter_line(central_filters(result.basis[i])) << '\n';
    out << "      diagnostics: " << diagnostic_line(diags[i]) << '\n';
  }
}

int cmd_center(const Options& o, std::ostream& out) {
  const GraphPtr g = load_graph(o);
  const RingSpec spec = parse_ring(o.ring);
  if (o.ghost.empty() || o.cap.empty()) throw UsageError("center: --ghost and --cap are required");
  const Window w = window_from(o, *g);
  w.check(*g);
  print_center(g, spec, w, o.threads, out);
  if (!o.check.empty()) {
    const AlgebraElement x = normalize(parse_element(g, spec, o.check));
    const auto failing = noncommuting_generators(x);
    out << "check: " << format(x) << '\n';
    out << "  central: " << yes_no(failing.empty()) << '\n';
    if (!failing.empty()) {
      out << "  fails to commute with:";
      for (const auto& f : failing) out << ' ' << f;
      out << '\n';
    }
    if (!x.empty()) out << "  filters: " << filter_line(central_filters(x)) << '\n';
  }
  if (o.verify) {
    const TheoremReport r = verify_theorems(g, spec, w, o.bound, o.threads);
    out << "verification (all windows up to " << w.to_string() << "):\n";
    print_verification(r, out);
  }
  return 0;
}

int cmd_report(const Options& o, std::ostream& out) {
  const Presentation p = load_presentation(o.file);
  const ValidationReport v = validate(p);
  out << "== graph ==\n";
  out << "file: " << o.file << '\n';
  out << "valid: " << yes_no(v.valid()) << '\n' << v.to_string();
  const GraphPtr g = load_graph(o);
  const RingSpec spec = parse_ring(o.ring);
  out << "== properties ==\n";
  const PropertyReport props = analyze(*g, o.bound, o.threads);
  print_properties(*g, props, out);
  const Window w = window_from(o, *g);
  w.check(*g);
  out << "== center ==\n";
  print_center(g, spec, w, o.threads, out);
  out << "== verification ==\n";
  print_verification(verify_theorems(g, spec, w, o.bound, o.threads), out);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"kpalg: k-graphs, Kumjian-Pask algebras and their centers", "kpalg"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "graph file")->required();
    sub->add_flag("--allow-sources", o.allow_sources,
                  "accept graphs with source vertices (their degenerate part vanishes)");
  };
  auto add_ring = [&](CLI::App* sub) {
    sub->add_option("--ring", o.ring, "coefficient ring: Q, Fp:<p> or Z")->capture_default_str();
  };
  auto add_analysis = [&](CLI::App* sub) {
    sub->add_option("--aperiodicity-bound", o.bound, "witness search bound B for k >= 2")
        ->capture_default_str();
    sub->add_option("--threads", o.threads, "worker threads")->capture_default_str();
  };

  auto* validate_cmd = app.add_subcommand("validate", "check a graph file and list violations");
  add_common(validate_cmd);
  auto* paths_cmd = app.add_subcommand("paths", "list the paths vΛ^n");
  add_common(paths_cmd);
  paths_cmd->add_option("--from", o.from, "range vertex v")->required();
  paths_cmd->add_option("--degree", o.degree, "degree n1,...,nk")->required();
  auto* mul_cmd = app.add_subcommand("mul", "normalized product of elements");
  add_common(mul_cmd);
  add_ring(mul_cmd);
  mul_cmd->add_option("elements", o.exprs, "element expressions")->required()->expected(2, -1);
  auto* normalize_cmd = app.add_subcommand("normalize", "normal form of an element");
  add_common(normalize_cmd);
  add_ring(normalize_cmd);
  normalize_cmd->add_option("element", o.exprs, "element expression")->required()->expected(1);
  auto* props_cmd = app.add_subcommand("props", "graph properties");
  add_common(props_cmd);
  add_analysis(props_cmd);
  auto* center_cmd = app.add_subcommand("center", "center of the algebra within a window");
  add_common(center_cmd);
  add_ring(center_cmd);
  add_analysis(center_cmd);
  center_cmd->add_option("--ghost", o.ghost, "ghost degree m1,...,mk")->required();
  center_cmd->add_option("--cap", o.cap, "cap d1,...,dk on d(alpha)")->required();
  center_cmd->add_option("--check", o.check, "element to test for centrality");
  center_cmd->add_flag("--verify", o.verify, "check the center theorems on all smaller windows");
  auto* report_cmd = app.add_subcommand("report", "everything, in fixed section order");
  add_common(report_cmd);
  add_ring(report_cmd);
  add_analysis(report_cmd);
  report_cmd->add_option("--ghost", o.ghost, "ghost degree (default 0,...,0)");
  report_cmd->add_option("--cap", o.cap, "cap (default 1,...,1)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help()) << kGrammar << '\n';
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(o, out);
    if (*paths_cmd) return cmd_paths(o, out);
    if (*mul_cmd) return cmd_mul(o, out);
    if (*normalize_cmd) return cmd_normalize(o, out);
    if (*props_cmd) return cmd_props(o, out);
    if (*center_cmd) return cmd_center(o, out);
    if (*report_cmd) return cmd_report(o, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace kpalg
