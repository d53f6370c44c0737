#include "haarforge/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "haarforge/autsearch.hpp"
#include "haarforge/census.hpp"
#include "haarforge/classify.hpp"
#include "haarforge/constructions.hpp"
#include "haarforge/dnr.hpp"
#include "haarforge/graph6.hpp"
#include "haarforge/report.hpp"

namespace haarforge {

namespace {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct ConstructArgs {
  std::string family;
  long long n = 0, r = 0, a = 1, k = 0, b = 1;
  std::string group;
  std::vector<Element> subset;
  std::string out;
  bool json = false;
};

Graph build(const ConstructArgs& c) {
  auto need_group = [&] {
    if (c.group.empty()) throw UsageError("--group is required for family " + c.family);
    return read_group_file(c.group);
  };
  if (c.family == "cycle" || c.family == "complete") {
    if (c.n < 1) throw UsageError("--n must be positive");
    std::vector<Edge> edges;
    for (long long i = 0; i < c.n; ++i)
      for (long long j = i + 1; j < c.n; ++j)
        if (c.family == "complete" || j == i + 1 || (i == 0 && j == c.n - 1 && c.n > 2))
          edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return Graph(static_cast<std::size_t>(c.n), edges);
  }
  if (c.family == "gp") return generalized_petersen(c.n, c.r);
  if (c.family == "dgp") return double_generalized_petersen(c.n, c.r).graph;
  if (c.family == "sigma0") return cyclic_cover_sigma0(c.n, c.a, c.k, c.b);
  if (c.family == "kronecker-gp") return kronecker_cover(generalized_petersen(c.n, c.r));
  if (c.family == "voltage-gp")
    return voltage_double_cover(generalized_petersen(c.n, c.r), petersen_inner_edges(c.n, c.r));
  if (c.family == "haar") {
    const auto g = need_group();
    return haar_graph(g, ElementSubset(g, c.subset));
  }
  if (c.family == "cayley") {
    const auto g = need_group();
    return cayley_graph(g, ElementSubset(g, c.subset));
  }
  throw UsageError("unknown family '" + c.family + "'");
}

std::string read_graph_text(const std::string& arg, std::istream& in) {
  std::string line;
  if (arg == "-") {
    std::getline(in, line);
  } else if (std::filesystem::is_regular_file(arg)) {
    std::ifstream f(arg);
    std::getline(f, line);
  } else {
    line = arg;
  }
  return line;
}

int cmd_construct(const ConstructArgs& c, std::ostream& out) {
  const Graph g = build(c);
  const std::string text = encode_graph6(g);
  std::ostringstream line;
  if (c.json)
    line << nlohmann::json{{"family", c.family}, {"order", g.order()}, {"edges", g.edge_count()}, {"graph6", text}}
                .dump();
  else
    line << text;
  if (c.out.empty()) {
    out << line.str() << '\n';
  } else {
    std::ofstream f(c.out);
    f << line.str() << '\n';
    if (!f) throw std::runtime_error("cannot write " + c.out);
  }
  return kExitOk;
}

int cmd_analyze(const std::string& input, std::istream& in, std::ostream& out) {
  std::ifstream file;
  std::istream* src = &in;
  if (input != "-") {
    file.open(input);
    if (!file) throw UsageError("cannot open " + input);
    src = &file;
  }
  bool any = false;
  for (std::string line; std::getline(*src, line);) {
    if (line.empty()) continue;
    any = true;
    out << to_json(classify(decode_graph6(line))).dump() << '\n';
  }
  if (!any) throw UsageError("analyze: no graph6 input");
  return kExitOk;
}

int cmd_iso(const std::string& a, const std::string& b, std::istream& in, std::ostream& out) {
  const Graph g1 = decode_graph6(read_graph_text(a, in));
  const Graph g2 = decode_graph6(read_graph_text(b, in));
  const bool same = is_isomorphic(g1, g2);
  out << (same ? "yes" : "no") << '\n';
  return same ? kExitOk : kExitNegative;
}

int cmd_delta(long long n, long long r, bool json, std::ostream& out) {
  HaarWitnessReport rep;
  try {
    rep = verify_haar_witness(n, r);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (json) {
    out << to_json(rep).dump() << '\n';
  } else {
    auto mark = [](bool ok) { return ok ? "ok" : "FAIL"; };
    out << "D(" << rep.n << "," << rep.r << ") m=" << rep.m << '\n'
        << "delta preserves edges: " << mark(rep.preserves_edges) << '\n'
        << "delta preserves parts: " << mark(rep.preserves_parts) << '\n'
        << "delta^-1 alpha^2 delta = alpha^" << (rep.conjugation_sign < 0 ? "-" : "") << "2r: "
        << mark(rep.conjugation_sign != 0) << '\n'
        << "|<alpha^2, delta>| = " << rep.group_order << ": " << mark(rep.group_order == 2 * rep.n) << '\n'
        << "regular on part 0: " << mark(rep.regular_on_part0) << '\n'
        << "regular on part 1: " << mark(rep.regular_on_part1) << '\n'
        << "order profile of Z_m x|_r Z_4: " << mark(rep.matches_semidirect) << '\n'
        << (rep.passed() ? "PASS" : "FAIL") << '\n';
  }
  return rep.passed() ? kExitOk : kExitNegative;
}

int cmd_verify(long long max_n, unsigned workers, bool json, std::ostream& out) {
  if (max_n < 3) throw UsageError("--max-n must be at least 3");
  const auto results = verify_theorems(max_n, workers);
  std::size_t mismatches = 0;
  auto flags = [](bool vt, bool c, bool h) {
    return std::string(vt ? "V" : "-") + (c ? "C" : "-") + (h ? "H" : "-");
  };
  for (const auto& c : results) {
    if (!c.matches()) ++mismatches;
    if (json) {
      out << to_json(c).dump() << '\n';
    } else {
      const auto& p = c.predicted;
      out << c.n << ' ' << c.r << ' ' << to_string(p.branch) << ' '
          << flags(p.vertex_transitive, p.cayley, p.haar) << ' '
          << flags(c.vertex_transitive, c.cayley, c.haar) << ' ' << (c.matches() ? "pass" : "FAIL") << '\n';
    }
  }
  if (!json) out << "checked " << results.size() << ", mismatches " << mismatches << '\n';
  return mismatches == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Haar graph and double generalized Petersen graph toolkit", "haarforge"};
  app.require_subcommand(1);

  ConstructArgs con;
  auto* construct = app.add_subcommand("construct", "Build a graph and print it as graph6");
  construct->add_option("--family", con.family,
                        "cycle, complete, gp, dgp, sigma0, kronecker-gp, voltage-gp, haar, cayley")
      ->required();
  construct->add_option("--n", con.n);
  construct->add_option("--r", con.r);
  construct->add_option("--a", con.a);
  construct->add_option("--k", con.k);
  construct->add_option("--b", con.b);
  construct->add_option("--group", con.group, "Group table file");
  construct->add_option("--subset", con.subset, "Element indices")->delimiter(',');
  construct->add_option("--out", con.out);
  construct->add_flag("--json", con.json);

  std::string analyze_input = "-";
  auto* analyze = app.add_subcommand("analyze", "Classify graph6 graphs (one per line), JSON out");
  analyze->add_option("input", analyze_input, "File, or - for stdin");
  analyze->add_flag("--json", "Accepted for symmetry; output is always JSON");

  std::string iso_a, iso_b;
  auto* iso = app.add_subcommand("iso", "Isomorphism test; exit 1 when not isomorphic");
  iso->add_option("first", iso_a, "graph6 string or file")->required();
  iso->add_option("second", iso_b, "graph6 string or file")->required();

  long long dn = 0, dr = 0;
  bool djson = false;
  auto* delta = app.add_subcommand("delta", "Verify the Haar witness <alpha^2, delta> of D(n,r)");
  delta->add_option("--n", dn)->required();
  delta->add_option("--r", dr)->required();
  delta->add_flag("--json", djson);

  long long max_n = 12;
  unsigned vworkers = 1;
  bool vjson = false;
  auto* verify = app.add_subcommand("verify-theorems", "Compare computed and predicted D(n,r) properties");
  verify->add_option("--max-n", max_n);
  verify->add_option("--workers", vworkers);
  verify->add_flag("--json", vjson);

  CensusConfig cfg;
  std::string filter = "all", catalog, cout_path, checkpoint;
  std::size_t order = 0, valency = 0;
  bool no_autos = false;
  auto* census = app.add_subcommand("census", "Connected Haar graph census over a group catalog");
  census->add_option("--catalog", catalog, "Directory or file of group tables")->required();
  census->add_option("--order", order, "Graph order (sets both bounds)");
  census->add_option("--min-order", cfg.min_order);
  census->add_option("--max-order", cfg.max_order);
  census->add_option("--valency", valency, "Valency (sets both bounds)");
  census->add_option("--min-valency", cfg.min_valency);
  census->add_option("--max-valency", cfg.max_valency);
  census->add_option("--filter", filter, "all, vt or vt-noncayley");
  census->add_option("--workers", cfg.workers);
  census->add_option("--out", cout_path, "JSON-lines output file (default stdout)");
  census->add_option("--checkpoint", checkpoint);
  census->add_flag("--no-automorphisms", no_autos, "Reduce subsets by translations only");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*construct) return cmd_construct(con, out);
    if (*analyze) return cmd_analyze(analyze_input, in, out);
    if (*iso) return cmd_iso(iso_a, iso_b, in, out);
    if (*delta) return cmd_delta(dn, dr, djson, out);
    if (*verify) return cmd_verify(max_n, vworkers, vjson, out);
    if (*census) {
      cfg.catalog = catalog;
      if (order) cfg.min_order = cfg.max_order = order;
      if (valency) cfg.min_valency = cfg.max_valency = valency;
      cfg.filter = parse_census_filter(filter);
      cfg.use_automorphisms = !no_autos;
      if (!cout_path.empty()) cfg.output = cout_path;
      if (!checkpoint.empty()) cfg.checkpoint = checkpoint;
      std::function<void(const CensusRecord&)> sink;
      if (!cfg.output) sink = [&](const CensusRecord& r) { out << to_json(r).dump() << '\n' << std::flush; };
      const auto s = run_census(cfg, sink);
      err << "strata " << s.strata << " (skipped " << s.strata_skipped << "), subsets " << s.subsets_examined
          << ", classes " << s.classes << ", records " << s.records << '\n';
      for (const auto& [k, count] : s.records_by_valency) err << "  valency " << k << ": " << count << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "haarforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Graph6Error& e) {
    err << "haarforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CatalogError& e) {
    err << "haarforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "haarforge: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "haarforge: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

}  // namespace haarforge
