// Command-line front door: build the graph/group constructions, analyze
// pairs from disk, sweep parameters into CSV, and print bound certificates.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "arcstab/arcstab.hpp"

namespace {

using namespace arcstab;

std::size_t g_cap = default_element_cap();

// ---------- small input helpers ----------

bool looks_like_path(const std::string& s) {
  return s.find('/') != std::string::npos || s.find('.') != std::string::npos;
}

PermGroup group_from_name_or_file(const std::string& arg) {
  if (looks_like_path(arg)) return read_group_file(arg);
  return catalog_group(arg).group;
}

Graph graph_from_name_or_file(const std::string& arg) {
  if (looks_like_path(arg)) return read_graph_file(arg);
  return catalog_graph(arg).graph;
}

// "2..5" or "3" -> inclusive integer range
std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  int lo = 0, hi = 0;
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    fail(Errc::usage, "cannot parse range '" + text + "' (want e.g. 2..5 or 3)");
  }
  require(lo <= hi, Errc::usage, "empty range '" + text + "'");
  return {lo, hi};
}

// "0,2,4|1,3,5" -> block system cells
std::vector<std::vector<int>> parse_blocks(const std::string& text) {
  std::vector<std::vector<int>> cells;
  std::istringstream in(text);
  std::string cell;
  while (std::getline(in, cell, '|')) {
    std::istringstream cin(cell);
    std::vector<int> pts;
    std::string tok;
    while (std::getline(cin, tok, ','))
      try {
        pts.push_back(std::stoi(tok));
      } catch (const std::exception&) {
        fail(Errc::usage, "cannot parse block point '" + tok + "'");
      }
    std::sort(pts.begin(), pts.end());
    cells.push_back(std::move(pts));
  }
  require(!cells.empty(), Errc::usage, "empty block list");
  return cells;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '/' || c == ',' || c == ' ') c = '_';
  return s;
}

std::string stem_of(const std::string& arg) {
  auto slash = arg.find_last_of('/');
  std::string base = slash == std::string::npos ? arg : arg.substr(slash + 1);
  auto dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return sanitize(base);
}

void report_pair(const Pair& pair, const std::string& construction,
                 const std::string& params, const std::string& out_base) {
  AnalysisReport rep = analyze_pair(pair, construction, params);
  write_pair(out_base, pair);
  std::cout << "wrote " << out_base << ".graph and " << out_base << ".group\n";
  std::cout << "n = " << rep.n << ", valency = " << rep.valency << ", |G| = "
            << rep.group_order << ", |G_v| = " << rep.vertex_stab << ", |G_uv| = "
            << rep.arc_stab << ", invariants " << (rep.ok ? "ok" : "FAILED") << "\n";
  require(rep.ok, Errc::internal, "built pair failed invariant checks");
}

void print_human_report(const AnalysisReport& r) {
  std::cout << "pair: " << r.construction << " (" << r.params << ")\n"
            << "  vertices " << r.n << ", valency " << r.valency << ", arcs "
            << static_cast<long long>(r.n) * r.valency << "\n"
            << "  |G| = " << r.group_order << ", |G_v| = " << r.vertex_stab
            << ", |G_uv| = " << r.arc_stab << ", local group order "
            << r.local_group_order << "\n"
            << "  bound: prime " << r.bound_p << ", |G_uv| <= " << r.bound_value << "\n"
            << "  invariants: " << (r.ok ? "all passed" : "FAILED") << "\n";
}

// ---------- subcommand bodies ----------

int run_build_wreath(const std::string& r_arg, const std::string& t_arg, int covers,
                     std::string out) {
  PermGroup r = group_from_name_or_file(r_arg);
  PermGroup t = group_from_name_or_file(t_arg);
  Pair base = bipartite_base_pair(t);
  for (int j = 0; j < covers; ++j) base = lift_group(base, homological_2cover(base.graph));
  Pair pair = wreath_pair(r, base);
  if (out.empty())
    out = "wreath-" + stem_of(r_arg) + "-over-" + stem_of(t_arg) + "-c" +
          std::to_string(covers);
  std::string params = "r=" + sanitize(r_arg) + ";t=" + sanitize(t_arg) +
                       ";covers=" + std::to_string(covers);
  report_pair(pair, "wreath", params, out);
  return 0;
}

int run_build_two_block(const std::string& group_arg, const std::string& blocks_arg,
                        int ell, int m, std::string out) {
  PermGroup l = group_from_name_or_file(group_arg);
  BlockSystem sys;
  if (blocks_arg == "auto") {
    auto found = has_two_block_system(l);
    require(found.has_value(), Errc::hypothesis,
            "group has no two-cell block system (try --blocks with explicit cells)");
    sys = *found;
  } else {
    sys.blocks = parse_blocks(blocks_arg);
  }
  TwoBlockInput in = two_block_setup(l, sys);
  Pair pair = two_block_pair(in, ell, m);
  if (out.empty())
    out = "two-block-" + stem_of(group_arg) + "-l" + std::to_string(ell) + "-m" +
          std::to_string(m);
  std::ostringstream params;
  params << "local=" << sanitize(group_arg) << ";l=" << ell << ";m=" << m;
  report_pair(pair, "two-block", params.str(), out);
  return 0;
}

int run_build_degree6(const std::string& graph_arg, const std::string& h_arg,
                      const std::string& g_arg, const std::string& local_name,
                      std::string out) {
  Graph graph = graph_from_name_or_file(graph_arg);
  PermGroup l = catalog_group(local_name).group;

  std::vector<PermGroup> g_candidates;
  if (g_arg == "search") {
    PermGroup aut = automorphism_search(graph, g_cap);
    g_candidates = two_arc_regular_subgroups(graph, aut, g_cap);
    require(!g_candidates.empty(), Errc::hypothesis,
            "no subgroup acting regularly on 2-arcs was found");
  } else {
    g_candidates.push_back(read_group_file(g_arg));
  }

  // candidates are tried in deterministic search order; the first (G,H)
  // combination that satisfies every hypothesis wins
  for (const PermGroup& g : g_candidates) {
    std::vector<PermGroup> h_candidates;
    if (h_arg == "search") {
      h_candidates = arc_regular_subgroups(graph, g, g_cap);
    } else {
      h_candidates.push_back(read_group_file(h_arg));
    }
    for (const PermGroup& h : h_candidates) {
      Pair pair;
      try {
        pair = degree6_pair(graph, h, g, l, g_cap);
      } catch (const Error& e) {
        // while searching, a failed hypothesis just means "next candidate";
        // with explicit files the message should reach the user
        bool searching = g_arg == "search" || h_arg == "search";
        if (e.code() == Errc::hypothesis && searching) continue;
        throw;
      }
      std::string base = out;
      if (base.empty())
        base = "degree6-" + stem_of(graph_arg) + "-" + sanitize(local_name);
      std::ostringstream params;
      params << "graph=" << sanitize(graph_arg) << ";local=" << sanitize(local_name)
             << ";g_order=" << g.order() << ";h_order=" << h.order();
      report_pair(pair, "degree6", params.str(), base);
      return 0;
    }
  }
  fail(Errc::hypothesis, "no (H,G) pair satisfying the construction hypotheses");
}

int run_analyze(const std::vector<std::string>& pair_paths, bool csv) {
  int failed = 0;
  if (csv) std::cout << csv_header() << "\n";
  for (const std::string& path : pair_paths) {
    Pair pair = read_pair(path);
    std::string params = sanitize(path);
    AnalysisReport rep = analyze_pair(pair, "file", params);
    if (csv)
      std::cout << csv_row(rep) << "\n";
    else
      print_human_report(rep);
    if (!rep.ok) ++failed;
  }
  if (failed) {
    std::cerr << "error[hypothesis]: " << failed << " of " << pair_paths.size()
              << " pairs failed invariant checks\n";
    return 1;
  }
  return 0;
}

int run_sweep_two_block(const std::string& group_arg, const std::string& m_range,
                        const std::string& l_range, const std::string& csv_path) {
  PermGroup l = group_from_name_or_file(group_arg);
  auto sys = has_two_block_system(l);
  require(sys.has_value(), Errc::hypothesis, "group has no two-cell block system");
  TwoBlockInput in = two_block_setup(l, *sys);
  auto [m_lo, m_hi] = parse_range(m_range);
  auto [l_lo, l_hi] = parse_range(l_range);

  std::ostringstream out;
  out << csv_header() << "\n";
  bool all_ok = true;
  for (int ell = l_lo; ell <= l_hi; ++ell)
    for (int m = m_lo; m <= m_hi; ++m) {
      Pair pair = two_block_pair(in, ell, m);
      std::ostringstream params;
      params << "local=" << sanitize(group_arg) << ";l=" << ell << ";m=" << m;
      AnalysisReport rep = analyze_pair(pair, "two-block", params.str());
      out << csv_row(rep) << "\n";
      all_ok = all_ok && rep.ok;
    }
  if (csv_path.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream f(csv_path);
    require(f.good(), Errc::io, "cannot open " + csv_path + " for writing");
    f << out.str();
    std::cout << "wrote " << csv_path << "\n";
  }
  require(all_ok, Errc::internal, "a sweep point failed invariant checks");
  return 0;
}

int run_classify_growth(const std::string& csv_path) {
  std::ifstream f(csv_path);
  require(f.good(), Errc::io, "cannot open " + csv_path);
  std::string line;
  require(static_cast<bool>(std::getline(f, line)), Errc::parse, "empty CSV");
  // locate the n and arc_stab columns by header name
  std::vector<std::string> headers;
  {
    std::istringstream h(line);
    std::string col;
    while (std::getline(h, col, ',')) headers.push_back(col);
  }
  auto col_of = [&](const std::string& name) {
    for (std::size_t i = 0; i < headers.size(); ++i)
      if (headers[i] == name) return i;
    fail(Errc::parse, "CSV has no '" + name + "' column");
  };
  std::size_t n_col = col_of("n"), stab_col = col_of("arc_stab");

  std::vector<std::pair<long long, BigInt>> rows;
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::istringstream r(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(r, cell, ',')) cells.push_back(cell);
    require(cells.size() == headers.size(), Errc::parse, "ragged CSV row: " + line);
    try {
      rows.emplace_back(std::stoll(cells[n_col]), BigInt(cells[stab_col]));
    } catch (const std::exception&) {
      fail(Errc::parse, "non-numeric n/arc_stab cell in row: " + line);
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<long long> sizes;
  std::vector<BigInt> stabs;
  for (auto& [n, s] : rows) {
    sizes.push_back(n);
    stabs.push_back(s);
  }
  GrowthVerdict verdict = classify_growth(sizes, stabs);
  std::cout << "samples: " << sizes.size() << " (n = " << sizes.front() << " .. "
            << sizes.back() << ")\n";
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    double lg = std::log(stabs[i].convert_to<double>());
    std::cout << "  n = " << sizes[i] << ", |G_uv| = " << stabs[i]
              << ", log|G_uv|/log n = " << lg / std::log(static_cast<double>(sizes[i]))
              << ", log|G_uv|/n = " << lg / static_cast<double>(sizes[i]) << "\n";
  }
  std::cout << "trend: " << verdict.label << " (" << verdict.note << ")\n";
  return 0;
}

int run_explain_bound(const std::string& pair_path, const std::string& arc_arg) {
  Pair pair = read_pair(pair_path);
  int u, v;
  if (arc_arg.empty()) {
    std::tie(u, v) = pair.first_arc();
  } else {
    auto comma = arc_arg.find(',');
    require(comma != std::string::npos, Errc::usage, "--arc wants 'u,v'");
    try {
      u = std::stoi(arc_arg.substr(0, comma));
      v = std::stoi(arc_arg.substr(comma + 1));
    } catch (const std::exception&) {
      fail(Errc::usage, "cannot parse --arc '" + arc_arg + "'");
    }
  }
  BoundCertificate cert = exp_bound_certificate(pair, u, v);
  print_bound_certificate(std::cout, cert, pair.graph.vertex_count());
  return 0;
}

int run_catalog_list() {
  std::cout << "groups:\n";
  for (const CatalogEntry& e : catalog_groups())
    std::cout << "  " << e.name << "  degree " << e.group.degree() << "  order "
              << e.declared_order << "  " << classify_group(e.group) << "  -- "
              << e.provenance << "\n";
  std::cout << "graphs:\n";
  for (const GraphEntry& e : catalog_graphs())
    std::cout << "  " << e.name << "  vertices " << e.graph.vertex_count() << "  -- "
              << e.provenance << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"arc-transitive graph/group constructions and stabiliser analysis"};
  app.require_subcommand(1);
  std::size_t cap_flag = default_element_cap();
  app.add_option("--cap", cap_flag,
                 "element enumeration cap (also env ARCSTAB_ELEM_CAP)");

  // build
  CLI::App* build = app.add_subcommand("build", "construct a graph/group pair");
  build->require_subcommand(1);
  std::string w_r, w_t = "S3", out_path;
  int w_covers = 0;
  CLI::App* bw = build->add_subcommand("wreath", "bipartite base, covers, then wreath");
  bw->add_option("--r", w_r, "top group R (catalog name or group file)")->required();
  bw->add_option("--base-t", w_t, "base group T (catalog name or group file)");
  bw->add_option("--covers", w_covers, "number of homological 2-cover steps");
  bw->add_option("--out", out_path, "output basepath for the pair files");

  std::string tb_group, tb_blocks = "auto";
  int tb_l = 1, tb_m = 2;
  CLI::App* bt = build->add_subcommand("two-block", "doubling construction over C(k,2lm,1)");
  bt->add_option("--group", tb_group, "local group L (catalog name or file)")->required();
  bt->add_option("--blocks", tb_blocks, "auto or explicit cells like 0,2,4|1,3,5");
  bt->add_option("--l", tb_l, "number of fibre revolutions (l >= 1)");
  bt->add_option("--m", tb_m, "path length parameter (m >= 2)");
  bt->add_option("--out", out_path, "output basepath for the pair files");

  std::string d6_graph, d6_h = "search", d6_g = "search", d6_local;
  CLI::App* bd = build->add_subcommand("degree6", "doubled-cubic sandwich construction");
  // this subcommand owns --h, so its help flag keeps only the long form
  bd->set_help_flag("--help", "print help");
  bd->add_option("--graph", d6_graph, "cubic graph (catalog name or file)")->required();
  bd->add_option("--h", d6_h, "arc-regular subgroup (group file or 'search')");
  bd->add_option("--g", d6_g, "2-arc-regular group (group file or 'search')");
  bd->add_option("--local", d6_local, "target local group (catalog name)")->required();
  bd->add_option("--out", out_path, "output basepath for the pair files");

  // analyze
  std::vector<std::string> pair_paths;
  bool csv_flag = false;
  CLI::App* an = app.add_subcommand("analyze", "report invariants for pair files");
  an->add_option("pairs", pair_paths, "pair basepaths (<base>.graph + <base>.group)")
      ->required();
  an->add_flag("--csv", csv_flag, "emit CSV instead of human text");

  // sweep
  CLI::App* sweep = app.add_subcommand("sweep", "parameter sweeps");
  sweep->require_subcommand(1);
  std::string sw_group, sw_m = "2..5", sw_l = "1..1", sw_csv;
  CLI::App* st = sweep->add_subcommand("two-block", "sweep the doubling construction");
  st->add_option("--group", sw_group, "local group L (catalog name or file)")->required();
  st->add_option("--m", sw_m, "m range, e.g. 2..6");
  st->add_option("--l", sw_l, "l range, e.g. 1..3");
  st->add_option("--csv", sw_csv, "write CSV here instead of stdout");

  // classify-growth
  std::string cg_csv;
  CLI::App* cg = app.add_subcommand("classify-growth", "read a sweep CSV, report the trend");
  cg->add_option("csv", cg_csv, "CSV produced by sweep/analyze")->required();

  // explain-bound
  std::string eb_pair, eb_arc;
  CLI::App* eb = app.add_subcommand("explain-bound", "print the certificate trace");
  eb->add_option("pair", eb_pair, "pair basepath")->required();
  eb->add_option("--arc", eb_arc, "arc as 'u,v' (default: first arc)");

  // catalog
  CLI::App* cat = app.add_subcommand("catalog", "embedded groups and graphs");
  CLI::App* cl = cat->add_subcommand("list", "list all catalog entries");
  cat->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "error[usage]: " << e.what() << "\n";
    return 2;
  }

  try {
    g_cap = cap_flag;
    if (*bw) return run_build_wreath(w_r, w_t, w_covers, out_path);
    if (*bt) return run_build_two_block(tb_group, tb_blocks, tb_l, tb_m, out_path);
    if (*bd) return run_build_degree6(d6_graph, d6_h, d6_g, d6_local, out_path);
    if (*an) return run_analyze(pair_paths, csv_flag);
    if (*st) return run_sweep_two_block(sw_group, sw_m, sw_l, sw_csv);
    if (*cg) return run_classify_growth(cg_csv);
    if (*eb) return run_explain_bound(eb_pair, eb_arc);
    if (*cl) return run_catalog_list();
    std::cerr << "error[usage]: no subcommand selected\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error[" << e.code_name() << "]: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error[internal]: " << e.what() << "\n";
    return 1;
  }
}
