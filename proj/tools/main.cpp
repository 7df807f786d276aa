// Command-line surface for generating, lifting, solving, classifying,
// constructing, and verifying hyperedge colorings.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hyperlift/errors.hpp"
#include "hyperlift/lifting.hpp"
#include "hyperlift/ramsey.hpp"
#include "hyperlift/structure.hpp"
#include "hyperlift/suites.hpp"

namespace {

using namespace hyperlift;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

std::map<std::string, long> parse_params(const std::string& text) {
  std::map<std::string, long> params;
  if (text.empty()) return params;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string entry = text.substr(start, comma - start);
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos || eq == 0)
      throw std::invalid_argument("parameter '" + entry + "' must be key=value");
    try {
      params[entry.substr(0, eq)] = std::stol(entry.substr(eq + 1));
    } catch (const std::exception&) {
      throw std::invalid_argument("parameter '" + entry + "' has a non-integer value");
    }
    start = comma + 1;
  }
  return params;
}

VertexSet parse_vertex_list(const std::string& text) {
  VertexSet out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    const std::string entry = text.substr(start, comma - start);
    try {
      out.push_back(std::stoi(entry));
    } catch (const std::exception&) {
      throw std::invalid_argument("vertex '" + entry + "' is not an integer");
    }
    start = comma + 1;
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::invalid_argument("vertex list has duplicates");
  return out;
}

std::string vertex_list(const VertexSet& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

void print_violations(const Certificate& cert) {
  for (const auto& v : cert.violations) {
    std::cout << "violation color=" << static_cast<int>(v.color)
              << " vertices=" << vertex_list(v.vertices);
    if (v.missing) std::cout << " missing=" << vertex_list(*v.missing);
    std::cout << "\n";
  }
}

int print_certificate_summary(const Certificate& cert) {
  std::cout << "statement=" << cert.statement << "\n";
  std::cout << "verified=" << (cert.verified ? "true" : "false") << "\n";
  print_violations(cert);
  return cert.verified ? kExitOk : kExitNegative;
}

int run(int argc, char** argv) {
  CLI::App app{"finite-field lifting maps for hyperedge colorings"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // gen
  auto* gen = app.add_subcommand("gen", "generate a named coloring family");
  std::string gen_family, gen_params, gen_out;
  gen->add_option("--family", gen_family, "family name")->required();
  gen->add_option("--params", gen_params, "comma-separated key=value parameters");
  gen->add_option("--out", gen_out, "output coloring file")->required();
  gen->callback([&] {
    write_coloring_file(generate_family(gen_family, parse_params(gen_params)), gen_out);
  });

  // lift
  auto* lift = app.add_subcommand("lift", "apply the lifting map to a coloring file");
  std::string lift_in, lift_out;
  int lift_s = 0, lift_r = 0, lift_q = 0;
  lift->add_option("--in", lift_in, "input coloring file")->required();
  lift->add_option("--s", lift_s, "source uniformity (checked against the file)");
  lift->add_option("--r", lift_r, "target uniformity")->required();
  lift->add_option("--q", lift_q, "field order (checked against the file)");
  lift->add_option("--out", lift_out, "output coloring file")->required();
  lift->callback([&] {
    const auto f = read_coloring_file(lift_in);
    if (lift_s && lift_s != f.r)
      throw std::invalid_argument("--s does not match the file uniformity");
    if (lift_q && lift_q != f.q)
      throw std::invalid_argument("--q does not match the file field order");
    write_coloring_file(apply_lift({f.q, f.n, f.r, lift_r}, f), lift_out);
  });

  // rank
  auto* rank = app.add_subcommand("rank", "rank and kernel of a lift matrix");
  int rank_n = 0, rank_s = 0, rank_r = 0, rank_q = 0;
  rank->add_option("--n", rank_n)->required();
  rank->add_option("--s", rank_s)->required();
  rank->add_option("--r", rank_r)->required();
  rank->add_option("--q", rank_q)->required();
  rank->callback([&] {
    const auto ks = rank_kernel({rank_q, rank_n, rank_s, rank_r});
    std::cout << "rank=" << ks.rank << " kernel=" << ks.kernel_dim
              << " preimages=" << ks.preimage_count << "\n";
  });

  // solve
  auto* solve = app.add_subcommand("solve", "decide image membership; write one preimage");
  std::string solve_target, solve_out;
  int solve_s = 0;
  solve->add_option("--target", solve_target, "target coloring file")->required();
  solve->add_option("--s", solve_s, "source uniformity")->required();
  solve->add_option("--out", solve_out, "preimage output file");
  solve->callback([&] {
    const auto g = read_coloring_file(solve_target);
    const LiftSpec spec{g.q, g.n, solve_s, g.r};
    const auto f = solve_preimage(spec, g);
    if (!f) {
      std::cout << "member=false\n";
      exit_code = kExitNegative;
      return;
    }
    std::cout << "member=true preimages=" << rank_kernel(spec).preimage_count << "\n";
    if (!solve_out.empty()) write_coloring_file(*f, solve_out);
  });

  // classify
  auto* classify = app.add_subcommand("classify", "induced edge-count parity of a graph");
  std::string classify_graph;
  int classify_r = 0;
  classify->add_option("--graph", classify_graph, "graph coloring file")->required();
  classify->add_option("--r", classify_r, "induced subgraph order")->required();
  classify->callback([&] {
    const auto b = classify_r_behavior(read_coloring_file(classify_graph), classify_r);
    std::cout << "classification=" << to_string(b.tag) << "\n";
    if (b.witness_odd) std::cout << "witness_odd=" << vertex_list(*b.witness_odd) << "\n";
    if (b.witness_even) std::cout << "witness_even=" << vertex_list(*b.witness_even) << "\n";
  });

  // components
  auto* components = app.add_subcommand("components", "monochromatic component count");
  std::string comp_in, comp_subset;
  int comp_color = 0;
  components->add_option("--in", comp_in, "coloring file")->required();
  components->add_option("--color", comp_color, "hyperedge color")->required();
  components->add_option("--subset", comp_subset, "comma-separated vertex subset");
  components->callback([&] {
    const auto f = read_coloring_file(comp_in);
    VertexSet S;
    if (comp_subset.empty()) {
      S.resize(static_cast<std::size_t>(f.n));
      std::iota(S.begin(), S.end(), 0);
    } else {
      S = parse_vertex_list(comp_subset);
    }
    if (comp_color < 0 || comp_color >= f.q)
      throw std::invalid_argument("color out of range");
    std::cout << "components="
              << mono_components(f, S, static_cast<FieldElement>(comp_color)) << "\n";
  });

  // search
  auto* search = app.add_subcommand("search", "find a monochromatic pattern");
  std::string search_in, search_pattern;
  int search_color = 0, search_m = 0;
  bool search_induced = false;
  search->add_option("--in", search_in, "coloring file")->required();
  search->add_option("--color", search_color, "pattern color")->required();
  search->add_option("--pattern", search_pattern, "clique or cliqueminus")->required();
  search->add_option("--m", search_m, "pattern order")->required();
  search->add_flag("--induced", search_induced,
                   "exact occurrence (cliqueminus only; default is contains)");
  search->callback([&] {
    const auto f = read_coloring_file(search_in);
    if (search_color < 0 || search_color >= f.q)
      throw std::invalid_argument("color out of range");
    std::optional<PatternHit> hit;
    if (search_pattern == "clique") {
      hit = find_mono_clique(f, static_cast<FieldElement>(search_color), search_m);
    } else if (search_pattern == "cliqueminus") {
      hit = find_clique_minus_edge(
          f, static_cast<FieldElement>(search_color), search_m,
          search_induced ? SearchMode::Induced : SearchMode::Contains);
    } else {
      throw std::invalid_argument("pattern must be clique or cliqueminus");
    }
    if (!hit) {
      std::cout << "NONE\n";
      exit_code = kExitNegative;
      return;
    }
    std::cout << "witness=" << vertex_list(hit->vertices);
    if (hit->missing) std::cout << " missing=" << vertex_list(*hit->missing);
    std::cout << "\n";
  });

  // construct
  auto* construct = app.add_subcommand(
      "construct", "lift a 3-colored graph and blow it up to 5 colors");
  std::string construct_base, construct_out;
  int construct_copies = 0, construct_rainbow = 0;
  construct->add_option("--base", construct_base, "3-colored graph file")->required();
  construct->add_option("--copies", construct_copies, "number of blocks")->required();
  construct->add_option("--rainbow", construct_rainbow, "rainbow triangle color (default 0)");
  construct->add_option("--out", construct_out, "output coloring file")->required();
  construct->callback([&] {
    if (construct_rainbow < 0 || construct_rainbow > 2)
      throw std::invalid_argument("rainbow color must be 0, 1, or 2");
    const auto base = read_coloring_file(construct_base);
    const auto lifted =
        lift_3coloring(base, static_cast<FieldElement>(construct_rainbow));
    write_coloring_file(blowup_5color(lifted, construct_copies), construct_out);
  });

  // verify
  auto* verify = app.add_subcommand("verify", "check a coloring against avoidance targets");
  std::string verify_in, verify_avoid;
  verify->add_option("--in", verify_in, "coloring file")->required();
  verify->add_option("--avoid", verify_avoid,
                     "targets: <color>:<clique|cliqueminus>:<m>[:induced|:contains],...")
      ->required();
  verify->callback([&] {
    const auto f = read_coloring_file(verify_in);
    exit_code = print_certificate_summary(
        verify_avoidance(f, parse_avoidance_spec(verify_avoid)));
  });

  // certify
  auto* certify = app.add_subcommand("certify", "full pipeline: base check, lift, blow-up, verify");
  std::string certify_family, certify_out;
  int certify_copies = 0, certify_rainbow = 0;
  certify->add_option("--family", certify_family, "base family name")->required();
  certify->add_option("--copies", certify_copies, "number of blocks")->required();
  certify->add_option("--rainbow", certify_rainbow, "rainbow triangle color (default 0)");
  certify->add_option("--out", certify_out, "certificate output file");
  certify->callback([&] {
    if (certify_rainbow < 0 || certify_rainbow > 2)
      throw std::invalid_argument("rainbow color must be 0, 1, or 2");
    const auto cert = certify_bound(certify_family, certify_copies,
                                    static_cast<FieldElement>(certify_rainbow));
    if (!certify_out.empty()) {
      std::ofstream out(certify_out);
      if (!out) throw std::runtime_error("cannot open file for writing: " + certify_out);
      out << write_certificate(cert);
    }
    exit_code = print_certificate_summary(cert);
  });

  // check
  auto* check = app.add_subcommand("check", "run the structural property suites");
  std::string check_suite = "all";
  std::uint64_t check_seed = 0;
  int check_n_max = 8;
  check->add_option("--suite", check_suite, "suite name or 'all'")->required();
  check->add_option("--seed", check_seed, "seed for randomized suites (default 0)");
  check->add_option("--n-max", check_n_max, "cap on sweep order (default 8)");
  check->callback([&] {
    SuiteOptions opts;
    opts.seed = check_seed;
    opts.n_max = check_n_max;
    std::vector<SuiteResult> results;
    if (check_suite == "all")
      results = run_all_suites(opts);
    else
      results.push_back(run_suite(check_suite, opts));
    std::cout << format_suite_table(results);
    for (const auto& r : results)
      if (!r.passed) exit_code = kExitNegative;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const ResourceError& e) {
    std::cout << "error: resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const BaseCheckError& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const ParseError& e) {
    std::cout << "error: parse: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cout << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
