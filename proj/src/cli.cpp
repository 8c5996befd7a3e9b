#include "og4/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace og4 {

namespace {

using nlohmann::ordered_json;

ordered_json perm_json(const Permutation &p) {
  ordered_json j;
  j["images"] = p.images();
  j["cycles"] = p.cycle_string();
  return j;
}

ordered_json group_json(const PermGroup &g) {
  ordered_json j;
  j["degree"] = g.degree();
  ordered_json gens = ordered_json::array();
  for (const auto &p : g.generators())
    gens.push_back(p.images());
  j["generators"] = gens;
  return j;
}

void write_file(const std::filesystem::path &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw Error(ErrorKind::MalformedInput, "cannot write " + path.string());
  out << content;
}

std::uint64_t env_budget(const char *name, std::uint64_t fallback) {
  const char *v = std::getenv(name);
  if (v == nullptr)
    return fallback;
  return std::strtoull(v, nullptr, 10);
}

Budgets budgets_from_env() {
  Budgets b;
  b.vertex_budget = env_budget("OG4_BUDGET_VERTICES", b.vertex_budget);
  b.coset_index_bound = env_budget("OG4_BUDGET_COSETS", b.coset_index_bound);
  b.order_bound = env_budget("OG4_BUDGET_ORDER", b.order_bound);
  return b;
}

std::string param_tag(const FamilyInstance &inst) {
  std::string tag;
  for (const auto &[k, v] : inst.params)
    tag += "_" + k + std::to_string(v);
  return tag;
}

ordered_json metadata_json(const FamilyInstance &inst) {
  ordered_json meta;
  meta["schema"] = 1;
  meta["construction"] = inst.construction;
  meta["family"] = family_name(inst.family);
  ordered_json params = ordered_json::object();
  for (const auto &[k, v] : inst.params)
    params[k] = v;
  meta["parameters"] = params;
  meta["tier"] = inst.tier;
  if (inst.pair) {
    meta["vertex_count"] = inst.pair->graph.vertex_count;
    meta["valency"] = inst.pair->graph.adj.empty()
                          ? 0
                          : static_cast<int>(inst.pair->graph.adj[0].size());
    meta["group_order"] = order_to_string(inst.group_order);
  }
  return meta;
}

ordered_json bundle_json(const WreathConstructionData &data) {
  ordered_json j;
  j["schema"] = 1;
  j["construction"] = data.construction;
  j["p"] = data.p;
  j["k"] = data.k;
  j["block_degree"] = data.block_degree;
  j["t_order"] = order_to_string(data.t_order);
  j["h_order"] = order_to_string(data.h_order);
  j["H"] = group_json(data.H);
  j["V"] = group_json(data.V);
  j["phi"] = perm_json(data.phi);
  j["y"] = perm_json(data.y);
  j["h1"] = perm_json(data.h1);
  if (data.h2)
    j["h2"] = perm_json(*data.h2);
  j["y1"] = perm_json(data.y1);
  if (data.y2)
    j["y2"] = perm_json(*data.y2);
  return j;
}

FamilyParams params_from_flags(long long p, long long n) {
  FamilyParams params;
  params.p = p;
  params.n = n;
  return params;
}

int cmd_construct(const std::string &family_str, long long p, long long n,
                  const std::string &export_fmt, const std::string &out_dir,
                  const Budgets &budgets) {
  FamilyId family = family_from_string(family_str);
  FamilyInstance inst = build_family(family, params_from_flags(p, n), budgets);
  std::filesystem::path dir(out_dir);
  std::filesystem::create_directories(dir);
  std::string stem = family_name(family) + param_tag(inst);

  write_file(dir / (stem + "_meta.json"), metadata_json(inst).dump(2) + "\n");

  if (inst.tier == "certificate") {
    write_file(dir / (stem + "_bundle.json"), bundle_json(*inst.bundle).dump(2) + "\n");
    std::cout << "graph too large to build; certificate bundle written to "
              << (dir / (stem + "_bundle.json")).string() << "\n";
    return exit_budget;
  }

  if (!export_fmt.empty()) {
    ExportFormat fmt = export_format_from_string(export_fmt);
    std::string ext = fmt == ExportFormat::edge_list  ? ".edges"
                      : fmt == ExportFormat::graph6   ? ".g6"
                                                      : ".dot";
    const std::vector<std::pair<Point, Point>> *orientation = nullptr;
    OrientedCheck oc;
    if (fmt == ExportFormat::dot_oriented) {
      oc = check_oriented(*inst.pair);
      orientation = &oc.orientation;
    }
    write_file(dir / (stem + ext), export_graph(inst.pair->graph, fmt, orientation));
  }
  write_file(dir / (stem + "_group.json"),
             group_json(inst.pair->action).dump(2) + "\n");
  std::cout << "wrote " << stem << "* to " << dir.string() << "\n";
  return exit_ok;
}

int cmd_verify_family(const std::string &family_str, long long p, long long n,
                      const std::string &out_file, const Budgets &budgets) {
  FamilyId family = family_from_string(family_str);
  FamilyInstance inst = build_family(family, params_from_flags(p, n), budgets);
  VerificationReport report = verify_family_instance(inst, budgets);
  std::string text = report_to_json_string(report);
  if (out_file.empty())
    std::cout << text;
  else
    write_file(out_file, text);
  return report.all_passed() ? exit_ok : exit_checks_failed;
}

int cmd_verify_input(const std::string &input_file, const std::string &out_file,
                     const Budgets &budgets) {
  std::ifstream in(input_file, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::MalformedInput, "cannot read " + input_file);
  std::stringstream buf;
  buf << in.rdbuf();
  OrientedPair pair = load_pair_json(buf.str());

  VerificationReport report;
  report.family = "input";
  report.construction = "user";
  report.tier = "explicit";
  OrientedCheck oc = check_oriented(pair);
  auto push = [&](const std::string &name, bool ok, const std::string &ev,
                  const std::string &ref) {
    report.checks.push_back({name, ok ? "pass" : "fail", ev, ref});
  };
  push("four-valent", oc.four_valent, "", "orientedness");
  push("connected", oc.connected, "", "orientedness");
  push("vertex-transitive", oc.vertex_transitive, "", "orientedness");
  push("edge-transitive", oc.edge_transitive, "", "orientedness");
  push("two-arc-orbits", oc.two_arc_orbits,
       std::to_string(oc.arc_orbit_count) + " arc orbits", "orientedness");
  push("oriented", oc.is_in_OG4, "", "orientedness");
  if (oc.is_in_OG4) {
    SArcReport sr = s_arc_report(pair);
    push("s-arc-regular", sr.regular, "s = " + std::to_string(sr.s),
         "oriented-s-arc-regularity");
    try {
      PairAnalysis analysis = analyze_pair(pair, budgets.order_bound);
      push("biquasiprimitive", analysis.basic.type == BasicType::biquasiprimitive,
           basic_type_name(analysis.basic.type), "basic-type-classification");
      if (analysis.socle)
        push("socle-case", true,
             std::string(1, analysis.socle->which) + ", k = " +
                 std::to_string(analysis.socle->k),
             "socle-structure");
    } catch (const Error &e) {
      if (e.kind != ErrorKind::BudgetExceeded)
        throw;
      report.checks.push_back({"basic-type", "skipped-with-certificate",
                               "group order exceeds the brute-force bound",
                               "basic-type-classification"});
    }
  }
  std::string text = report_to_json_string(report);
  if (out_file.empty())
    std::cout << text;
  else
    write_file(out_file, text);
  return report.all_passed() ? exit_ok : exit_checks_failed;
}

int cmd_table2(const std::string &families_csv, const std::string &params_file,
               const std::string &out_file, int jobs, const Budgets &budgets) {
  SweepRequest request;
  if (!params_file.empty()) {
    try {
      std::ifstream in(params_file, std::ios::binary);
      if (!in)
        throw Error(ErrorKind::MalformedInput, "cannot read " + params_file);
      std::stringstream buf;
      buf << in.rdbuf();
      auto j = nlohmann::json::parse(buf.str());
      for (const auto &row : j.at("instances")) {
        FamilyParams params;
        params.p = row.value("p", 0);
        params.n = row.value("n", 0);
        request.instances.push_back(
            {family_from_string(row.at("family").get<std::string>()), params});
      }
    } catch (const std::exception &e) {
      // per-row error reporting: a single failed pseudo-row, exit stays 0
      std::cout << "params file error: " << e.what() << "\n";
      SweepRow row;
      row.report.family = "params-file";
      row.report.construction = "none";
      row.report.tier = "error";
      row.report.checks.push_back({"parse", "fail", e.what(), "artifact"});
      std::vector<SweepRow> rows{row};
      std::string text = sweep_to_json_string(rows);
      if (!out_file.empty())
        write_file(out_file, text);
      return exit_ok;
    }
  } else if (!families_csv.empty()) {
    std::vector<FamilyId> families;
    std::stringstream ss(families_csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
      families.push_back(family_from_string(tok));
    request = SweepRequest::for_families(families);
  } else {
    request = SweepRequest::defaults();
  }

  auto rows = table2_sweep(request, budgets, jobs);

  std::size_t verified = 0;
  auto pad = [](std::string s, std::size_t w) {
    if (s.size() > w - 2)
      s = s.substr(0, w - 5) + "...";
    while (s.size() < w)
      s.push_back(' ');
    return s;
  };
  std::cout << pad("family", 8) << pad("construction", 14) << pad("params", 10)
            << pad("tier", 13) << pad("socle", 40) << "status\n";
  for (const auto &row : rows) {
    std::string params;
    for (const auto &[k, v] : row.report.params)
      params += k + "=" + std::to_string(v) + " ";
    std::string socle = "-";
    for (const auto &c : row.report.checks)
      if (c.name == "socle-case") {
        socle = c.evidence;
        auto cut = socle.find("), expected");
        if (cut != std::string::npos)
          socle = socle.substr(0, cut + 1);
      }
    std::cout << pad(row.report.family, 8) << pad(row.report.construction, 14)
              << pad(params, 10) << pad(row.report.tier, 13) << pad(socle, 40)
              << (row.verified ? "verified" : "FAILED") << "\n";
    verified += row.verified ? 1 : 0;
  }
  std::cout << verified << "/" << rows.size() << " rows verified\n";

  std::string text = sweep_to_json_string(rows);
  if (!out_file.empty())
    write_file(out_file, text);
  return exit_ok;
}

} // namespace

std::string permutation_to_json_string(const Permutation &p) {
  return perm_json(p).dump();
}

std::string group_to_json_string(const PermGroup &g) { return group_json(g).dump(); }

OrientedPair load_pair_json(const std::string &text) {
  try {
    auto j = nlohmann::json::parse(text);
    const auto &jg = j.at("graph");
    Point n = jg.at("vertex_count").get<Point>();
    std::vector<std::pair<Point, Point>> edges;
    for (const auto &e : jg.at("edges"))
      edges.push_back({e.at(0).get<Point>(), e.at(1).get<Point>()});
    Graph graph = Graph::from_edges(n, std::move(edges));
    const auto &jgrp = j.at("group");
    Point degree = jgrp.at("degree").get<Point>();
    std::vector<Permutation> gens;
    for (const auto &imgs : jgrp.at("generators"))
      gens.push_back(Permutation(imgs.get<std::vector<Point>>()));
    return OrientedPair::make(std::move(graph), PermGroup(degree, std::move(gens)));
  } catch (const Error &) {
    throw;
  } catch (const std::exception &e) {
    throw Error(ErrorKind::MalformedInput, std::string("bad input: ") + e.what());
  }
}

std::string pair_to_json_string(const OrientedPair &pair) {
  ordered_json j;
  j["schema"] = 1;
  ordered_json jg;
  jg["vertex_count"] = pair.graph.vertex_count;
  ordered_json edges = ordered_json::array();
  for (auto [u, v] : pair.graph.edges())
    edges.push_back({u, v});
  jg["edges"] = edges;
  j["graph"] = jg;
  j["group"] = group_json(pair.action);
  return j.dump(2) + "\n";
}

int run_cli(const std::vector<std::string> &args) {
  CLI::App app{"og4: constructs 4-valent oriented graph pairs with "
               "biquasiprimitive-type symmetry and machine-checks the catalog "
               "of their defining conditions"};
  app.footer("exit codes: 0 all checks pass, 1 checks failed, 2 bad parameters, "
             "3 budget exceeded (certificate written where applicable), "
             "4 malformed input.\nbudget environment overrides: "
             "OG4_BUDGET_VERTICES, OG4_BUDGET_COSETS, OG4_BUDGET_ORDER");
  app.require_subcommand(1);

  Budgets budgets = budgets_from_env();
  std::string family, export_fmt, input_file, families_csv, params_file;
  std::string construct_out = ".", verify_out, table2_out;
  long long p = 0, n = 0;
  int jobs = 1;

  auto add_budget_flags = [&](CLI::App *cmd) {
    cmd->add_option("--vertex-budget", budgets.vertex_budget,
                    "largest graph the builders may materialize");
    cmd->add_option("--coset-index-bound", budgets.coset_index_bound,
                    "largest coset space the builders may enumerate");
    cmd->add_option("--order-bound", budgets.order_bound,
                    "largest group order brute-force analysis may enumerate");
  };

  CLI::App *construct =
      app.add_subcommand("construct", "build one family instance and export it");
  construct->add_option("family", family, "family id (A1 A2 B1 B2 B4 C1 C2 C4)")
      ->required();
  construct->add_option("--p", p, "prime parameter");
  construct->add_option("--n", n, "alternating-group parameter");
  construct->add_option("--export", export_fmt,
                        "edge_list, graph6 or dot_oriented");
  construct->add_option("--out", construct_out, "output directory");
  add_budget_flags(construct);

  CLI::App *verify = app.add_subcommand("verify", "run the full check list");
  verify->add_option("family", family, "family id");
  verify->add_option("--p", p, "prime parameter");
  verify->add_option("--n", n, "alternating-group parameter");
  verify->add_option("--input", input_file, "verify a {graph, group} JSON file");
  verify->add_option("--out", verify_out, "write the JSON report here");
  add_budget_flags(verify);

  CLI::App *table2 = app.add_subcommand(
      "table2", "build and verify every family row; prints the result matrix");
  table2->add_option("--families", families_csv, "comma-separated family ids");
  table2->add_option("--params-file", params_file,
                     "JSON file {\"instances\": [{\"family\": \"A1\", \"p\": 5}]}");
  table2->add_option("--out", table2_out, "write the aggregated JSON report here");
  table2->add_option("--jobs", jobs, "instances verified in parallel")
      ->default_val(1);
  add_budget_flags(table2);

  std::vector<const char *> argv;
  argv.push_back("og4");
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? exit_ok : exit_bad_params;
  }

  try {
    if (construct->parsed())
      return cmd_construct(family, p, n, export_fmt, construct_out, budgets);
    if (verify->parsed()) {
      if (!input_file.empty())
        return cmd_verify_input(input_file, verify_out, budgets);
      if (family.empty())
        throw Error(ErrorKind::BadParameters, "verify: family or --input required");
      return cmd_verify_family(family, p, n, verify_out, budgets);
    }
    if (table2->parsed())
      return cmd_table2(families_csv, params_file, table2_out, jobs, budgets);
  } catch (const Error &e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind) {
    case ErrorKind::BadParameters:
      return exit_bad_params;
    case ErrorKind::BudgetExceeded:
      return exit_budget;
    case ErrorKind::MalformedInput:
      return exit_bad_input;
    default:
      return exit_checks_failed;
    }
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_checks_failed;
  }
  return exit_bad_params;
}

int run_cli(int argc, const char *const *argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.push_back(argv[i]);
  return run_cli(args);
}

} // namespace og4
