// mhorient: covering checks, hyperedge orientation, uncrossing diagnostics,
// arborescence-packing conditions and search, and seeded instance
// generation, all over a shared JSON instance format. Reports go to stdout;
// exit code 0 means the checked property holds (or a file was generated),
// 1 means it fails with a certificate in the report, 2 means the input did
// not validate.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mho/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"mixed hypergraph orientation and arborescence packing toolkit"};
  app.require_subcommand(1);

  std::string instance;
  std::string out;
  std::string p1;
  std::string p2;
  int parallel = 1;
  int max_vertices = 0;
  bool debug_recheck = false;
  mho::GenArgs gen_args;

  const auto add_instance = [&](CLI::App* cmd) {
    cmd->add_option("--instance", instance, "instance file")->required();
  };
  const auto add_max_vertices = [&](CLI::App* cmd) {
    cmd->add_option("--max-vertices", max_vertices,
                    "reject instances with more vertices (0 = library caps only)");
  };
  const auto add_parallel = [&](CLI::App* cmd) {
    cmd->add_option("--parallel", parallel, "worker threads for condition scans")
        ->check(CLI::Range(1, 64));
  };
  const auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("--out", out, "also write the result file here (atomic)");
  };

  CLI::App* check = app.add_subcommand("check", "test the covering condition");
  add_instance(check);
  add_parallel(check);
  add_max_vertices(check);
  add_out(check);

  CLI::App* orient = app.add_subcommand("orient", "orient every hyperedge");
  add_instance(orient);
  add_parallel(orient);
  add_max_vertices(orient);
  add_out(orient);
  orient->add_flag("--debug-recheck", debug_recheck,
                   "re-run the full condition check after every step");

  CLI::App* verify = app.add_subcommand("verify", "re-check an oriented instance");
  add_instance(verify);
  add_parallel(verify);
  add_max_vertices(verify);
  add_out(verify);

  CLI::App* funcs = app.add_subcommand("funcs", "verify the modularity hypotheses of h and b");
  add_instance(funcs);
  add_max_vertices(funcs);
  add_out(funcs);

  CLI::App* uncross = app.add_subcommand("uncross", "uncross a subpartition pair");
  add_instance(uncross);
  add_max_vertices(uncross);
  add_out(uncross);
  uncross->add_option("--p1", p1, "first subpartition, JSON list of label lists")->required();
  uncross->add_option("--p2", p2, "second subpartition, JSON list of label lists")->required();

  CLI::App* pack_check = app.add_subcommand("pack-check", "test the packing conditions");
  add_instance(pack_check);
  add_out(pack_check);

  CLI::App* pack_search = app.add_subcommand("pack-search", "exhaustive packing search");
  add_instance(pack_search);
  add_out(pack_search);

  CLI::App* gen = app.add_subcommand("gen", "generate a seeded random instance");
  gen->add_option("--seed", gen_args.seed, "generator seed")->required();
  gen->add_option("--max-vertices", gen_args.n, "universe size");
  gen->add_option("--hyperedges", gen_args.hyperedges, "hyperedge copies (-1 = random)");
  gen->add_option("--dyperedges", gen_args.dyperedges, "dyperedge copies (-1 = random)");
  gen->add_option("--h-family", gen_args.h_family,
                  "demand family: any|constant|k_minus_rank|cardinality|table");
  gen->add_option("--b-family", gen_args.b_family,
                  "allowance family: any|constant|modular|rank|cardinality|table");
  gen->add_option("--mode", gen_args.mode, "generate for this packing mode instead");
  gen->add_option("--edges", gen_args.edges, "packing edge copies (-1 = random)");
  add_out(gen);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string active = app.get_subcommands().front()->get_name();
  try {
    mho::CommandResult result;
    if (check->parsed()) {
      result = mho::cmd_check(instance, parallel, max_vertices);
    } else if (orient->parsed()) {
      result = mho::cmd_orient(instance, debug_recheck, parallel, max_vertices);
    } else if (verify->parsed()) {
      result = mho::cmd_verify(instance, parallel, max_vertices);
    } else if (funcs->parsed()) {
      result = mho::cmd_funcs(instance, max_vertices);
    } else if (uncross->parsed()) {
      result = mho::cmd_uncross(instance, p1, p2, max_vertices);
    } else if (pack_check->parsed()) {
      result = mho::cmd_pack_check(instance);
    } else if (pack_search->parsed()) {
      result = mho::cmd_pack_search(instance);
    } else {
      result = mho::cmd_gen(gen_args);
    }
    std::cout << result.report.dump(2) << "\n";
    if (!out.empty()) {
      mho::save_json(result.artifact ? *result.artifact : result.report, out);
    }
    return result.exit_code;
  } catch (const mho::Error& e) {
    mho::json report;
    report["command"] = active;
    report["verdict"] = "error";
    report["error"] = e.what();
    std::cout << report.dump(2) << "\n";
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
