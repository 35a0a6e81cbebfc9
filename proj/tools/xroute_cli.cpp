// xroute command-line front end. Talks to the library only through xroute.h.
#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "xroute/xroute.h"

namespace {

int report(xr_status st, const char* what) {
  if (st != XR_OK) {
    std::fprintf(stderr, "xroute %s: %s error: %s\n", what, xr_status_name(st), xr_last_error());
  }
  return static_cast<int>(st);
}

// Writes text to path, or stdout when path is empty or "-".
int emit(const char* text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::fputs(text, stdout);
    return 0;
  }
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) {
    std::fprintf(stderr, "xroute: cannot write %s\n", path.c_str());
    return XR_E_IO;
  }
  std::fputs(text, f);
  return std::fclose(f) == 0 ? 0 : XR_E_IO;
}

struct GenArgs {
  std::string kind;
  std::size_t a = 0;
  std::size_t b = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_gen(const GenArgs& args) {
  xr_graph* g = nullptr;
  xr_status st = xr_graph_generate(args.kind.c_str(), args.a, args.b, args.seed, &g);
  if (st != XR_OK) return report(st, "gen");
  char* text = nullptr;
  st = xr_graph_text(g, &text);
  xr_graph_free(g);
  if (st != XR_OK) return report(st, "gen");
  const int rc = emit(text, args.out);
  xr_string_free(text);
  return rc;
}

struct PermArgs {
  std::string kind;
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string out;
};

int cmd_perm(const PermArgs& args) {
  xr_perm* p = nullptr;
  xr_status st = args.kind == "identity" ? xr_perm_identity(args.n, &p)
                                         : xr_perm_random(args.n, args.seed, &p);
  if (st != XR_OK) return report(st, "perm");
  char* text = nullptr;
  st = xr_perm_text(p, &text);
  xr_perm_free(p);
  if (st != XR_OK) return report(st, "perm");
  const int rc = emit(text, args.out);
  xr_string_free(text);
  return rc;
}

struct RouteArgs {
  std::string graph, perm, out, format = "text";
  xr_route_options opt{};
  bool no_direct = false;
};

int cmd_route(RouteArgs& args) {
  xr_graph* g = nullptr;
  xr_perm* p = nullptr;
  xr_report* r = nullptr;
  xr_schedule* s = nullptr;
  char* text = nullptr;
  int rc = 0;
  xr_status st = xr_graph_load(args.graph.c_str(), &g);
  if (st == XR_OK) st = xr_perm_load(args.perm.c_str(), &p);
  if (st == XR_OK) {
    args.opt.direct_swaps = args.no_direct ? 0 : 1;
    st = xr_route(g, p, &args.opt, &r);
  }
  if (st == XR_OK) st = xr_report_text(r, &text);
  if (st == XR_OK) {
    std::fputs(text, stdout);
    if (!args.out.empty()) {
      st = xr_report_schedule(r, &s);
      if (st == XR_OK) {
        st = xr_schedule_save(s, g, args.format == "json" ? XR_FORMAT_JSON : XR_FORMAT_TEXT,
                              args.out.c_str());
      }
    }
  }
  if (st == XR_OK && !xr_report_verified(r)) {
    std::fprintf(stderr, "xroute route: schedule failed verification\n");
    rc = XR_E_MISMATCH;
  } else {
    rc = report(st, "route");
  }
  xr_string_free(text);
  xr_schedule_free(s);
  xr_report_free(r);
  xr_perm_free(p);
  xr_graph_free(g);
  return rc;
}

struct VerifyArgs {
  std::string graph, perm, schedule;
};

int cmd_verify(const VerifyArgs& args) {
  xr_graph* g = nullptr;
  xr_perm* p = nullptr;
  xr_schedule* s = nullptr;
  xr_status st = xr_graph_load(args.graph.c_str(), &g);
  if (st == XR_OK) st = xr_perm_load(args.perm.c_str(), &p);
  if (st == XR_OK) st = xr_schedule_load(args.schedule.c_str(), &s);
  std::size_t bad_round = 0;
  if (st == XR_OK) st = xr_verify(g, p, s, &bad_round);
  if (st == XR_OK) {
    std::printf("ok rounds=%zu\n", xr_schedule_rounds(s));
  } else if (st == XR_E_MISMATCH) {
    if (bad_round) {
      std::printf("mismatch round=%zu: %s\n", bad_round, xr_last_error());
    } else {
      std::printf("mismatch: %s\n", xr_last_error());
    }
  }
  const int rc = st == XR_E_MISMATCH ? static_cast<int>(st) : report(st, "verify");
  xr_schedule_free(s);
  xr_perm_free(p);
  xr_graph_free(g);
  return rc;
}

struct LambdaArgs {
  std::string graph;
  double tol = 1e-8;
  std::size_t max_iter = 0;
  std::uint64_t seed = 0;
  bool strict = false;
};

int cmd_lambda(const LambdaArgs& args) {
  xr_graph* g = nullptr;
  xr_status st = xr_graph_load(args.graph.c_str(), &g);
  double lambda = 0.0;
  int converged = 0;
  if (st == XR_OK) st = xr_graph_lambda(g, args.tol, args.max_iter, args.seed, &lambda, &converged);
  int rc = report(st, "lambda");
  if (st == XR_OK) {
    std::printf("lambda_hat %.6f\n", lambda);
    if (lambda > 0.0) {
      std::printf("d_over_lambda %.6f\n", static_cast<double>(xr_graph_degree(g)) / lambda);
    } else {
      std::printf("d_over_lambda inf\n");
    }
    std::printf("converged %s\n", converged ? "true" : "false");
    if (!converged) {
      std::fprintf(stderr, "warning: power iteration did not reach tol %g\n", args.tol);
      if (args.strict) rc = 1;
    }
  }
  xr_graph_free(g);
  return rc;
}

struct BenchArgs {
  std::string spec, out;
  unsigned jobs = 1;
  bool no_timing = false;
};

int cmd_bench(const BenchArgs& args) {
  std::FILE* f = std::fopen(args.spec.c_str(), "rb");
  if (!f) {
    std::fprintf(stderr, "xroute bench: cannot read %s\n", args.spec.c_str());
    return XR_E_IO;
  }
  std::string spec;
  char buf[4096];
  for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, f)) > 0;) spec.append(buf, got);
  std::fclose(f);
  char* csv = nullptr;
  const xr_status st = xr_bench_run(spec.c_str(), args.jobs, args.no_timing ? 0 : 1, &csv);
  if (st != XR_OK) return report(st, "bench");
  const int rc = emit(csv, args.out);
  xr_string_free(csv);
  return rc;
}

struct ExactArgs {
  std::string graph, perm;
  std::size_t cap = 64;
};

int cmd_rt_exact(const ExactArgs& args) {
  xr_graph* g = nullptr;
  xr_perm* p = nullptr;
  xr_status st = xr_graph_load(args.graph.c_str(), &g);
  if (st == XR_OK) st = xr_perm_load(args.perm.c_str(), &p);
  std::size_t rt = 0;
  if (st == XR_OK) st = xr_rt_exact(g, p, args.cap, &rt);
  if (st == XR_OK) std::printf("%zu\n", rt);
  xr_perm_free(p);
  xr_graph_free(g);
  return report(st, "rt-exact");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation routing on regular expanders by matching rounds"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();
  app.set_version_flag("--version", xr_version());
  app.footer(
      "Exit codes: 0 ok, 1 usage or internal error, 2 parse, 3 infeasible parameters,\n"
      "4 partition failure, 5 routing failure, 6 verification mismatch, 7 io, 8 search cap.");

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("kind", gen.kind, "random-regular | cycle | complete | hypercube")
      ->required()
      ->check(CLI::IsMember({"random-regular", "cycle", "complete", "hypercube"}));
  gen_cmd->add_option("size", gen.a, "vertex count, or dimension for hypercube")->required();
  gen_cmd->add_option("degree", gen.b, "degree (random-regular only)");
  gen_cmd->add_option("--seed", gen.seed, "root seed");
  gen_cmd->add_option("-o,--out", gen.out, "output path (stdout when omitted)");

  PermArgs perm;
  auto* perm_cmd = app.add_subcommand("perm", "Write a permutation file");
  perm_cmd->add_option("kind", perm.kind, "random | identity")
      ->required()
      ->check(CLI::IsMember({"random", "identity"}));
  perm_cmd->add_option("n", perm.n, "size")->required();
  perm_cmd->add_option("--seed", perm.seed, "root seed");
  perm_cmd->add_option("-o,--out", perm.out, "output path (stdout when omitted)");

  RouteArgs route;
  xr_route_options_init(&route.opt);
  auto* route_cmd = app.add_subcommand("route", "Route a permutation; report on stdout");
  route_cmd->add_option("graph", route.graph, "graph file")->required();
  route_cmd->add_option("perm", route.perm, "permutation file")->required();
  route_cmd->add_option("-o,--out", route.out, "schedule output path");
  route_cmd->add_option("--format", route.format, "schedule format")
      ->check(CLI::IsMember({"text", "json"}));
  route_cmd->add_option("--seed", route.opt.seed, "root seed");
  route_cmd->add_option("--epsilon", route.opt.epsilon, "batch fraction")
      ->check(CLI::Range(1e-9, 1.0));
  route_cmd->add_option("--growth", route.opt.growth, "frontier fan-out (0: max(2, d/lambda))");
  route_cmd->add_option("--k", route.opt.k, "layer count (0: derived from growth and target)");
  route_cmd->add_option("--frontier-target", route.opt.frontier_target,
                        "frontier size (0: max(eps n, sqrt(4n/d)))");
  route_cmd->add_option("--capacity", route.opt.capacity,
                        "retained edges per layer (0: 3 eps n)");
  route_cmd->add_option("--path-retries", route.opt.path_retries, "attempts per path");
  route_cmd->add_option("--beta", route.opt.beta, "partition threshold fraction");
  route_cmd->add_option("--max-resamples", route.opt.max_resamples, "partition repair budget (0: 100n)");
  route_cmd->add_option("--lambda", route.opt.lambda_hat, "known lambda (0: estimate)");
  route_cmd->add_flag("--no-direct-swaps", route.no_direct, "route adjacent pairs through layers too");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Re-simulate a schedule");
  verify_cmd->add_option("graph", verify.graph, "graph file")->required();
  verify_cmd->add_option("perm", verify.perm, "permutation file")->required();
  verify_cmd->add_option("schedule", verify.schedule, "schedule file (text or JSON)")->required();

  LambdaArgs lambda;
  auto* lambda_cmd = app.add_subcommand("lambda", "Estimate the second absolute eigenvalue");
  lambda_cmd->add_option("graph", lambda.graph, "graph file")->required();
  lambda_cmd->add_option("--tol", lambda.tol, "convergence tolerance");
  lambda_cmd->add_option("--max-iter", lambda.max_iter, "iteration budget (0: 10 n ln n)");
  lambda_cmd->add_option("--seed", lambda.seed, "start vector seed");
  lambda_cmd->add_flag("--strict", lambda.strict, "exit 1 when not converged");

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Run a JSON bench spec, write CSV");
  bench_cmd->add_option("spec", bench.spec, "bench spec file")->required();
  bench_cmd->add_option("-o,--out", bench.out, "CSV path (stdout when omitted)");
  bench_cmd->add_option("-j,--jobs", bench.jobs, "worker threads");
  bench_cmd->add_flag("--no-timing", bench.no_timing, "write wall_ms as 0 for byte-stable output");

  ExactArgs exact;
  auto* exact_cmd = app.add_subcommand("rt-exact", "Exact routing number, n <= 8");
  exact_cmd->add_option("graph", exact.graph, "graph file")->required();
  exact_cmd->add_option("perm", exact.perm, "permutation file")->required();
  exact_cmd->add_option("--cap", exact.cap, "search depth cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  if (*gen_cmd) return cmd_gen(gen);
  if (*perm_cmd) return cmd_perm(perm);
  if (*route_cmd) return cmd_route(route);
  if (*verify_cmd) return cmd_verify(verify);
  if (*lambda_cmd) return cmd_lambda(lambda);
  if (*bench_cmd) return cmd_bench(bench);
  if (*exact_cmd) return cmd_rt_exact(exact);
  return 1;
}
