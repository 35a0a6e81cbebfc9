#include "xroute/xroute.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <sstream>
#include <string>

#include "xroute/graph.hpp"
#include "xroute/io.hpp"
#include "xroute/oracle.hpp"
#include "xroute/perm.hpp"
#include "xroute/rng.hpp"
#include "xroute/scheduler.hpp"
#include "xroute/simulate.hpp"

struct xr_graph {
  xroute::Graph g;
};
struct xr_perm {
  xroute::Permutation p;
};
struct xr_schedule {
  xroute::Schedule s;
  std::string graph_hash;
};
struct xr_report {
  xroute::RouteReport r;
};

namespace {

thread_local std::string last_error;

xr_status status_of(xroute::Errc c) {
  using xroute::Errc;
  switch (c) {
    case Errc::Parse:
    case Errc::NotRegular:
    case Errc::NotSimple:
    case Errc::Disconnected:
    case Errc::LengthMismatch:
      return XR_E_PARSE;
    case Errc::InfeasibleDegree:
    case Errc::RetriesExhausted:
    case Errc::TooLarge:
      return XR_E_INFEASIBLE;
    case Errc::PartitionFailed:
    case Errc::ResamplesExhausted:
      return XR_E_PARTITION;
    case Errc::RoutingFailed:
    case Errc::BatchFailed:
    case Errc::FrontierStuck:
    case Errc::NoCrossingEdge:
    case Errc::InvalidFamily:
      return XR_E_ROUTING;
    case Errc::EdgeNotInGraph:
    case Errc::VertexReused:
      return XR_E_MISMATCH;
    case Errc::Io:
      return XR_E_IO;
    case Errc::ExceedsCap:
      return XR_E_EXCEEDS_CAP;
    case Errc::InvalidArgument:
      break;
  }
  return XR_E_ARGUMENT;
}

xr_status fail(xr_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs body, translating exceptions into status codes.
template <class F>
xr_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const xroute::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(XR_E_ARGUMENT, "out of memory");
  } catch (const std::exception& e) {
    return fail(XR_E_ARGUMENT, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

#define XR_REQUIRE(cond)                                             \
  do {                                                               \
    if (!(cond)) return fail(XR_E_ARGUMENT, "null argument: " #cond); \
  } while (0)

}  // namespace

extern "C" {

const char* xr_last_error(void) { return last_error.c_str(); }

const char* xr_status_name(xr_status status) {
  switch (status) {
    case XR_OK: return "ok";
    case XR_E_ARGUMENT: return "argument";
    case XR_E_PARSE: return "parse";
    case XR_E_INFEASIBLE: return "infeasible";
    case XR_E_PARTITION: return "partition";
    case XR_E_ROUTING: return "routing";
    case XR_E_MISMATCH: return "mismatch";
    case XR_E_IO: return "io";
    case XR_E_EXCEEDS_CAP: return "exceeds-cap";
  }
  return "unknown";
}

const char* xr_version(void) { return "0.1.0"; }

void xr_string_free(char* s) { std::free(s); }

xr_status xr_graph_generate(const char* kind, size_t a, size_t b, uint64_t seed, xr_graph** out) {
  XR_REQUIRE(kind && out);
  return guarded([&] {
    const std::string k = kind;
    xroute::Graph g;
    if (k == "random-regular") {
      g = xroute::gen_random_regular(a, b, seed);
    } else if (k == "cycle") {
      g = xroute::gen_cycle(a);
    } else if (k == "complete") {
      g = xroute::gen_complete(a);
    } else if (k == "hypercube") {
      g = xroute::gen_hypercube(a);
    } else {
      return fail(XR_E_ARGUMENT, "unknown graph kind '" + k + "'");
    }
    *out = new xr_graph{std::move(g)};
    return XR_OK;
  });
}

xr_status xr_graph_parse(const char* text, xr_graph** out) {
  XR_REQUIRE(text && out);
  return guarded([&] {
    *out = new xr_graph{xroute::parse_graph(text)};
    return XR_OK;
  });
}

xr_status xr_graph_load(const char* path, xr_graph** out) {
  XR_REQUIRE(path && out);
  return guarded([&] {
    *out = new xr_graph{xroute::parse_graph(xroute::read_file(path))};
    return XR_OK;
  });
}

xr_status xr_graph_text(const xr_graph* g, char** out) {
  XR_REQUIRE(g && out);
  return guarded([&] {
    *out = dup_string(xroute::graph_text(g->g));
    return XR_OK;
  });
}

xr_status xr_graph_save(const xr_graph* g, const char* path) {
  XR_REQUIRE(g && path);
  return guarded([&] {
    xroute::write_file(path, xroute::graph_text(g->g));
    return XR_OK;
  });
}

size_t xr_graph_n(const xr_graph* g) { return g ? g->g.n() : 0; }
size_t xr_graph_degree(const xr_graph* g) { return g ? g->g.degree() : 0; }

xr_status xr_graph_lambda(const xr_graph* g, double tol, size_t max_iter, uint64_t seed,
                          double* lambda, int* converged) {
  XR_REQUIRE(g && lambda);
  return guarded([&] {
    const auto prof = xroute::estimate_lambda(g->g, tol, max_iter, seed);
    *lambda = prof.lambda_hat;
    if (converged) *converged = prof.converged ? 1 : 0;
    return XR_OK;
  });
}

xr_status xr_graph_diameter(const xr_graph* g, size_t* out) {
  XR_REQUIRE(g && out);
  return guarded([&] {
    *out = xroute::diameter(g->g);
    return XR_OK;
  });
}

void xr_graph_free(xr_graph* g) { delete g; }

xr_status xr_perm_parse(const char* text, xr_perm** out) {
  XR_REQUIRE(text && out);
  return guarded([&] {
    *out = new xr_perm{xroute::parse_permutation(text)};
    return XR_OK;
  });
}

xr_status xr_perm_load(const char* path, xr_perm** out) {
  XR_REQUIRE(path && out);
  return guarded([&] {
    *out = new xr_perm{xroute::parse_permutation(xroute::read_file(path))};
    return XR_OK;
  });
}

xr_status xr_perm_identity(size_t n, xr_perm** out) {
  XR_REQUIRE(out);
  return guarded([&] {
    *out = new xr_perm{xroute::Permutation::identity(n)};
    return XR_OK;
  });
}

xr_status xr_perm_random(size_t n, uint64_t seed, xr_perm** out) {
  XR_REQUIRE(out);
  return guarded([&] {
    xroute::Rng rng(xroute::derive_seed(seed, "permutation"));
    *out = new xr_perm{xroute::Permutation::random(n, rng)};
    return XR_OK;
  });
}

xr_status xr_perm_text(const xr_perm* p, char** out) {
  XR_REQUIRE(p && out);
  return guarded([&] {
    *out = dup_string(xroute::permutation_text(p->p));
    return XR_OK;
  });
}

xr_status xr_perm_save(const xr_perm* p, const char* path) {
  XR_REQUIRE(p && path);
  return guarded([&] {
    xroute::write_file(path, xroute::permutation_text(p->p));
    return XR_OK;
  });
}

size_t xr_perm_size(const xr_perm* p) { return p ? p->p.size() : 0; }
void xr_perm_free(xr_perm* p) { delete p; }

void xr_route_options_init(xr_route_options* o) {
  if (!o) return;
  const xroute::RouteOptions def;
  o->epsilon = def.builder.epsilon;
  o->growth = def.builder.growth;
  o->k = def.builder.k;
  o->frontier_target = def.builder.frontier_target;
  o->capacity = def.builder.capacity;
  o->path_retries = def.builder.path_retries;
  o->beta = def.beta;
  o->max_resamples = def.max_resamples;
  o->seed = def.seed;
  o->lambda_hat = 0.0;
  o->direct_swaps = def.direct_swaps ? 1 : 0;
}

xr_status xr_route(const xr_graph* g, const xr_perm* p, const xr_route_options* o,
                   xr_report** out) {
  XR_REQUIRE(g && p && out);
  xr_route_options local;
  if (!o) {
    xr_route_options_init(&local);
    o = &local;
  }
  return guarded([&] {
    xroute::RouteOptions opt;
    opt.builder.epsilon = o->epsilon;
    opt.builder.growth = o->growth;
    opt.builder.k = o->k;
    opt.builder.frontier_target = o->frontier_target;
    opt.builder.capacity = o->capacity;
    opt.builder.path_retries = o->path_retries;
    opt.beta = o->beta;
    opt.max_resamples = o->max_resamples;
    opt.seed = o->seed;
    if (o->lambda_hat > 0.0) opt.lambda_hat = o->lambda_hat;
    opt.direct_swaps = o->direct_swaps != 0;
    *out = new xr_report{xroute::route(g->g, p->p, opt)};
    return XR_OK;
  });
}

size_t xr_report_rounds(const xr_report* r) { return r ? r->r.rounds : 0; }
int xr_report_verified(const xr_report* r) { return r && r->r.verified ? 1 : 0; }

xr_status xr_report_text(const xr_report* r, char** out) {
  XR_REQUIRE(r && out);
  return guarded([&] {
    *out = dup_string(xroute::report_text(r->r));
    return XR_OK;
  });
}

xr_status xr_report_schedule(const xr_report* r, xr_schedule** out) {
  XR_REQUIRE(r && out);
  return guarded([&] {
    *out = new xr_schedule{r->r.schedule, {}};
    return XR_OK;
  });
}

void xr_report_free(xr_report* r) { delete r; }

xr_status xr_schedule_parse(const char* text, xr_schedule** out) {
  XR_REQUIRE(text && out);
  return guarded([&] {
    auto h = xroute::parse_schedule_any(text);
    *out = new xr_schedule{std::move(h.schedule), std::move(h.graph_hash)};
    return XR_OK;
  });
}

xr_status xr_schedule_load(const char* path, xr_schedule** out) {
  XR_REQUIRE(path && out);
  return guarded([&] {
    auto h = xroute::parse_schedule_any(xroute::read_file(path));
    *out = new xr_schedule{std::move(h.schedule), std::move(h.graph_hash)};
    return XR_OK;
  });
}

xr_status xr_schedule_text(const xr_schedule* s, const xr_graph* g, xr_format format, char** out) {
  XR_REQUIRE(s && out);
  if (format == XR_FORMAT_JSON && !g) return fail(XR_E_ARGUMENT, "JSON schedules need the graph");
  return guarded([&] {
    *out = dup_string(format == XR_FORMAT_JSON
                          ? xroute::schedule_json(s->s, xroute::graph_hash(g->g))
                          : xroute::schedule_text(s->s));
    return XR_OK;
  });
}

xr_status xr_schedule_save(const xr_schedule* s, const xr_graph* g, xr_format format,
                           const char* path) {
  XR_REQUIRE(s && path);
  char* text = nullptr;
  const xr_status st = xr_schedule_text(s, g, format, &text);
  if (st != XR_OK) return st;
  const xr_status saved = guarded([&] {
    xroute::write_file(path, text);
    return XR_OK;
  });
  std::free(text);
  return saved;
}

size_t xr_schedule_rounds(const xr_schedule* s) { return s ? s->s.size() : 0; }
void xr_schedule_free(xr_schedule* s) { delete s; }

xr_status xr_verify(const xr_graph* g, const xr_perm* p, const xr_schedule* s, size_t* bad_round) {
  XR_REQUIRE(g && p && s);
  if (bad_round) *bad_round = 0;
  return guarded([&] {
    if (!s->graph_hash.empty() && s->graph_hash != xroute::graph_hash(g->g)) {
      return fail(XR_E_MISMATCH, "schedule was made for graph " + s->graph_hash + ", not " +
                                     xroute::graph_hash(g->g));
    }
    try {
      const auto res = xroute::verify_achieves(g->g, p->p, s->s);
      if (!res.ok) {
        return fail(XR_E_MISMATCH, "schedule of " + std::to_string(s->s.size()) +
                                       " rounds does not realize the permutation");
      }
    } catch (const xroute::ScheduleError& e) {
      if (bad_round) *bad_round = e.round();
      return fail(XR_E_MISMATCH, e.what());
    }
    return XR_OK;
  });
}

xr_status xr_rt_exact(const xr_graph* g, const xr_perm* p, size_t cap, size_t* out) {
  XR_REQUIRE(g && p && out);
  return guarded([&] {
    *out = xroute::rt_exact(g->g, p->p, cap);
    return XR_OK;
  });
}

xr_status xr_rt_lower_bound(const xr_graph* g, const xr_perm* p, size_t* out) {
  XR_REQUIRE(g && p && out);
  return guarded([&] {
    *out = xroute::rt_lower_bound(g->g, p->p);
    return XR_OK;
  });
}

xr_status xr_bench_run(const char* spec_json, unsigned jobs, int timing, char** csv) {
  XR_REQUIRE(spec_json && csv);
  return guarded([&] {
    const auto spec = xroute::parse_bench_spec(spec_json);
    const auto rows = xroute::bench_sweep(spec, jobs);
    std::ostringstream os;
    xroute::write_bench_csv(os, rows, timing != 0);
    *csv = dup_string(os.str());
    return XR_OK;
  });
}

}  // extern "C"
