#include "xroute/paths.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <sstream>

namespace xroute {

ResolvedParams resolve(const BuilderParams& params, std::size_t n, std::size_t d,
                       double lambda_hat) {
  if (!(params.epsilon > 0.0 && params.epsilon <= 1.0)) {
    throw Error(Errc::InvalidArgument, "epsilon must lie in (0, 1]");
  }
  ResolvedParams r;
  r.epsilon = params.epsilon;
  const auto eps_n = static_cast<std::size_t>(std::floor(params.epsilon * static_cast<double>(n) + 1e-9));
  r.batch_limit = std::max<std::size_t>(1, eps_n);
  if (params.frontier_target) {
    r.frontier_target = params.frontier_target;
  } else {
    // Two frontiers of size t share about t^2 d / n edges; keep that near 4
    // so the middle edge exists even when epsilon n is tiny.
    const double floor_size = d ? std::ceil(std::sqrt(4.0 * static_cast<double>(n) / static_cast<double>(d))) : 1.0;
    r.frontier_target = std::max(r.batch_limit, static_cast<std::size_t>(floor_size));
  }
  if (params.growth) {
    r.growth = params.growth;
  } else if (lambda_hat > 0.0) {
    r.growth = static_cast<std::size_t>(
        std::max(2.0, std::floor(static_cast<double>(d) / lambda_hat)));
  } else {
    r.growth = 2;
  }
  if (r.growth < 2) throw Error(Errc::InvalidArgument, "growth must be at least 2");
  r.k = params.k ? params.k : layers_for(r.frontier_target, r.growth);
  r.capacity = params.capacity ? params.capacity
                               : std::max<std::size_t>(2, static_cast<std::size_t>(std::floor(
                                                              3.0 * params.epsilon * static_cast<double>(n) + 1e-9)));
  r.path_retries = std::max<std::size_t>(1, params.path_retries);
  r.randomize = params.randomize;
  r.strict_frontiers = params.strict_frontiers;
  return r;
}

std::size_t layers_for(std::size_t target, std::size_t growth) {
  std::size_t k = 1;
  std::size_t reach = growth;
  while (reach < target) {
    reach *= growth;
    ++k;
  }
  return k;
}

std::vector<LayerSides> plan_layers(Side start_side, std::size_t k) {
  std::vector<LayerSides> out;
  out.reserve(k);
  for (std::size_t z = 1; z <= k; ++z) {
    const Side a = z % 2 == 1 ? start_side : other(start_side);
    out.push_back({a, other(a)});
  }
  return out;
}

LayerState::LayerState(std::size_t n, std::size_t k, std::size_t capacity)
    : capacity_(capacity), retained_(k), used_b_(k, std::vector<char>(n, 0)) {}

bool LayerState::has_room() const {
  return std::all_of(retained_.begin(), retained_.end(),
                     [&](const auto& layer) { return layer.size() + 2 <= capacity_; });
}

void LayerState::commit(const std::vector<Vertex>& path) {
  const std::size_t k = retained_.size();
  const std::size_t len = path.size() - 1;
  for (std::size_t z = 1; z <= k; ++z) {
    // z-th edge runs v_{z-1} -> v_z; the (len+1-z)-th runs v'_z -> v'_{z-1}.
    const Vertex a1 = path[z - 1], b1 = path[z];
    const Vertex b2 = path[len - z], a2 = path[len + 1 - z];
    retained_[z - 1].emplace_back(a1, b1);
    retained_[z - 1].emplace_back(a2, b2);
    used_b_[z - 1][b1] = 1;
    used_b_[z - 1][b2] = 1;
  }
}

FrontierStuck::FrontierStuck(std::size_t layer, std::size_t achieved)
    : Error(Errc::FrontierStuck, "layer " + std::to_string(layer) + " reached size " +
                                     std::to_string(achieved)),
      layer_(layer),
      achieved_(achieved) {}

FrontierPair grow_frontiers(const Graph& g, const Partition& partition,
                            const std::vector<LayerSides>& layers, const LayerState& state,
                            Vertex w, Vertex w_prime, const ResolvedParams& params, Rng& rng) {
  if (w == w_prime) throw Error(Errc::InvalidArgument, "path endpoints must differ");
  if (layers.empty() || layers.size() != state.layers()) {
    throw Error(Errc::InvalidArgument, "layer plan does not match layer state");
  }
  if (partition.side[w] != layers[0].a || partition.side[w_prime] != layers[0].a) {
    throw Error(Errc::InvalidArgument, "path endpoints must lie on the starting side");
  }

  FrontierPair f;
  f.s.push_back({{w}, {0}});
  f.s_prime.push_back({{w_prime}, {0}});

  // Tentative B_z vertices of this path, stamped by layer.
  std::vector<std::size_t> taken(g.n(), 0);
  std::vector<Vertex> scan;
  std::vector<std::uint32_t> order;

  for (std::size_t z = 1; z <= layers.size(); ++z) {
    const Side b_side = layers[z - 1].b;
    for (auto* frontier : {&f.s, &f.s_prime}) {
      const FrontierLayer& prev = frontier->back();
      const std::size_t target = std::min(params.frontier_target, prev.vertices.size() * params.growth);
      FrontierLayer next;

      order.resize(prev.vertices.size());
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(),
                [&](auto x, auto y) { return prev.vertices[x] < prev.vertices[y]; });

      for (std::uint32_t idx : order) {
        if (next.vertices.size() >= target) break;
        auto nb = g.neighbors(prev.vertices[idx]);
        scan.assign(nb.begin(), nb.end());
        if (params.randomize) rng.shuffle(std::span<Vertex>(scan));
        std::size_t fanout = 0;
        for (Vertex b : scan) {
          if (next.vertices.size() >= target || fanout >= params.growth) break;
          if (partition.side[b] != b_side || state.b_used(z, b) || taken[b] == z) continue;
          taken[b] = z;
          next.vertices.push_back(b);
          next.parent.push_back(idx);
          ++fanout;
        }
      }
      if (next.vertices.empty() ||
          (params.strict_frontiers && next.vertices.size() < target)) {
        throw FrontierStuck(z, next.vertices.size());
      }
      frontier->push_back(std::move(next));
    }
  }
  return f;
}

Edge connect_frontiers(const Graph& g, const FrontierPair& f) {
  const auto& last = f.s.back().vertices;
  const auto& last_prime = f.s_prime.back().vertices;
  std::vector<char> in_prime(g.n(), 0);
  for (Vertex v : last_prime) in_prime[v] = 1;
  std::optional<Edge> best;
  for (Vertex a : last) {
    for (Vertex b : g.neighbors(a)) {
      if (!in_prime[b]) continue;
      const Edge e = make_edge(a, b);
      if (!best || e < *best) best = e;
    }
  }
  if (!best) {
    throw Error(Errc::NoCrossingEdge, "no edge between frontiers of sizes " +
                                          std::to_string(last.size()) + " and " +
                                          std::to_string(last_prime.size()));
  }
  return *best;
}

std::vector<Vertex> extract_path(const FrontierPair& f, const Edge& crossing) {
  auto index_in = [](const FrontierLayer& layer, Vertex v) -> std::optional<std::uint32_t> {
    auto it = std::find(layer.vertices.begin(), layer.vertices.end(), v);
    if (it == layer.vertices.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - layer.vertices.begin());
  };
  auto i = index_in(f.s.back(), crossing.u);
  auto j = index_in(f.s_prime.back(), crossing.v);
  if (!i || !j) {
    i = index_in(f.s.back(), crossing.v);
    j = index_in(f.s_prime.back(), crossing.u);
  }
  if (!i || !j) {
    throw Error(Errc::InvalidArgument, "crossing edge " + to_string(crossing) +
                                           " does not join the two frontiers");
  }

  const std::size_t k = f.s.size() - 1;
  std::vector<Vertex> path(2 * k + 2);
  std::uint32_t a = *i, b = *j;
  for (std::size_t z = k + 1; z-- > 0;) {
    path[z] = f.s[z].vertices[a];
    path[2 * k + 1 - z] = f.s_prime[z].vertices[b];
    a = f.s[z].parent[a];
    b = f.s_prime[z].parent[b];
  }
  return path;
}

Matching SwitchablePathFamily::slice(std::size_t z) const {
  const std::size_t len = length();
  std::vector<Edge> edges;
  for (const auto& p : paths) {
    edges.push_back(make_edge(p[z - 1], p[z]));
    edges.push_back(make_edge(p[len - z], p[len + 1 - z]));
  }
  return Matching::from_pairs(std::move(edges));
}

Matching SwitchablePathFamily::middle() const {
  std::vector<Edge> edges;
  for (const auto& p : paths) edges.push_back(make_edge(p[k], p[k + 1]));
  return Matching::from_pairs(std::move(edges));
}

namespace {

std::optional<Vertex> reused_vertex(const Matching& m) {
  std::vector<Vertex> ends;
  for (const Edge& e : m.edges) {
    ends.push_back(e.u);
    ends.push_back(e.v);
  }
  std::sort(ends.begin(), ends.end());
  auto dup = std::adjacent_find(ends.begin(), ends.end());
  if (dup == ends.end()) return std::nullopt;
  return *dup;
}

FamilyAudit audit_family(const Graph* g, const SwitchablePathFamily& fam) {
  FamilyAudit audit;
  auto add = [&](FamilyViolation::Kind kind, std::size_t index, std::string detail) {
    audit.violations.push_back({kind, index, std::move(detail)});
  };
  const std::size_t len = fam.length();
  bool lengths_ok = true;
  std::vector<Vertex> ends;
  for (std::size_t i = 0; i < fam.paths.size(); ++i) {
    const auto& p = fam.paths[i];
    if (p.size() != len + 1) {
      lengths_ok = false;
      add(FamilyViolation::Kind::Length, i,
          "path has " + std::to_string(p.empty() ? 0 : p.size() - 1) + " edges, expected " +
              std::to_string(len));
      continue;
    }
    ends.push_back(p.front());
    ends.push_back(p.back());
    for (std::size_t j = 0; j + 1 < p.size(); ++j) {
      const bool bad = p[j] == p[j + 1] || (g && !g->has_edge(p[j], p[j + 1]));
      if (bad) {
        add(FamilyViolation::Kind::NotAdjacent, i,
            "edge " + std::to_string(j + 1) + " (" + std::to_string(p[j]) + "," +
                std::to_string(p[j + 1]) + ") is not a graph edge");
      }
    }
  }
  std::sort(ends.begin(), ends.end());
  if (auto dup = std::adjacent_find(ends.begin(), ends.end()); dup != ends.end()) {
    add(FamilyViolation::Kind::EndpointReuse, 0, "endpoint " + std::to_string(*dup) + " is shared");
  }
  if (!lengths_ok) return audit;
  for (std::size_t z = 1; z <= fam.k; ++z) {
    if (auto v = reused_vertex(fam.slice(z))) {
      add(FamilyViolation::Kind::SliceNotMatching, z,
          "slice " + std::to_string(z) + " reuses vertex " + std::to_string(*v));
    }
  }
  if (auto v = reused_vertex(fam.middle())) {
    add(FamilyViolation::Kind::MiddleNotMatching, fam.k + 1,
        "middle edges reuse vertex " + std::to_string(*v));
  }
  return audit;
}

}  // namespace

FamilyAudit verify_switchable(const Graph& g, const SwitchablePathFamily& fam) {
  return audit_family(&g, fam);
}

Schedule family_schedule(const SwitchablePathFamily& fam) {
  Schedule s;
  if (fam.paths.empty()) return s;
  const FamilyAudit audit = audit_family(nullptr, fam);
  if (!audit.ok()) throw Error(Errc::InvalidFamily, audit.violations.front().detail);
  for (std::size_t z = 1; z <= fam.k; ++z) s.rounds.push_back(fam.slice(z));
  s.rounds.push_back(fam.middle());
  for (std::size_t z = fam.k; z >= 1; --z) s.rounds.push_back(fam.slice(z));
  return s;
}

namespace {

class BatchFailed : public Error {
 public:
  explicit BatchFailed(std::size_t pairs)
      : Error(Errc::BatchFailed, "no path could be built for any of " +
                                     std::to_string(pairs) + " pairs") {}
};

}  // namespace

FamilyBuild build_family(const Graph& g, const Partition& partition,
                         const std::vector<std::pair<Vertex, Vertex>>& pairs,
                         const ResolvedParams& params, std::uint64_t seed) {
  FamilyBuild out;
  out.family.k = params.k;
  if (pairs.empty()) return out;

  const Side start = partition.side.at(pairs.front().first);
  std::vector<char> endpoint(g.n(), 0);
  for (const auto& [w, w_prime] : pairs) {
    if (partition.side.at(w) != start || partition.side.at(w_prime) != start) {
      throw Error(Errc::InvalidArgument, "batch pairs must lie on one side");
    }
    if (w == w_prime || endpoint[w] || endpoint[w_prime]) {
      throw Error(Errc::InvalidArgument, "batch endpoints must be distinct");
    }
    endpoint[w] = endpoint[w_prime] = 1;
  }

  const auto layers = plan_layers(start, params.k);
  LayerState state(g.n(), params.k, params.capacity);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto [w, w_prime] = pairs[i];
    bool done = false;
    for (std::size_t attempt = 0; attempt < params.path_retries && state.has_room(); ++attempt) {
      Rng rng(derive_seed(derive_seed(seed, "path", i), "attempt", attempt));
      try {
        const FrontierPair f = grow_frontiers(g, partition, layers, state, w, w_prime, params, rng);
        auto path = extract_path(f, connect_frontiers(g, f));
        state.commit(path);
        out.family.paths.push_back(std::move(path));
        done = true;
        break;
      } catch (const Error& e) {
        if (e.code() != Errc::FrontierStuck && e.code() != Errc::NoCrossingEdge) throw;
      }
    }
    (done ? out.routed : out.residual).push_back(pairs[i]);
  }
  if (out.routed.empty()) throw BatchFailed(pairs.size());
  return out;
}

std::string family_dump(const SwitchablePathFamily& fam) {
  std::ostringstream os;
  os << "k " << fam.k << "\n";
  for (std::size_t i = 0; i < fam.paths.size(); ++i) {
    os << "path " << i + 1 << ":";
    for (Vertex v : fam.paths[i]) os << ' ' << v;
    os << '\n';
  }
  auto put = [&](const std::string& name, const Matching& m) {
    os << name << ':';
    for (const Edge& e : m.edges) os << ' ' << e.u << '-' << e.v;
    os << '\n';
  };
  if (!fam.paths.empty()) {
    for (std::size_t z = 1; z <= fam.k; ++z) put("slice " + std::to_string(z), fam.slice(z));
    put("middle", fam.middle());
  }
  return os.str();
}

NonblockingReport nonblocking_hypothesis_check(const Graph& g, const std::vector<Vertex>& a_side,
                                               const std::vector<Vertex>& b_side,
                                               std::size_t dd, std::size_t a, CheckMode mode,
                                               std::size_t samples, std::uint64_t seed) {
  NonblockingReport report;
  const std::size_t max_size = std::min(2 * a, a_side.size());
  if (max_size == 0) return report;
  if (mode == CheckMode::Exhaustive && a_side.size() > 20) {
    throw Error(Errc::TooLarge, "exhaustive mode needs |A| <= 20");
  }

  std::vector<char> in_b(g.n(), 0);
  for (Vertex v : b_side) in_b.at(v) = 1;
  std::vector<std::size_t> stamp(g.n(), 0);
  std::size_t epoch = 0;

  auto check = [&](const std::vector<Vertex>& x) {
    ++epoch;
    ++report.subsets_checked;
    std::size_t reached = 0;
    for (Vertex u : x) {
      for (Vertex w : g.neighbors(u)) {
        if (in_b[w] && stamp[w] != epoch) {
          stamp[w] = epoch;
          ++reached;
        }
      }
    }
    if (reached < 2 * dd * x.size()) {
      report.ok = false;
      report.witness = x;
      report.witness_neighbourhood = reached;
      return false;
    }
    return true;
  };

  std::vector<Vertex> x;
  if (mode == CheckMode::Exhaustive) {
    const std::uint32_t limit = std::uint32_t{1} << a_side.size();
    for (std::uint32_t mask = 1; mask < limit; ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > max_size) continue;
      x.clear();
      for (std::size_t i = 0; i < a_side.size(); ++i) {
        if (mask & (std::uint32_t{1} << i)) x.push_back(a_side[i]);
      }
      if (!check(x)) return report;
    }
    return report;
  }

  Rng rng(derive_seed(seed, "nonblocking-sample"));
  std::vector<Vertex> pool(a_side);
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t size = 1 + rng.below(max_size);
    for (std::size_t i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.below(pool.size() - i)]);
    x.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    if (!check(x)) return report;
  }
  return report;
}

}  // namespace xroute
