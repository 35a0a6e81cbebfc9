#include "xroute/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>

#include "xroute/rng.hpp"

namespace xroute {

namespace {

constexpr std::size_t kGeneratorAttempts = 1000;

void check_vertex_range(std::size_t n, const Edge& e) {
  if (e.u >= n || e.v >= n) {
    throw Error(Errc::InvalidArgument,
                "edge " + to_string(e) + " out of range for n=" + std::to_string(n));
  }
}

}  // namespace

bool is_connected(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) return true;
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : edges) {
    auto a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges, bool require_regular) {
  if (n == 0) throw Error(Errc::InvalidArgument, "graph needs at least one vertex");
  if (n > std::numeric_limits<Vertex>::max()) {
    throw Error(Errc::InvalidArgument, "too many vertices");
  }
  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (const Edge& raw : edges) {
    check_vertex_range(n, raw);
    if (raw.u == raw.v) {
      throw Error(Errc::NotSimple, "loop at vertex " + std::to_string(raw.u));
    }
    canon.push_back(make_edge(raw.u, raw.v));
  }
  std::sort(canon.begin(), canon.end());
  auto dup = std::adjacent_find(canon.begin(), canon.end());
  if (dup != canon.end()) {
    throw Error(Errc::NotSimple, "duplicate edge " + to_string(*dup));
  }

  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : canon) {
    ++deg[e.u];
    ++deg[e.v];
  }
  const bool regular = std::all_of(deg.begin(), deg.end(),
                                   [&](std::size_t x) { return x == deg[0]; });
  if (require_regular && !regular) {
    auto bad = std::find_if(deg.begin(), deg.end(),
                            [&](std::size_t x) { return x != deg[0]; });
    throw Error(Errc::NotRegular,
                "vertex " + std::to_string(bad - deg.begin()) + " has degree " +
                    std::to_string(*bad) + ", vertex 0 has degree " + std::to_string(deg[0]));
  }
  if (!is_connected(n, canon)) {
    throw Error(Errc::Disconnected, "graph on " + std::to_string(n) + " vertices is not connected");
  }

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
  g.adjacency_.resize(g.offsets_[n]);
  std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : canon) {
    g.adjacency_[fill[e.u]++] = e.v;
    g.adjacency_[fill[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::sort(g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]),
              g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]));
  }
  g.edges_ = std::move(canon);
  g.regular_ = regular;
  g.degree_ = regular ? deg[0] : 0;
  return g;
}

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  return build(n, edges, true);
}

Graph Graph::irregular_fixture(std::size_t n, std::span<const Edge> edges) {
  return build(n, edges, false);
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= n() || b >= n()) return false;
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

Graph gen_random_regular(std::size_t n, std::size_t d, std::uint64_t seed) {
  if (d == 0 || d >= n || (n * d) % 2 != 0) {
    throw Error(Errc::InfeasibleDegree,
                "no simple connected " + std::to_string(d) + "-regular graph on " +
                    std::to_string(n) + " vertices");
  }
  Rng rng(derive_seed(seed, "gen-random-regular"));
  std::vector<std::vector<Vertex>> adj(n);
  std::vector<Vertex> points;
  std::vector<Edge> edges;

  auto adjacent = [&](Vertex a, Vertex b) {
    return std::find(adj[a].begin(), adj[a].end(), b) != adj[a].end();
  };
  // A pairing can only be completed if some legal pair remains among the
  // unmatched points.
  auto any_legal_pair = [&]() {
    std::vector<Vertex> distinct(points);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
      for (std::size_t j = i + 1; j < distinct.size(); ++j) {
        if (!adjacent(distinct[i], distinct[j])) return true;
      }
    }
    return false;
  };

  for (std::size_t attempt = 0; attempt < kGeneratorAttempts; ++attempt) {
    for (auto& a : adj) a.clear();
    edges.clear();
    points.clear();
    for (Vertex v = 0; v < n; ++v) points.insert(points.end(), d, v);

    bool stuck = false;
    std::size_t rejections = 0;
    while (!points.empty()) {
      std::size_t i = rng.below(points.size());
      std::size_t j = rng.below(points.size() - 1);
      if (j >= i) ++j;
      Vertex a = points[i], b = points[j];
      if (a == b || adjacent(a, b)) {
        if (++rejections > 4 * points.size() + 64) {
          if (!any_legal_pair()) {
            stuck = true;
            break;
          }
          rejections = 0;
        }
        continue;
      }
      rejections = 0;
      adj[a].push_back(b);
      adj[b].push_back(a);
      edges.push_back(make_edge(a, b));
      if (i < j) std::swap(i, j);
      points[i] = points.back();
      points.pop_back();
      points[j] = points.back();
      points.pop_back();
    }
    if (stuck || !is_connected(n, edges)) continue;
    return Graph::from_edge_list(n, edges);
  }
  throw Error(Errc::RetriesExhausted,
              "random regular generation failed after " +
                  std::to_string(kGeneratorAttempts) + " attempts");
}

Graph gen_cycle(std::size_t n) {
  if (n < 3) throw Error(Errc::InvalidArgument, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) {
    edges.push_back(make_edge(static_cast<Vertex>(v), static_cast<Vertex>((v + 1) % n)));
  }
  return Graph::from_edge_list(n, edges);
}

Graph gen_complete(std::size_t n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph::from_edge_list(n, edges);
}

Graph gen_hypercube(std::size_t dim) {
  if (dim < 1 || dim > 24) throw Error(Errc::InvalidArgument, "hypercube needs 1 <= dim <= 24");
  const std::size_t n = std::size_t{1} << dim;
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (std::size_t bit = 0; bit < dim; ++bit) {
      Vertex w = v ^ (Vertex{1} << bit);
      if (v < w) edges.push_back({v, w});
    }
  }
  return Graph::from_edge_list(n, edges);
}

SpectralProfile estimate_lambda(const Graph& g, double tol, std::size_t max_iter,
                                std::uint64_t seed) {
  const std::size_t n = g.n();
  SpectralProfile out;
  out.tol = tol;
  if (max_iter == 0) {
    max_iter = static_cast<std::size_t>(
        std::ceil(10.0 * static_cast<double>(n) * std::log(std::max<double>(static_cast<double>(n), 2.0))));
  }
  if (n < 2) {
    out.converged = true;
    return out;
  }

  auto project = [n](std::vector<double>& x) {
    double mean = 0.0;
    for (double v : x) mean += v;
    mean /= static_cast<double>(n);
    for (double& v : x) v -= mean;
  };
  auto norm = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  };

  Rng rng(derive_seed(seed, "estimate-lambda"));
  std::vector<double> x(n), y(n);
  for (double& v : x) v = rng.unit() - 0.5;
  project(x);
  double nx = norm(x);
  if (nx == 0.0) {
    x[0] = 1.0;
    project(x);
    nx = norm(x);
  }
  for (double& v : x) v /= nx;

  double prev = -1.0;
  for (std::size_t it = 1; it <= max_iter; ++it) {
    for (Vertex v = 0; v < n; ++v) {
      double s = 0.0;
      for (Vertex w : g.neighbors(v)) s += x[w];
      y[v] = s;
    }
    project(y);
    const double est = norm(y);
    out.lambda_hat = est;
    out.iterations = it;
    if (est == 0.0) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / est;
    if (std::abs(est - prev) < tol) {
      out.converged = true;
      break;
    }
    prev = est;
  }
  if (g.regular()) {
    out.lambda_hat = std::min(out.lambda_hat, static_cast<double>(g.degree()));
  }
  return out;
}

double MixingSample::deviation() const {
  return std::abs(static_cast<double>(e_count) - main_term);
}

MixingSample mixing_discrepancy(const Graph& g, double lambda,
                                std::span<const Vertex> s, std::span<const Vertex> t) {
  const std::size_t n = g.n();
  std::vector<char> in_s(n, 0), in_t(n, 0);
  for (Vertex v : s) in_s.at(v) = 1;
  for (Vertex v : t) in_t.at(v) = 1;
  const auto size_s = static_cast<std::size_t>(std::count(in_s.begin(), in_s.end(), 1));
  const auto size_t_ = static_cast<std::size_t>(std::count(in_t.begin(), in_t.end(), 1));

  MixingSample out;
  for (Vertex u = 0; u < n; ++u) {
    if (!in_s[u]) continue;
    for (Vertex w : g.neighbors(u)) out.e_count += in_t[w] ? 1 : 0;
  }
  const double st = static_cast<double>(size_s) * static_cast<double>(size_t_);
  out.main_term = st * static_cast<double>(g.degree()) / static_cast<double>(n);
  out.slack = lambda * std::sqrt(st) - out.deviation();
  return out;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.n(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop();
    for (Vertex w : g.neighbors(v)) {
      if (dist[w] == std::numeric_limits<std::size_t>::max()) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

std::size_t diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex v = 0; v < g.n(); ++v) {
    for (std::size_t d : bfs_distances(g, v)) best = std::max(best, d);
  }
  return best;
}

}  // namespace xroute
