#include "xroute/perm.hpp"

#include <numeric>
#include <string>

#include "xroute/rng.hpp"

namespace xroute {

Permutation::Permutation(std::vector<Vertex> map) : map_(std::move(map)) {
  std::vector<char> seen(map_.size(), 0);
  for (std::size_t v = 0; v < map_.size(); ++v) {
    const Vertex image = map_[v];
    if (image >= map_.size() || seen[image]) {
      throw Error(Errc::InvalidArgument,
                  "not a bijection: position " + std::to_string(v) + " maps to " +
                      std::to_string(image));
    }
    seen[image] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  return Permutation(std::move(map));
}

Permutation Permutation::random(std::size_t n, Rng& rng) {
  std::vector<Vertex> map(n);
  std::iota(map.begin(), map.end(), Vertex{0});
  rng.shuffle(std::span<Vertex>(map));
  return Permutation(std::move(map));
}

bool Permutation::is_identity() const {
  for (std::size_t v = 0; v < map_.size(); ++v) {
    if (map_[v] != v) return false;
  }
  return true;
}

bool Permutation::is_involution() const {
  for (std::size_t v = 0; v < map_.size(); ++v) {
    if (map_[map_[v]] != v) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> inv(map_.size());
  for (std::size_t v = 0; v < map_.size(); ++v) inv[map_[v]] = static_cast<Vertex>(v);
  return Permutation(std::move(inv));
}

Involution::Involution(Permutation p) : perm_(std::move(p)) {
  if (!perm_.is_involution()) {
    throw Error(Errc::InvalidArgument, "permutation is not an involution");
  }
}

std::vector<std::pair<Vertex, Vertex>> Involution::pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < perm_.size(); ++v) {
    if (v < perm_(v)) out.emplace_back(v, perm_(v));
  }
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(Errc::LengthMismatch, "compose: sizes " + std::to_string(p.size()) +
                                          " and " + std::to_string(q.size()));
  }
  std::vector<Vertex> out(p.size());
  for (Vertex v = 0; v < p.size(); ++v) out[v] = p(q(v));
  return Permutation(std::move(out));
}

std::vector<Cycle> cycle_decomposition(const Permutation& p) {
  std::vector<Cycle> cycles;
  std::vector<char> seen(p.size(), 0);
  for (Vertex start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    Cycle c;
    for (Vertex v = start; !seen[v]; v = p(v)) {
      seen[v] = 1;
      c.push_back(v);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}

InvolutionPair decompose_into_involutions(const Permutation& p) {
  // Reflections of each cycle (c_0 ... c_{m-1}): sigma sends c_i to c_{-i},
  // tau sends c_i to c_{1-i}, so tau(sigma(c_i)) = c_{i+1}.
  std::vector<Vertex> sigma(p.size()), tau(p.size());
  for (const Cycle& c : cycle_decomposition(p)) {
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
      sigma[c[i]] = c[(m - i) % m];
      tau[c[i]] = c[(m + 1 - i) % m];
    }
  }
  return {Involution(Permutation(std::move(sigma))), Involution(Permutation(std::move(tau)))};
}

}  // namespace xroute
