#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "xroute/common.hpp"

namespace xroute {

class Rng;

/// Bijection on {0, ..., n-1}; map()[v] is the image of v.
class Permutation {
 public:
  Permutation() = default;

  /// Throws InvalidArgument unless map is a bijection.
  explicit Permutation(std::vector<Vertex> map);

  static Permutation identity(std::size_t n);
  static Permutation random(std::size_t n, Rng& rng);

  std::size_t size() const { return map_.size(); }
  Vertex operator()(Vertex v) const { return map_[v]; }
  Vertex operator[](Vertex v) const { return map_[v]; }
  std::span<const Vertex> map() const { return map_; }

  bool is_identity() const;
  bool is_involution() const;
  Permutation inverse() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> map_;
};

/// A permutation of order at most two.
class Involution {
 public:
  Involution() = default;
  /// Throws InvalidArgument if p∘p is not the identity.
  explicit Involution(Permutation p);

  const Permutation& permutation() const { return perm_; }
  std::size_t size() const { return perm_.size(); }
  Vertex operator()(Vertex v) const { return perm_(v); }

  /// Transposed pairs {v, π(v)} with v < π(v), ascending by v.
  std::vector<std::pair<Vertex, Vertex>> pairs() const;

  friend bool operator==(const Involution&, const Involution&) = default;

 private:
  Permutation perm_;
};

/// result[v] = p[q[v]]: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);

using Cycle = std::vector<Vertex>;

/// Disjoint cycles, each starting at its minimum, sorted by that minimum;
/// fixed points appear as length-1 cycles.
std::vector<Cycle> cycle_decomposition(const Permutation& p);

struct InvolutionPair {
  Involution sigma;  // applied first
  Involution tau;    // applied second; compose(tau, sigma) == p
};

InvolutionPair decompose_into_involutions(const Permutation& p);

}  // namespace xroute
