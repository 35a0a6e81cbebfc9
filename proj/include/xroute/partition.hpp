#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "xroute/graph.hpp"
#include "xroute/perm.hpp"

namespace xroute {

enum class Side : std::uint8_t { One = 1, Two = 2 };

inline Side other(Side s) { return s == Side::One ? Side::Two : Side::One; }

/// Two-colouring of the vertices.
struct Partition {
  std::vector<Side> side;

  std::size_t size() const { return side.size(); }
  std::vector<Vertex> members(Side s) const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

/// Minimum neighbours required on each side: ceil(beta * d).
std::size_t side_threshold(std::size_t d, double beta);

struct PairViolation {
  Vertex v;
  Vertex partner;
};

struct DegreeViolation {
  Vertex v;
  std::size_t on_one;
  std::size_t on_two;
};

struct PartitionAudit {
  std::size_t threshold = 0;
  std::vector<PairViolation> split_pairs;      // property (i)
  std::vector<DegreeViolation> low_degree;     // property (ii)

  bool ok() const { return split_pairs.empty() && low_degree.empty(); }
};

PartitionAudit check_partition(const Graph& g, const Involution& pi, const Partition& p,
                               double beta);

/// How a violated vertex v (lowest id first) is repaired.
enum class RepairRule {
  /// Re-toss the coin of every cycle meeting N(v) ∪ {v} (Moser-Tardos).
  MoserTardos,
  /// Recolour one cycle meeting N(v) from v's surplus side to its deficient
  /// side, picking the flip that pushes the fewest other vertices below
  /// threshold (seeded tie-break, occasional random pick).
  MinimalFlip,
};

/// Fair coin per cycle of pi, then repair steps until property (ii) holds.
/// Each step recolours whole cycles, so property (i) holds throughout.
/// Throws ResamplesExhausted after max_resamples steps; 0 means 100 n.
Partition find_partition(const Graph& g, const Involution& pi, double beta = 1.0 / 3.0,
                         std::size_t max_resamples = 0, std::uint64_t seed = 0,
                         RepairRule rule = RepairRule::MinimalFlip);

}  // namespace xroute
