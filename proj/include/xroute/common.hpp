#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace xroute {

using Vertex = std::uint32_t;

/// Undirected edge stored canonically with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e);

enum class Errc {
  InvalidArgument,
  NotRegular,
  NotSimple,
  Disconnected,
  InfeasibleDegree,
  RetriesExhausted,
  LengthMismatch,
  Parse,
  Io,
  EdgeNotInGraph,
  VertexReused,
  ResamplesExhausted,
  FrontierStuck,
  NoCrossingEdge,
  BatchFailed,
  InvalidFamily,
  PartitionFailed,
  RoutingFailed,
  ExceedsCap,
  TooLarge,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace xroute
