#include "xroute/common.hpp"
#include "xroute/rng.hpp"

namespace xroute {

std::string to_string(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NotRegular: return "NotRegular";
    case Errc::NotSimple: return "NotSimple";
    case Errc::Disconnected: return "Disconnected";
    case Errc::InfeasibleDegree: return "InfeasibleDegree";
    case Errc::RetriesExhausted: return "RetriesExhausted";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::Parse: return "Parse";
    case Errc::Io: return "Io";
    case Errc::EdgeNotInGraph: return "EdgeNotInGraph";
    case Errc::VertexReused: return "VertexReused";
    case Errc::ResamplesExhausted: return "ResamplesExhausted";
    case Errc::FrontierStuck: return "FrontierStuck";
    case Errc::NoCrossingEdge: return "NoCrossingEdge";
    case Errc::BatchFailed: return "BatchFailed";
    case Errc::InvalidFamily: return "InvalidFamily";
    case Errc::PartitionFailed: return "PartitionFailed";
    case Errc::RoutingFailed: return "RoutingFailed";
    case Errc::ExceedsCap: return "ExceedsCap";
    case Errc::TooLarge: return "TooLarge";
  }
  return "Unknown";
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t root, std::string_view stream,
                          std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : stream) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return splitmix64(splitmix64(root ^ h) + index);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  std::uint64_t x = engine_();
  __uint128_t m = static_cast<__uint128_t>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = engine_();
      m = static_cast<__uint128_t>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64);
}

}  // namespace xroute
