#include <doctest.h>

#include <algorithm>

#include "xroute/partition.hpp"
#include "xroute/rng.hpp"

using namespace xroute;

namespace {

Partition from_bits(std::size_t n, unsigned bits) {
  Partition p;
  for (std::size_t v = 0; v < n; ++v) p.side.push_back(bits >> v & 1 ? Side::Two : Side::One);
  return p;
}

// Direct count, independent of check_partition.
bool brute_ok(const Graph& g, const Involution& pi, const Partition& p, std::size_t threshold) {
  for (Vertex v = 0; v < g.n(); ++v) {
    if (p.side[v] != p.side[pi(v)]) return false;
    std::size_t one = 0, two = 0;
    for (Vertex w = 0; w < g.n(); ++w) {
      if (!g.has_edge(v, w)) continue;
      (p.side[w] == Side::One ? one : two)++;
    }
    if (one < threshold || two < threshold) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("partition") {

TEST_CASE("side_threshold") {
  CHECK(side_threshold(32, 1.0 / 3.0) == 11);
  CHECK(side_threshold(3, 1.0 / 3.0) == 1);
  CHECK(side_threshold(7, 1.0 / 3.0) == 3);
  CHECK(side_threshold(2, 0.25) == 1);
}

TEST_CASE("C_4 with threshold 1 matches the exhaustive oracle") {
  const Graph c4 = gen_cycle(4);
  const Involution id(Permutation::identity(4));
  std::vector<Partition> valid;
  for (unsigned bits = 0; bits < 16; ++bits) {
    const Partition p = from_bits(4, bits);
    const bool ok = brute_ok(c4, id, p, 1);
    CHECK(check_partition(c4, id, p, 0.25).ok() == ok);
    if (ok) valid.push_back(p);
  }
  CHECK(valid.size() == 4);
  CHECK(check_partition(c4, id, from_bits(4, 0b1100), 0.25).ok());  // {0,1} | {2,3}
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Partition p = find_partition(c4, id, 0.25, 0, seed);
    CHECK(std::find(valid.begin(), valid.end(), p) != valid.end());
  }
}

TEST_CASE("alternating colouring of C_4 fails property (ii)") {
  const Graph c4 = gen_cycle(4);
  const Involution id(Permutation::identity(4));
  const auto audit = check_partition(c4, id, from_bits(4, 0b1010), 0.25);
  CHECK(audit.split_pairs.empty());
  REQUIRE(audit.low_degree.size() == 4);
  // Vertex 0 is on side One; both neighbours are on side Two.
  CHECK(audit.low_degree[0].on_one == 0);
  CHECK(audit.low_degree[0].on_two == 2);
}

TEST_CASE("split pair is reported") {
  const Graph k4 = gen_complete(4);
  const Involution pi(Permutation(std::vector<Vertex>{1, 0, 2, 3}));
  const auto audit = check_partition(k4, pi, from_bits(4, 0b0010), 0.25);
  REQUIRE(audit.split_pairs.size() == 1);
  CHECK(audit.split_pairs[0].v == 0);
  CHECK(audit.split_pairs[0].partner == 1);
}

TEST_CASE("K_8 with threshold 3") {
  const Graph k8 = gen_complete(8);
  const Involution id(Permutation::identity(8));
  CHECK(check_partition(k8, id, from_bits(8, 0b11110000), 1.0 / 3.0).ok());
  CHECK_FALSE(check_partition(k8, id, from_bits(8, 0b11100000), 1.0 / 3.0).ok());
  const Partition p = find_partition(k8, id, 1.0 / 3.0, 0, 3);
  CHECK(check_partition(k8, id, p, 1.0 / 3.0).ok());
  CHECK(p.members(Side::One).size() == 4);
}

TEST_CASE("impossible instance exhausts the budget") {
  // C_3 with 0 and 1 paired: vertex 2 sees both on one side.
  const Graph c3 = gen_cycle(3);
  const Involution pi(Permutation(std::vector<Vertex>{1, 0, 2}));
  for (auto rule : {RepairRule::MinimalFlip, RepairRule::MoserTardos}) {
    try {
      find_partition(c3, pi, 1.0 / 3.0, 50, 1, rule);
      FAIL("no throw");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::ResamplesExhausted);
    }
  }
}

TEST_CASE("argument checks") {
  const Graph k4 = gen_complete(4);
  const Involution id(Permutation::identity(4));
  CHECK_THROWS_AS(find_partition(k4, id, 0.5), Error);
  CHECK_THROWS_AS(find_partition(k4, id, 0.0), Error);
  CHECK_THROWS_AS(find_partition(k4, Involution(Permutation::identity(3))), Error);
}

TEST_CASE("random involutions on random graphs") {
  Rng rng(8);
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Graph g = gen_random_regular(256, 32, seed);
    const Involution pi = decompose_into_involutions(Permutation::random(256, rng)).tau;
    const Partition p = find_partition(g, pi, 1.0 / 3.0, 0, seed);
    CHECK(check_partition(g, pi, p, 1.0 / 3.0).ok());
    CHECK(brute_ok(g, pi, p, 11));
    CHECK(p == find_partition(g, pi, 1.0 / 3.0, 0, seed));
  }
}

TEST_CASE("Moser-Tardos rule on an easy instance") {
  const Graph g = gen_random_regular(128, 48, 2);
  const Involution pi = decompose_into_involutions(Permutation::identity(128)).sigma;
  const Partition p = find_partition(g, pi, 0.25, 0, 5, RepairRule::MoserTardos);
  CHECK(check_partition(g, pi, p, 0.25).ok());
}

}  // TEST_SUITE
