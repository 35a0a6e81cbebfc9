#include <doctest.h>

#include <sstream>

#include "support/helpers.hpp"
#include "xroute/oracle.hpp"
#include "xroute/rng.hpp"

using namespace xroute;

namespace {

Graph path3() {
  std::vector<Edge> e{{0, 1}, {1, 2}};
  return Graph::irregular_fixture(3, e);
}

std::vector<unsigned> ref_perm(const Permutation& p) { return {p.map().begin(), p.map().end()}; }

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("all_matchings counts") {
  CHECK(all_matchings(gen_complete(2)).size() == 1);
  CHECK(all_matchings(path3()).size() == 2);
  CHECK(all_matchings(gen_cycle(4)).size() == 6);
  CHECK(all_matchings(gen_complete(4)).size() == 9);
  CHECK(all_matchings(gen_complete(6)).size() == ref::matchings_by_mask(testutil::ref_edges(gen_complete(6))).size());
}

TEST_CASE("rt_exact spot values") {
  CHECK(rt_exact(gen_cycle(5), Permutation::identity(5)) == 0);
  CHECK(rt_exact(gen_complete(2), Permutation(std::vector<Vertex>{1, 0})) == 1);
  const Permutation reversal(std::vector<Vertex>{2, 1, 0});
  CHECK(rt_exact(path3(), reversal) == 3);
  CHECK(ref::brute_rt(3, {{0, 1}, {1, 2}}, {2, 1, 0}) == 3);
}

TEST_CASE("rt_exact errors") {
  const Permutation reversal(std::vector<Vertex>{2, 1, 0});
  try {
    rt_exact(path3(), reversal, 2);
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ExceedsCap);
  }
  try {
    rt_exact(gen_cycle(12), Permutation::identity(12));
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooLarge);
  }
  CHECK_THROWS_AS(rt_exact(gen_cycle(5), Permutation::identity(4)), Error);
}

TEST_CASE("rt_exact agrees with the reference BFS") {
  Rng rng(6);
  for (const Graph& g : {gen_cycle(5), gen_complete(4), gen_cycle(6), gen_hypercube(3), gen_random_regular(8, 3, 2)}) {
    for (int trial = 0; trial < 6; ++trial) {
      const Permutation pi = Permutation::random(g.n(), rng);
      const std::size_t exact = rt_exact(g, pi);
      CHECK(static_cast<int>(exact) == ref::brute_rt(g.n(), testutil::ref_edges(g), ref_perm(pi)));
      CHECK(exact >= rt_lower_bound(g, pi));
    }
  }
}

TEST_CASE("rt_exact is invariant under relabelling") {
  Rng rng(21);
  const Graph g = gen_random_regular(7, 4, 3);
  for (int trial = 0; trial < 5; ++trial) {
    const Permutation pi = Permutation::random(7, rng);
    const Permutation relabel = Permutation::random(7, rng);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) edges.push_back(make_edge(relabel(e.u), relabel(e.v)));
    const Graph h = Graph::from_edge_list(7, edges);
    // pi' = relabel o pi o relabel^-1
    const Permutation moved = compose(relabel, compose(pi, relabel.inverse()));
    CHECK(rt_exact(g, pi) == rt_exact(h, moved));
  }
}

TEST_CASE("rt_lower_bound") {
  CHECK(rt_lower_bound(gen_cycle(6), Permutation::identity(6)) == 0);
  CHECK(rt_lower_bound(gen_complete(5), Permutation(std::vector<Vertex>{1, 2, 0, 3, 4})) == 1);
  CHECK(rt_lower_bound(gen_cycle(6), Permutation(std::vector<Vertex>{3, 4, 5, 0, 1, 2})) == 3);
  CHECK(rt_lower_bound(path3(), Permutation(std::vector<Vertex>{2, 1, 0})) == 2);
}

TEST_CASE("bench spec parsing") {
  const auto spec = parse_bench_spec(R"({"d": 16, "n": [128, 64], "seeds_per_n": 3, "epsilon": 0.125})");
  CHECK(spec.d == 16);
  CHECK(spec.n_values == std::vector<std::size_t>{128, 64});
  CHECK(spec.seeds == std::vector<std::uint64_t>{1, 2, 3});
  CHECK(spec.params.epsilon == 0.125);
  CHECK(parse_bench_spec(R"({"d": 4, "n": [], "seeds": [9, 4]})").seeds == std::vector<std::uint64_t>{9, 4});
  CHECK_THROWS_AS(parse_bench_spec("{\"n\": [1]}"), Error);
  CHECK_THROWS_AS(parse_bench_spec("not json"), Error);
}

TEST_CASE("bench sweep") {
  SUBCASE("single row") {
    const auto spec = parse_bench_spec(R"({"d": 16, "n": [64], "seeds": [1]})");
    const auto rows = bench_sweep(spec);
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].verified);
    CHECK(rows[0].n == 64);
    CHECK(rows[0].rounds >= rows[0].lower_bound);
    CHECK(rows[0].lambda_hat > 0.0);
  }
  SUBCASE("empty n list") {
    CHECK(bench_sweep(parse_bench_spec(R"({"d": 16, "n": [], "seeds": [1]})")).empty());
  }
  SUBCASE("order and determinism") {
    const auto spec = parse_bench_spec(R"({"d": 8, "n": [64, 32], "seeds": [3, 1]})");
    const auto rows = bench_sweep(spec, 3);
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].n == 32);
    CHECK(rows[0].seed == 1);
    CHECK(rows[1].seed == 3);
    CHECK(rows[3].n == 64);
    std::ostringstream a, b;
    write_bench_csv(a, rows, false);
    write_bench_csv(b, bench_sweep(spec, 1), false);
    CHECK(a.str() == b.str());
    CHECK(a.str().rfind("n,d,seed,lambda_hat,rounds,diameter,log2n_ratio,wall_ms,verified\n", 0) == 0);
  }
  SUBCASE("failures are recorded in the row") {
    const auto rows = bench_sweep(parse_bench_spec(R"({"d": 3, "n": [5], "seeds": [1]})"));
    REQUIRE(rows.size() == 1);
    CHECK_FALSE(rows[0].verified);
    CHECK(rows[0].error.find("InfeasibleDegree") == 0);
  }
}

}  // TEST_SUITE
