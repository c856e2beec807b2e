#include <doctest.h>

#include <random>

#include "hprop/error.hpp"
#include "hprop/graphon.hpp"
#include "hprop/json_io.hpp"
#include "hprop/presets.hpp"

using hprop::ErrorKind;
using hprop::Rational;
using hprop::RationalRows;

namespace {

std::vector<Rational> parts(std::initializer_list<const char*> items) {
  std::vector<Rational> out;
  for (const char* s : items) out.push_back(hprop::parse_rational(s));
  return out;
}

ErrorKind kind_of(const std::vector<Rational>& partition, const RationalRows& values) {
  try {
    hprop::validate_graphon(partition, values);
  } catch (const hprop::Error& e) {
    return e.kind();
  }
  FAIL("graphon was accepted");
  return ErrorKind::MalformedInput;
}

hprop::SkeletonGraph skeleton(int q, std::vector<int> loops, std::vector<std::pair<int, int>> edges) {
  hprop::SkeletonGraph s;
  s.node_count = q;
  s.self_loops = std::move(loops);
  s.edges = std::move(edges);
  return s;
}

}  // namespace

TEST_CASE("validate_graphon accepts the borderline and constant graphons") {
  auto g = hprop::validate_graphon(parts({"0", "1/2", "1"}), RationalRows{{Rational(0), Rational(1, 2)},
                                                                          {Rational(1, 2), Rational(1, 2)}});
  CHECK(g.blocks() == 2);
  CHECK(g.value(0, 1) == Rational(1, 2));
  auto c = hprop::validate_graphon(parts({"0", "1"}), RationalRows{{Rational(1)}});
  CHECK(c.blocks() == 1);
}

TEST_CASE("validate_graphon names the violated invariant") {
  const Rational h(1, 2);
  const RationalRows three{{0, h, 0}, {h, 0, h}, {0, h, h}};
  CHECK(kind_of(parts({"0", "0.6", "0.5", "1"}), three) == ErrorKind::NonMonotonePartition);
  CHECK(kind_of(parts({"0", "1/2", "1/2", "1"}), three) == ErrorKind::NonMonotonePartition);
  CHECK(kind_of(parts({"1/10", "1/2", "1"}), {{0, h}, {h, h}}) == ErrorKind::EndpointViolation);
  CHECK(kind_of(parts({"0", "1/2", "9/10"}), {{0, h}, {h, h}}) == ErrorKind::EndpointViolation);
  CHECK(kind_of(parts({"0"}), {}) == ErrorKind::EndpointViolation);
  CHECK(kind_of(parts({"0", "1/2", "1"}), {{0, h}, {Rational(1, 3), h}}) == ErrorKind::AsymmetricValues);
  CHECK(kind_of(parts({"0", "1/2", "1"}), {{0, h}, {h, Rational(3, 2)}}) == ErrorKind::ValueOutOfRange);
  CHECK(kind_of(parts({"0", "1/2", "1"}), {{0, h}, {h, Rational(-1, 2)}}) == ErrorKind::ValueOutOfRange);
  CHECK(kind_of(parts({"0", "1/2", "1"}), {{0, h, 0}, {h, h, 0}}) == ErrorKind::DimensionMismatch);
  CHECK(kind_of(parts({"0", "1/2", "1"}), {{0}}) == ErrorKind::DimensionMismatch);
}

TEST_CASE("concentration vector") {
  auto line4 = hprop::four_block_line_graphon();
  auto x = hprop::concentration_vector(line4);
  REQUIRE(x.size() == 4);
  CHECK(x(0) == Rational(1, 5));
  CHECK(x(1) == Rational(3, 10));
  CHECK(x(2) == Rational(1, 4));
  CHECK(x(3) == Rational(1, 4));

  auto b = hprop::concentration_vector(hprop::borderline_graphon());
  CHECK(b(0) == Rational(1, 2));
  CHECK(b(1) == Rational(1, 2));

  auto one = hprop::concentration_vector(hprop::validate_graphon(parts({"0", "1"}), RationalRows{{Rational(1)}}));
  CHECK(one.size() == 1);
  CHECK(one(0) == 1);
}

TEST_CASE("skeleton graph examples") {
  auto s = hprop::skeleton_graph(hprop::borderline_graphon());
  CHECK(s == skeleton(2, {1}, {{0, 1}}));

  auto zero = hprop::validate_graphon(parts({"0", "1/3", "2/3", "1"}), RationalRows(3, std::vector<Rational>(3)));
  CHECK(hprop::skeleton_graph(zero) == skeleton(3, {}, {}));

  auto c = hprop::validate_graphon(parts({"0", "1"}), RationalRows{{Rational(2, 7)}});
  CHECK(hprop::skeleton_graph(c) == skeleton(1, {0}, {}));
}

TEST_CASE("incidence matrix examples") {
  auto z = hprop::incidence_matrix(hprop::skeleton_graph(hprop::borderline_graphon()));
  REQUIRE(z.columns() == 2);
  CHECK(z.z(0, 0) == Rational(1, 2));
  CHECK(z.z(1, 0) == Rational(1, 2));
  CHECK(z.z(0, 1) == 0);
  CHECK(z.z(1, 1) == 1);
  CHECK(z.column_edge[0] == hprop::SkeletonEdge{0, 1});
  CHECK(z.column_edge[1].is_loop());

  auto line = hprop::incidence_matrix(skeleton(4, {3}, {{0, 1}, {1, 2}, {2, 3}}));
  REQUIRE(line.columns() == 4);
  const Rational h(1, 2);
  hprop::MatrixQ expected(4, 4);
  expected << h, 0, 0, 0,
              h, h, 0, 0,
              0, h, h, 0,
              0, 0, h, 1;
  CHECK(line.z == expected);

  auto single = hprop::incidence_matrix(skeleton(1, {0}, {}));
  REQUIRE(single.columns() == 1);
  CHECK(single.z(0, 0) == 1);
}

TEST_CASE("line graphon recognition") {
  CHECK(hprop::is_line_graphon(hprop::skeleton_graph(hprop::four_block_line_graphon())));
  CHECK(*hprop::line_order(hprop::skeleton_graph(hprop::four_block_line_graphon())) == std::vector<int>{0, 1, 2, 3});
  CHECK(hprop::is_line_graphon(hprop::skeleton_graph(hprop::borderline_graphon())));
  CHECK_FALSE(hprop::is_line_graphon(skeleton(3, {1}, {{0, 1}, {1, 2}})));
  CHECK_FALSE(hprop::is_line_graphon(skeleton(3, {}, {{0, 1}, {1, 2}})));
  CHECK_FALSE(hprop::is_line_graphon(skeleton(3, {0, 2}, {{0, 1}, {1, 2}})));
  CHECK_FALSE(hprop::is_line_graphon(skeleton(3, {2}, {{0, 1}, {0, 2}, {1, 2}})));
  CHECK_FALSE(hprop::is_line_graphon(skeleton(4, {3}, {{0, 1}, {2, 3}})));
  CHECK_FALSE(hprop::is_line_graphon(skeleton(1, {}, {})));
  CHECK(hprop::is_line_graphon(skeleton(1, {0}, {})));
  // Path visited out of index order, loop at node 0.
  auto order = hprop::line_order(skeleton(4, {0}, {{0, 2}, {1, 3}, {2, 3}}));
  REQUIRE(order);
  CHECK(*order == std::vector<int>{1, 3, 2, 0});
}

TEST_CASE("connectivity") {
  CHECK(hprop::is_connected(skeleton(1, {}, {})));
  CHECK(hprop::is_connected(skeleton(3, {}, {{0, 2}, {1, 2}})));
  CHECK_FALSE(hprop::is_connected(skeleton(3, {0}, {{1, 2}})));
  CHECK_THROWS_AS(hprop::require_connected(skeleton(2, {0, 1}, {})), hprop::Error);
}

TEST_CASE("incidence columns are probability vectors") {
  std::mt19937 gen(7);
  for (int rep = 0; rep < 100; ++rep) {
    const int q = 1 + static_cast<int>(gen() % 7);
    hprop::SkeletonGraph s;
    s.node_count = q;
    for (int i = 0; i < q; ++i) {
      if (gen() % 2) s.self_loops.push_back(i);
      for (int j = i + 1; j < q; ++j) {
        if (gen() % 2) s.edges.emplace_back(i, j);
      }
    }
    auto z = hprop::incidence_matrix(s);
    CHECK(z.columns() == static_cast<int>(s.edges.size() + s.self_loops.size()));
    for (int c = 0; c < z.columns(); ++c) CHECK(z.z.col(c).sum() == 1);
  }
}

TEST_CASE("skeleton is invariant under scaling the values") {
  std::mt19937 gen(11);
  for (int rep = 0; rep < 50; ++rep) {
    const int q = 1 + static_cast<int>(gen() % 5);
    std::vector<Rational> partition{0};
    for (int i = 1; i < q; ++i) partition.push_back(Rational(i, q));
    partition.push_back(1);
    RationalRows w(q, std::vector<Rational>(q));
    for (int i = 0; i < q; ++i) {
      for (int j = i; j < q; ++j) w[i][j] = w[j][i] = gen() % 3 == 0 ? Rational(0) : Rational(1 + gen() % 9, 9);
    }
    const Rational factor(1 + gen() % 10, 10);
    RationalRows scaled = w;
    for (auto& row : scaled) {
      for (auto& v : row) v *= factor;
    }
    CHECK(hprop::skeleton_graph(hprop::validate_graphon(partition, w)) ==
          hprop::skeleton_graph(hprop::validate_graphon(partition, scaled)));
  }
}

TEST_CASE("graphon json round trip is exact") {
  for (const auto& g : {hprop::four_block_line_graphon(), hprop::borderline_graphon(), hprop::bipartite_graphon(),
                        hprop::outside_polytope_graphon(Rational(7, 13))}) {
    auto doc = hprop::graphon_to_json(g);
    auto back = hprop::graphon_from_json(nlohmann::json::parse(doc.dump()));
    CHECK(back == g);
    CHECK(hprop::graphon_to_json(back).dump() == doc.dump());
  }
}

TEST_CASE("graphon json converts decimals exactly and rejects numbers") {
  auto g = hprop::graphon_from_json(nlohmann::json::parse(
      R"({"partition": ["0", "0.2", "0.5", "0.75", "1"],
          "values": [["0","0.5","0","0"],["0.5","0","0.5","0"],["0","0.5","0","0.5"],["0","0","0.5","0.5"]]})"));
  CHECK(g == hprop::four_block_line_graphon());
  CHECK_THROWS_AS(hprop::graphon_from_json(nlohmann::json::parse(R"({"partition": [0, 1], "values": [["1"]]})")),
                  hprop::Error);
  CHECK_THROWS_AS(hprop::graphon_from_json(nlohmann::json::parse(R"({"partition": ["0", "1"]})")), hprop::Error);
  CHECK_THROWS_AS(hprop::graphon_from_json(nlohmann::json::parse(R"([1, 2])")), hprop::Error);
}
