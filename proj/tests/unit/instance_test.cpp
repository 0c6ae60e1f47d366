#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "gsetkit/instance.hpp"
#include "support/oracles.hpp"

using namespace gsetkit;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_gset(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error for: " << text;
  return ErrorCode::io;
}

}  // namespace

TEST(ParseGset, SmallestFile) {
  const auto inst = parse_gset("2 1\n1 2 1", "k2");
  EXPECT_EQ(inst.n(), 2u);
  EXPECT_EQ(inst.m(), 1u);
  EXPECT_EQ(inst.edges()[0], (Edge{0, 1, 1}));
  EXPECT_EQ(total_weight(inst), 1);
  EXPECT_EQ(inst.name(), "k2");
}

TEST(ParseGset, WhitespaceTolerant) {
  const auto a = parse_gset("3 2\n1 2 1\n2 3 -1\n");
  const auto b = parse_gset("  3\t2\r\n1   2 1 2\n3\n-1");
  EXPECT_EQ(a, b);
  EXPECT_EQ(total_weight(b), 0);
}

TEST(ParseGset, DistinctDiagnostics) {
  EXPECT_EQ(parse_error("3 2\n1 2 1\n1 2 -1"), ErrorCode::duplicate_edge);
  EXPECT_EQ(parse_error("3 2\n1 2 1\n2 1 -1"), ErrorCode::duplicate_edge);
  EXPECT_EQ(parse_error("3 1\n2 2 1"), ErrorCode::self_loop);
  EXPECT_EQ(parse_error("3 1\n1 4 1"), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(parse_error("3 1\n0 2 1"), ErrorCode::vertex_out_of_range);
  EXPECT_EQ(parse_error("3 2\n1 2 1"), ErrorCode::edge_count_mismatch);
  EXPECT_EQ(parse_error("3 1\n1 2 1\n2 3 1"), ErrorCode::edge_count_mismatch);
  EXPECT_EQ(parse_error("3 1\n1 x 1"), ErrorCode::malformed_token);
  EXPECT_EQ(parse_error("3 1\n1 2 1.5"), ErrorCode::malformed_token);
  EXPECT_EQ(parse_error(""), ErrorCode::malformed_token);
}

TEST(ParseGset, DiagnosticNamesLine) {
  try {
    parse_gset("4 3\n1 2 1\n2 3 1\n3 3 1\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("line 4"), std::string::npos) << e.what();
  }
}

TEST(ParseGset, ReversedPairIsNormalised) {
  const auto inst = parse_gset("3 1\n3 1 5");
  EXPECT_EQ(inst.edges()[0], (Edge{0, 2, 5}));
}

TEST(Adjacency, SymmetricClosureOfEdges) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = ref::random_instance(rng, 10);
    std::size_t half_edges = 0;
    for (Vertex k = 0; k < inst.n(); ++k) {
      for (const auto& nb : inst.neighbors(k)) {
        ++half_edges;
        const Edge key{std::min(k, nb.vertex), std::max(k, nb.vertex), nb.w};
        EXPECT_NE(std::find(inst.edges().begin(), inst.edges().end(), key), inst.edges().end());
      }
    }
    EXPECT_EQ(half_edges, 2 * inst.m());
  }
}

TEST(Torus, ThreeByThree) {
  const auto inst = generate_torus({3, 3, 42});
  EXPECT_EQ(inst.n(), 9u);
  EXPECT_EQ(inst.m(), 18u);
  for (Vertex k = 0; k < inst.n(); ++k) EXPECT_EQ(inst.degree(k), 4u);
}

TEST(Torus, GsetScaleShape) {
  const auto inst = generate_torus({100, 100, 1});
  EXPECT_EQ(inst.n(), 10000u);
  EXPECT_EQ(inst.m(), 20000u);
}

TEST(Torus, DeterministicAndSeedSensitive) {
  const auto a = generate_torus({7, 5, 99});
  const auto b = generate_torus({7, 5, 99});
  const auto c = generate_torus({7, 5, 100});
  EXPECT_EQ(a, b);
  EXPECT_EQ(write_gset(a), write_gset(b));
  EXPECT_NE(a, c);
}

TEST(Torus, NumberingAndNeighbours) {
  // vertex (row, col) = (row-1)*cols + col, 1-based
  const auto inst = generate_torus({3, 4, 5});
  auto has_edge = [&](Vertex a, Vertex b) {
    for (const auto& nb : inst.neighbors(a - 1)) {
      if (nb.vertex == b - 1) return true;
    }
    return false;
  };
  EXPECT_TRUE(has_edge(1, 2));   // right
  EXPECT_TRUE(has_edge(1, 4));   // wrap right
  EXPECT_TRUE(has_edge(1, 5));   // down
  EXPECT_TRUE(has_edge(1, 9));   // wrap down
  EXPECT_FALSE(has_edge(1, 6));  // diagonal
  for (const auto& e : inst.edges()) {
    EXPECT_TRUE(e.w == 1 || e.w == -1);
    EXPECT_LT(e.u, e.v);
  }
}

TEST(Torus, RejectsSmallGrids) {
  EXPECT_THROW(generate_torus({2, 5, 0}), Error);
  EXPECT_THROW(generate_torus({5, 2, 0}), Error);
}

TEST(Torus, InvariantsOverRandomSpecs) {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 10; ++rep) {
    const TorusSpec spec{3 + rng() % 20, 3 + rng() % 20, rng()};
    const auto inst = generate_torus(spec);
    EXPECT_EQ(inst.m(), 2 * spec.rows * spec.cols);
    for (Vertex k = 0; k < inst.n(); ++k) EXPECT_EQ(inst.degree(k), 4u);
    EXPECT_EQ(parse_gset(write_gset(inst)), inst);
  }
}

TEST(Serialize, RoundTripRandomInstances) {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const auto inst = ref::random_instance(rng, 1 + rng() % 15, 0.4, 7);
    EXPECT_EQ(parse_gset(write_gset(inst)), inst);
  }
}

TEST(Serialize, CanonicalText) {
  EXPECT_EQ(write_gset(parse_gset(" 3  2\n 1 2 -1\n2  3 1 ")), "3 2\n1 2 -1\n2 3 1\n");
}

TEST(TotalWeight, InvariantUnderRelabeling) {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 10; ++rep) {
    const auto inst = ref::random_instance(rng, 12);
    std::vector<Vertex> perm(inst.n());
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabeled;
    for (const auto& e : inst.edges()) relabeled.push_back({perm[e.u], perm[e.v], e.w});
    const auto other = ProblemInstance::from_edges("p", inst.n(), relabeled);
    EXPECT_EQ(total_weight(other), total_weight(inst));
    Weight sum = 0;
    for (const auto& e : inst.edges()) sum += e.w;
    EXPECT_EQ(total_weight(inst), sum);
  }
}

TEST(Checksum, IgnoresFormattingOnly) {
  const auto a = parse_gset("3 2\n1 2 1\n2 3 -1\n");
  const auto b = parse_gset("3   2 1 2 1 2 3 -1");
  const auto c = parse_gset("3 2\n1 2 1\n2 3 1\n");
  EXPECT_EQ(content_checksum(a), content_checksum(b));
  EXPECT_NE(content_checksum(a), content_checksum(c));
  EXPECT_EQ(content_checksum(a).size(), 16u);
}
