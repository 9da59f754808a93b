#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "hexstore/io.hpp"
#include "hexstore/objective.hpp"

using namespace hexstore;

namespace {

WarehouseConfig with_triaxial(std::size_t three, Dims d = {4, 4, 3}) {
  auto cfg = WarehouseConfig::uniform(d, CellKind::TwoAxis);
  for (std::size_t i = 0; i < three; ++i) cfg.kinds[i] = CellKind::ThreeAxis;
  return cfg;
}

const ObjectiveParams kFullWarehouseNorms{1.0, 7808.0, 48.0};

}  // namespace

TEST_CASE("module costs") {
  const CostModel cm;
  CHECK(cm.cost_of(CellKind::ThreeAxis) == 1.0);
  CHECK(cm.cost_of(CellKind::TwoAxis) == 0.6);
  CostModel custom{0.5, 0.25, 0.25, 1.0};
  CHECK(custom.cost_of(CellKind::ThreeAxis) == 2.0);
  CHECK(custom.cost_of(CellKind::TwoAxis) == 1.0);
}

TEST_CASE("warehouse cost") {
  CHECK(warehouse_cost(with_triaxial(48), {}) == 48.0);
  CHECK(warehouse_cost(with_triaxial(15), {}) == 34.8);
  CHECK(warehouse_cost(WarehouseConfig{}, {}) == 0.0);
  CHECK(warehouse_cost(with_triaxial(45), {}) == 46.8);
  CHECK(warehouse_cost(with_triaxial(12), {}) == 33.6);
  CHECK(warehouse_cost(with_triaxial(6), {}) == 31.2);
}

TEST_CASE("objective examples") {
  CHECK(objective(7808.0, 48.0, kFullWarehouseNorms) == 1.0);
  CHECK(round3(objective(8144.0, 34.8, {0.5, 7808.0, 48.0})) == doctest::Approx(0.884).epsilon(1e-12));
  CHECK(std::abs(objective(8144.0, 34.8, {0.5, 7808.0, 48.0}) - 0.884) <= 0.0005);
  CHECK(std::abs(objective(8960.0, 31.2, {0.1, 7808.0, 48.0}) - 0.7) <= 0.0005);
  for (double a : {0.0, 0.3, 1.0}) CHECK(objective(10.0, 3.0, {a, 10.0, 3.0}) == 1.0);

  CHECK_FALSE(objective(std::optional<double>{}, 30.0, kFullWarehouseNorms).has_value());
  CHECK_THROWS_AS(objective(1.0, 1.0, {1.5, 1.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(objective(1.0, 1.0, {0.5, 0.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(objective(1.0, 1.0, {0.5, 1.0, -2.0}), std::invalid_argument);
}

TEST_CASE("objective is affine and monotone") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (int i = 0; i < 500; ++i) {
    const ObjectiveParams p{u(rng) / 100.0, 1.0 + u(rng), 1.0 + u(rng)};
    const double s = u(rng), c = u(rng), ds = u(rng), dc = u(rng);
    CHECK(objective(s + ds, c, p) >= objective(s, c, p));
    CHECK(objective(s, c + dc, p) >= objective(s, c, p));
    // affine: midpoint maps to midpoint
    const double mid = objective((s + ds + s) / 2, c, p);
    CHECK(mid == doctest::Approx((objective(s + ds, c, p) + objective(s, c, p)) / 2));
    CHECK(objective(s, c, {1.0, p.f_speed_norm, p.f_cost_norm}) ==
          objective(s, c + dc, {1.0, p.f_speed_norm, p.f_cost_norm}));
    CHECK(objective(s, c, {0.0, p.f_speed_norm, p.f_cost_norm}) ==
          objective(s + ds, c, {0.0, p.f_speed_norm, p.f_cost_norm}));
  }
}

TEST_CASE("scaling speeds and their normalizer keeps the ranking") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(1.0, 100.0);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 40; ++i) pts.emplace_back(u(rng), u(rng));
  for (double scale : {0.01, 3.0, 7808.0}) {
    const ObjectiveParams base{0.4, 50.0, 50.0};
    const ObjectiveParams scaled{0.4, 50.0 * scale, 50.0};
    auto order = [&](const ObjectiveParams& p, double f) {
      std::vector<std::size_t> idx(pts.size());
      std::iota(idx.begin(), idx.end(), 0);
      std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return objective(pts[a].first * f, pts[a].second, p) <
               objective(pts[b].first * f, pts[b].second, p) - 1e-12;
      });
      return idx;
    };
    CHECK(order(base, 1.0) == order(scaled, scale));
  }
}

TEST_CASE("round3 rounds halves up") {
  CHECK(round3(0.8845) == doctest::Approx(0.885).epsilon(1e-12));
  CHECK(round3(0.6997538) == doctest::Approx(0.7).epsilon(1e-12));
  CHECK(round3(1.0015368) == doctest::Approx(1.002).epsilon(1e-12));
  CHECK(round3(2.0) == 2.0);
}

TEST_CASE("evaluate") {
  const Dims d{4, 4, 3};
  const auto full = WarehouseConfig::uniform(d, CellKind::ThreeAxis);
  const Norms n = self_norms(d, {}, {}, {});
  CHECK(n.cost == 48.0);
  const Evaluation e = evaluate(full, {}, {}, {0.5, n.speed, n.cost});
  CHECK(e.feasible());
  CHECK(*e.f_target == 1.0);
  CHECK(e.triaxial == 48);
  CHECK(to_json(e)["norms"][1] == 48.0);

  const Evaluation none = evaluate(WarehouseConfig::uniform(d, CellKind::TwoAxis), {}, {},
                                   {0.5, n.speed, n.cost});
  CHECK_FALSE(none.feasible());
  CHECK(to_json(none)["f_target"] == "infeasible");
  CHECK(to_json(none)["f_speed"] == "infeasible");

  const auto square = WarehouseConfig::uniform({2, 2, 1}, CellKind::TwoAxis);
  const Norms sn = self_norms(square.dims, {}, {}, {});
  CHECK(sn.speed == 4.0);
  CHECK(*evaluate(square, {}, {}, {0.3, sn.speed, warehouse_cost(square, {})}).f_target == 1.0);

  CHECK(to_json(evaluate(square, {}, {}, {0.5, 4.0, 2.4})).dump() ==
        R"({"alpha":0.5,"f_cost":2.4,"f_speed":4.0,"f_target":1.0,"norms":[4.0,2.4],"triaxial":0})");
}

TEST_CASE("single cell self norms stay positive") {
  const Norms n = self_norms({1, 1, 1}, {}, {}, {});
  CHECK(n.speed == 1.0);
  CHECK(n.cost == 1.0);
}

TEST_CASE("reference objective table") {
  struct Row { double speed, cost; };
  const Row rows[] = {{7808, 48}, {7820, 46.8}, {8144, 34.8}, {8360, 33.6}, {8960, 31.2}};
  const double alphas[] = {1.0, 0.5, 0.1};
  const double expected[3][5] = {{1, 1.002, 1.043, 1.071, 1.148},
                                 {1, 0.988, 0.884, 0.885, 0.899},
                                 {1, 0.978, 0.757, 0.737, 0.7}};
  for (int a = 0; a < 3; ++a)
    for (int r = 0; r < 5; ++r) {
      CAPTURE(a);
      CAPTURE(r);
      const double v = round3(objective(rows[r].speed, rows[r].cost, {alphas[a], 7808, 48}));
      CHECK(std::abs(v - expected[a][r]) <= 0.0005);
    }
}
