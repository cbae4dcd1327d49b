#include <sstream>

#include "doctest.h"
#include "fermat/errors.hpp"
#include "fermat/interpolation.hpp"
#include "support.hpp"

using namespace fermat;

namespace {

PointConfiguration single_point(const std::vector<std::string>& coords, int conductor = 1) {
  auto field = CycloField::make(conductor);
  return PointConfiguration{field, {test::point(field, coords)}};
}

}  // namespace

TEST_CASE("condition matrix examples") {
  auto one = build_condition_matrix({single_point({"2", "3", "5"}), 1}, 1, {.normalize_points = false});
  REQUIRE(one.row_count() == 1);
  REQUIRE(one.column_count() == 3);
  CHECK(one.rows[0][0] == CycloNumber(one.rows[0][0].field(), 2));
  CHECK(one.rows[0][1] == CycloNumber(one.rows[0][0].field(), 3));
  CHECK(one.rows[0][2] == CycloNumber(one.rows[0][0].field(), 5));

  // no conic passes through the 7 points.
  auto conics = build_condition_matrix({fermat_points(2), 1}, 2);
  CHECK(conics.row_count() == 7);
  CHECK(conics.column_count() == 6);
  CHECK(rank(conics.rows) == 6);

  // the cubic kernel holds the three generators of I_2.
  auto cubics = build_condition_matrix({fermat_points(2), 1}, 3);
  CHECK(cubics.row_count() == 7);
  CHECK(cubics.column_count() == 10);
  CHECK(rank(cubics.rows) == 7);
  CHECK(fatpoint_dim({fermat_points(2), 1}, 3) == 3);
}

TEST_CASE("rows per point") {
  for (int m = 1; m <= 5; ++m) {
    auto mat = build_condition_matrix({fermat_points(2), m}, m + 2);
    CHECK(mat.row_count() == 7u * static_cast<unsigned>((m + 1) * m / 2));
    auto strict = build_condition_matrix({fermat_points(2), m}, m + 2, {.all_orders = true});
    CHECK(strict.row_count() == 7u * static_cast<unsigned>(m * (m + 1) * (m + 2) / 6));
  }
  CHECK(derivative_indices(2).size() == 6);
}

TEST_CASE("fatpoint_dim examples") {
  CHECK(fatpoint_dim({fermat_points(3), 1}, 3) == 0);
  CHECK(fatpoint_dim({fermat_points(3), 1}, 4) == 3);
  CHECK(fatpoint_dim({fermat_points(3), 1}, 4) == hilbert_dim(fermat_ideal(3).ideal, 4));
  CHECK(fatpoint_dim({fermat_points(3), 2}, -1) == 0);
  // Below m - 1 no nonzero form can have multiplicity m.
  CHECK(fatpoint_dim({fermat_points(3), 4}, 2) == 0);
  CHECK(fatpoint_dim({fermat_points(3), 4}, 2, {.all_orders = true}) == 0);
}

TEST_CASE("alpha_interp examples") {
  CHECK(alpha_interp({fermat_points(2), 2}) == 6);
  CHECK(alpha_interp({fermat_points(3), 2}) == 8);
  CHECK(alpha_interp({fermat_points(2), 3}) == 8);
}

TEST_CASE("alpha_interp on small configurations") {
  auto field = CycloField::make(1);
  PointConfiguration collinear{field,
                               {test::point(field, {"1", "0", "0"}), test::point(field, {"0", "1", "0"}),
                                test::point(field, {"1", "1", "0"})}};
  CHECK(alpha_interp({collinear, 1}) == 1);
  CHECK(alpha_interp({collinear, 2}) == 2);  // the doubled line
  PointConfiguration general{field,
                             {test::point(field, {"1", "0", "0"}), test::point(field, {"0", "1", "0"}),
                              test::point(field, {"0", "0", "1"})}};
  CHECK(alpha_interp({general, 1}) == 2);
  CHECK(alpha_interp({general, 2}) == 3);  // xyz
  CHECK_THROWS_AS(alpha_interp({general, 2}, {.alpha_cap = 2}), ScanCapExceeded);
}

TEST_CASE("rank trace") {
  std::ostringstream trace;
  fatpoint_dim({fermat_points(2), 1}, 3, {.trace = &trace});
  CHECK(trace.str() == "rank conductor=2 points=7 m=1 t=3 rows=7 cols=10 rank=7 kernel=3\n");
}

TEST_CASE("oracle agreement with hilbert_dim") {
  for (int n : {2, 3}) {
    FermatWorkspace ws(n);
    for (int m = 1; m <= 3; ++m) {
      Ideal sym = ws.symbolic_power(m);
      for (int t = 0; t <= 3 * (n + 1); ++t) {
        CAPTURE(n);
        CAPTURE(m);
        CAPTURE(t);
        CHECK(fatpoint_dim({fermat_points(n), m}, t) == hilbert_dim(sym, t));
      }
    }
  }
}
