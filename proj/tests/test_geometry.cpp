#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "risim/geometry.hpp"
#include "risim/rng.hpp"
#include "risim/units.hpp"

using namespace risim;

TEST_SUITE_BEGIN("geometry");

TEST_CASE("rotation_matrix identity at zero angles") {
  const Eigen::Matrix3d r = rotation_matrix({0.0, 0.0, 0.0});
  CHECK((r - Eigen::Matrix3d::Identity()).norm() == doctest::Approx(0.0));
}

TEST_CASE("rotation_matrix single-axis yaw") {
  const Eigen::Matrix3d r = rotation_matrix({0.0, 0.0, M_PI / 2});
  const Eigen::Vector3d mapped = r * Eigen::Vector3d(1, 0, 0);
  CHECK(mapped.x() == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(mapped.y() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mapped.z() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("rotation_matrix equals the elementary-matrix product") {
  const EulerAngles angles{0.1, -0.05, 0.2};
  const Eigen::Matrix3d r = rotation_matrix(angles);

  Eigen::Matrix3d rx = Eigen::Matrix3d::Identity();
  rx(1, 1) = std::cos(0.1);
  rx(1, 2) = -std::sin(0.1);
  rx(2, 1) = std::sin(0.1);
  rx(2, 2) = std::cos(0.1);
  Eigen::Matrix3d ry = Eigen::Matrix3d::Identity();
  ry(0, 0) = std::cos(-0.05);
  ry(0, 2) = std::sin(-0.05);
  ry(2, 0) = -std::sin(-0.05);
  ry(2, 2) = std::cos(-0.05);
  Eigen::Matrix3d rz = Eigen::Matrix3d::Identity();
  rz(0, 0) = std::cos(0.2);
  rz(0, 1) = -std::sin(0.2);
  rz(1, 0) = std::sin(0.2);
  rz(1, 1) = std::cos(0.2);

  CHECK((r - rx * ry * rz).cwiseAbs().maxCoeff() < 1e-15);
  CHECK((r.transpose() * r - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() <
        1e-12);
  CHECK(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("rotation_matrix proper rotation over random triples") {
  Rng rng(7);
  for (int i = 0; i < 1000; ++i) {
    const EulerAngles angles{(rng.uniform() - 0.5) * 2 * M_PI,
                             (rng.uniform() - 0.5) * 2 * M_PI,
                             (rng.uniform() - 0.5) * 2 * M_PI};
    const Eigen::Matrix3d r = rotation_matrix(angles);
    REQUIRE((r.transpose() * r - Eigen::Matrix3d::Identity())
                .cwiseAbs()
                .maxCoeff() < 1e-12);
    REQUIRE(r.determinant() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("ris_element_layout single element") {
  const RisLayout layout = ris_element_layout(1, 1, 0.005);
  REQUIRE(layout.size() == 1);
  CHECK(layout.elements[0].x == 0.0);
  CHECK(layout.elements[0].y == 0.0);
}

TEST_CASE("ris_element_layout 2x2 grid") {
  const RisLayout layout = ris_element_layout(2, 2, 0.005);
  REQUIRE(layout.size() == 4);
  // row-major: x varies fastest
  CHECK(layout.elements[0].x == 0.0);
  CHECK(layout.elements[1].x == 0.005);
  CHECK(layout.elements[1].y == 0.0);
  CHECK(layout.elements[2].x == 0.0);
  CHECK(layout.elements[2].y == 0.005);
  CHECK(layout.elements[3].x == 0.005);
  CHECK(layout.elements[3].y == 0.005);
}

TEST_CASE("ris_element_layout at 30 GHz half-wavelength spacing") {
  const double lambda = kSpeedOfLight / 30e9;
  const RisLayout layout = ris_element_layout(10, 10, lambda / 2);
  REQUIRE(layout.size() == 100);
  double max_coord = 0.0;
  for (const auto& e : layout.elements)
    max_coord = std::max(max_coord, std::max(e.x, e.y));
  CHECK(max_coord == doctest::Approx(9 * lambda / 2));
  CHECK(max_coord == doctest::Approx(0.045).epsilon(1e-2));
}

TEST_CASE("ris_element_layout rejects bad input") {
  CHECK_THROWS_AS(ris_element_layout(0, 3, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(ris_element_layout(3, -1, 0.01), std::invalid_argument);
  CHECK_THROWS_AS(ris_element_layout(2, 2, 0.0), std::invalid_argument);
}

TEST_CASE("link_angles axis-aligned and zenith") {
  const LinkAngles a = link_angles({0, 0, 0}, {1, 0, 0});
  CHECK(a.azimuth == doctest::Approx(0.0));
  CHECK(a.elevation == doctest::Approx(0.0));

  const LinkAngles z = link_angles({0, 0, 0}, {0, 0, 5});
  CHECK(z.elevation == doctest::Approx(M_PI / 2));
  CHECK(z.azimuth == doctest::Approx(0.0));
}

TEST_CASE("link_angles arithmetic case") {
  const Vec3 origin{25, 25, 50};
  const Vec3 target{50, 20, 0};
  const LinkAngles a = link_angles(origin, target);
  const double len = std::sqrt(25.0 * 25 + 5 * 5 + 50 * 50);
  CHECK(a.azimuth == doctest::Approx(std::atan2(-5.0, 25.0)).epsilon(1e-12));
  CHECK(a.elevation == doctest::Approx(std::asin(-50.0 / len)).epsilon(1e-12));
}

TEST_CASE("link_angles rejects coincident points") {
  CHECK_THROWS_AS(link_angles({1, 2, 3}, {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("link_angles direction round-trip over random pairs") {
  Rng rng(11);
  for (int i = 0; i < 1000; ++i) {
    const Vec3 o{100 * (rng.uniform() - 0.5), 100 * (rng.uniform() - 0.5),
                 100 * (rng.uniform() - 0.5)};
    const Vec3 t{100 * (rng.uniform() - 0.5), 100 * (rng.uniform() - 0.5),
                 100 * (rng.uniform() - 0.5)};
    const Vec3 d = t - o;
    if (d.norm() < 1e-6) continue;
    const LinkAngles a = link_angles(o, t);
    const Eigen::Vector3d dir = oracles::wave_vector(a) * d.norm();
    REQUIRE(std::abs(dir.x() - d.x) < 1e-10 * d.norm());
    REQUIRE(std::abs(dir.y() - d.y) < 1e-10 * d.norm());
    REQUIRE(std::abs(dir.z() - d.z) < 1e-10 * d.norm());
  }
}

TEST_CASE("spatial frequency vanishes at broadside") {
  const LinkAngles zenith{0.3, M_PI / 2};  // elevation pi/2: wave along +z
  const SpatialFrequency v =
      incident_spatial_frequency(zenith, EulerAngles{}, 0.01);
  CHECK(std::abs(v.f_x) < 1e-12);
  CHECK(std::abs(v.f_y) < 1e-12);
}

TEST_CASE("spatial frequency collapses to direction cosines when untilted") {
  const LinkAngles a{0.7, -0.4};
  const double lambda = 0.01;
  const SpatialFrequency v =
      incident_spatial_frequency(a, EulerAngles{}, lambda);
  const double k = 2 * M_PI / lambda;
  CHECK(v.f_x ==
        doctest::Approx(k * std::cos(-0.4) * std::cos(0.7)).epsilon(1e-12));
  CHECK(v.f_y ==
        doctest::Approx(k * std::cos(-0.4) * std::sin(0.7)).epsilon(1e-12));
}

TEST_CASE("untilted element phases equal the wave-vector projection") {
  const double lambda = kSpeedOfLight / 30e9;
  const RisLayout layout = ris_element_layout(6, 4, lambda / 2);
  const LinkAngles a = link_angles({0, 0, 0}, {25, 25, 50});
  const SpatialFrequency v =
      incident_spatial_frequency(a, EulerAngles{}, lambda);
  for (const auto& e : layout.elements) {
    const double expected =
        oracles::projected_phase(a, EulerAngles{}, e, lambda);
    REQUIRE(element_phase(v, e) == doctest::Approx(expected).epsilon(1e-10));
  }
}

TEST_CASE("tilted spatial frequency tracks the rotated projection") {
  // The per-axis tilt model agrees with a full rigid rotation to second
  // order in the tilt angles (pitch sign resolved in the oracle).
  const double lambda = kSpeedOfLight / 30e9;
  const LinkAngles a = link_angles({0, 0, 0}, {25, 25, 50});
  const double k = 2 * M_PI / lambda;

  for (const double deg : {2.0, 5.0}) {
    const double rad = deg_to_rad(deg);
    const EulerAngles r{rad, rad, rad};
    const SpatialFrequency v = incident_spatial_frequency(a, r, lambda);
    const Element probe{1.0, 0.0};
    const Element probe_y{0.0, 1.0};
    const double fx_oracle = oracles::projected_phase(a, r, probe, lambda);
    const double fy_oracle = oracles::projected_phase(a, r, probe_y, lambda);
    // direction-cosine error bound ~ rad^2
    const double tol = k * 2.5 * rad * rad;
    CHECK(std::abs(v.f_x - fx_oracle) < tol);
    CHECK(std::abs(v.f_y - fy_oracle) < tol);
  }
}

TEST_CASE("departure frequency mirrors the incident construction") {
  const LinkAngles zenith{0.0, M_PI / 2};
  const SpatialFrequency v =
      departure_spatial_frequency(zenith, EulerAngles{}, 0.01);
  CHECK(std::abs(v.f_x) < 1e-12);
  CHECK(std::abs(v.f_y) < 1e-12);

  const LinkAngles a{-0.3, -1.1};
  const EulerAngles r{deg_to_rad(2.0), 0.0, 0.0};
  const SpatialFrequency vt = departure_spatial_frequency(a, r, 0.01);
  const double fx_oracle =
      oracles::projected_phase(a, r, Element{1.0, 0.0}, 0.01);
  const double fy_oracle =
      oracles::projected_phase(a, r, Element{0.0, 1.0}, 0.01);
  const double tol = 2 * M_PI / 0.01 * 2.5 * deg_to_rad(2.0) * deg_to_rad(2.0);
  CHECK(std::abs(vt.f_x - fx_oracle) < tol);
  CHECK(std::abs(vt.f_y - fy_oracle) < tol);
}

TEST_CASE("element_phase basics") {
  CHECK(element_phase({0, 0}, {3.0, 7.0}) == 0.0);
  CHECK(element_phase({M_PI, 0}, {1.0, 7.0}) == doctest::Approx(M_PI));

  const double lambda = kSpeedOfLight / 30e9;
  const LinkAngles a = link_angles({0, 0, 0}, {25, 25, 50});
  const SpatialFrequency v =
      incident_spatial_frequency(a, EulerAngles{}, lambda);
  const Element e{9 * lambda / 2, 0.0};
  CHECK(element_phase(v, e) == doctest::Approx(v.f_x * 9 * lambda / 2));
}

TEST_CASE("constant coordinate offset shifts every phase equally") {
  Rng rng(23);
  const SpatialFrequency v{412.0, -77.5};
  for (int i = 0; i < 100; ++i) {
    const Element e{rng.uniform(), rng.uniform()};
    const double dx = rng.uniform() - 0.5, dy = rng.uniform() - 0.5;
    const Element shifted{e.x + dx, e.y + dy};
    const double delta = element_phase(v, shifted) - element_phase(v, e);
    REQUIRE(delta == doctest::Approx(v.f_x * dx + v.f_y * dy).epsilon(1e-10));
  }
}

TEST_SUITE_END();
