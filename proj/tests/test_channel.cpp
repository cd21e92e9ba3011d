#include <doctest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "risim/channel.hpp"
#include "risim/optimizer.hpp"
#include "risim/rng.hpp"
#include "risim/robust.hpp"
#include "risim/units.hpp"

using namespace risim;

namespace {

// Table I geometry with the transmitter at the origin
struct Fixture {
  double lambda = kSpeedOfLight / 30e9;
  Vec3 q{25, 25, 50};
  Vec3 w{50, 20, 0};
  RisLayout layout = ris_element_layout(10, 10, lambda / 2);
  ChannelParams params{db_to_linear(-30.0), dbm_to_watts(-80.0),
                       dbm_to_watts(24.0), kSpeedOfLight / 30e9};

  LinkAngles to_ris() const { return link_angles(Vec3{}, q); }
  Precoder mrt() const {
    return mrt_precoder(to_ris(), 16, params.tx_power, lambda);
  }

  // conjugate of the zero-tilt compound response: the configuration that
  // aligns every element for the target w
  Eigen::VectorXcd steering() const {
    const Eigen::VectorXcd a_r =
        ris_rx_array_response(q, EulerAngles{}, layout, lambda);
    const Eigen::VectorXcd a_t =
        ris_tx_array_response(q, w, EulerAngles{}, layout, lambda);
    return (a_t.conjugate().cwiseProduct(a_r)).conjugate();
  }
};

}  // namespace

TEST_SUITE_BEGIN("channel");

TEST_CASE("path gains follow the inverse-square law") {
  CHECK(path_gain_bs_ris({1, 0, 0}, 1.0) == doctest::Approx(1.0));
  CHECK(path_gain_bs_ris({25, 25, 50}, 1e-3) ==
        doctest::Approx(1e-3 / 3750.0).epsilon(1e-12));
  CHECK(path_gain_bs_ris({2, 0, 0}, 1.0) ==
        doctest::Approx(path_gain_bs_ris({1, 0, 0}, 1.0) / 4));
  CHECK_THROWS_AS(path_gain_bs_ris({0, 0, 0}, 1.0), std::invalid_argument);

  CHECK(path_gain_ris_target({1, 0, 0}, {0, 0, 0}, 1.0) == doctest::Approx(1.0));
  CHECK(path_gain_ris_target({25, 25, 50}, {50, 20, 0}, 1e-3) ==
        doctest::Approx(1e-3 / 3150.0).epsilon(1e-12));
  CHECK(path_gain_ris_target({4, 0, 0}, {0, 0, 0}, 1.0) ==
        doctest::Approx(path_gain_ris_target({2, 0, 0}, {0, 0, 0}, 1.0) / 4));
  CHECK_THROWS_AS(path_gain_ris_target({1, 2, 3}, {1, 2, 3}, 1.0),
                  std::invalid_argument);
}

TEST_CASE("bs_array_response steering structure") {
  const double lambda = 0.01;
  CHECK(bs_array_response({0.3, 0.2}, 1, lambda)(0) ==
        std::complex<double>(1.0, 0.0));

  // broadside: direction orthogonal to the array axis
  const Eigen::VectorXcd broad = bs_array_response({M_PI / 2, 0.0}, 16, lambda);
  for (int i = 0; i < 16; ++i) {
    REQUIRE(broad(i).real() == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(broad(i).imag() == doctest::Approx(0.0).epsilon(1e-12));
  }

  // endfire: pi phase steps at half-wavelength spacing
  const Eigen::VectorXcd end = bs_array_response({0.0, 0.0}, 4, lambda);
  for (int i = 0; i < 4; ++i) {
    const double expected = std::fmod(i * M_PI, 2 * M_PI);
    const double got = std::arg(end(i));
    REQUIRE(std::abs(std::polar(1.0, expected) - std::polar(1.0, got)) < 1e-12);
  }

  const Eigen::VectorXcd a = bs_array_response({0.7, -0.4}, 16, lambda);
  CHECK(a.squaredNorm() == doctest::Approx(16.0).epsilon(1e-12));
}

TEST_CASE("ris array responses are unit modulus and match the projection") {
  Fixture f;
  const Eigen::VectorXcd one = ris_rx_array_response(
      {0, 0, 10}, EulerAngles{}, ris_element_layout(1, 1, 0.005), f.lambda);
  CHECK(one(0).real() == doctest::Approx(1.0));
  CHECK(one(0).imag() == doctest::Approx(0.0));

  Rng rng(3);
  const EulerAngles tilt{0.2 * rng.uniform(), 0.2 * rng.uniform(),
                         0.2 * rng.uniform()};
  const Eigen::VectorXcd a_r =
      ris_rx_array_response(f.q, tilt, f.layout, f.lambda);
  const Eigen::VectorXcd a_t =
      ris_tx_array_response(f.q, f.w, tilt, f.layout, f.lambda);
  for (int i = 0; i < f.layout.size(); ++i) {
    REQUIRE(std::abs(a_r(i)) == doctest::Approx(1.0).epsilon(1e-12));
    REQUIRE(std::abs(a_t(i)) == doctest::Approx(1.0).epsilon(1e-12));
  }

  // zero tilt: phases equal the direct wave-vector projection
  const Eigen::VectorXcd a0 =
      ris_rx_array_response(f.q, EulerAngles{}, f.layout, f.lambda);
  const Eigen::VectorXcd t0 =
      ris_tx_array_response(f.q, f.w, EulerAngles{}, f.layout, f.lambda);
  const LinkAngles ar = f.to_ris();
  const LinkAngles at = link_angles(f.q, f.w);
  for (int i = 0; i < f.layout.size(); ++i) {
    const double phi_r = oracles::projected_phase(ar, EulerAngles{},
                                                  f.layout.elements[i], f.lambda);
    const double phi_t = oracles::projected_phase(at, EulerAngles{},
                                                  f.layout.elements[i], f.lambda);
    REQUIRE(std::abs(a0(i) - std::polar(1.0, -phi_r)) < 1e-10);
    REQUIRE(std::abs(t0(i) - std::polar(1.0, -phi_t)) < 1e-10);
  }
}

TEST_CASE("instantaneous_snr absorbing and single-element cases") {
  Fixture f;
  const Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(f.layout.size());
  CHECK(instantaneous_snr(f.q, f.w, EulerAngles{}, zero, f.mrt(), f.params,
                          f.layout) == 0.0);

  // N = 1, M = 1
  const RisLayout single = ris_element_layout(1, 1, 0.005);
  const Precoder v1 = mrt_precoder(f.to_ris(), 1, f.params.tx_power, f.lambda);
  Eigen::VectorXcd theta1(1);
  theta1(0) = 1.0;
  const double snr = instantaneous_snr(f.q, f.w, EulerAngles{}, theta1, v1,
                                       f.params, single);
  const double expected = f.params.tx_power * f.params.beta0 * f.params.beta0 /
                          (3750.0 * 3150.0 * f.params.noise_power);
  CHECK(snr == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("instantaneous_snr reaches the coherent bound with steering") {
  Fixture f;
  const double snr = instantaneous_snr(f.q, f.w, EulerAngles{}, f.steering(),
                                       f.mrt(), f.params, f.layout);
  const double n = f.layout.size();
  const double expected = f.params.tx_power * 16 * n * n * f.params.beta0 *
                          f.params.beta0 /
                          (3750.0 * 3150.0 * f.params.noise_power);
  CHECK(snr == doctest::Approx(expected).epsilon(1e-9));
}

TEST_CASE("perfect compensation aligns all elements exactly") {
  Fixture f;
  const Eigen::VectorXcd a_r =
      ris_rx_array_response(f.q, EulerAngles{}, f.layout, f.lambda);
  const Eigen::VectorXcd a_t =
      ris_tx_array_response(f.q, f.w, EulerAngles{}, f.layout, f.lambda);
  const std::complex<double> cascade =
      (a_t.conjugate().cwiseProduct(a_r).cwiseProduct(f.steering())).sum();
  CHECK(std::abs(cascade) == doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("snr is invariant to a common configuration phase") {
  Fixture f;
  Rng rng(17);
  Eigen::VectorXcd theta(f.layout.size());
  for (int i = 0; i < theta.size(); ++i)
    theta(i) = std::polar(rng.uniform(), 2 * M_PI * rng.uniform());
  const EulerAngles tilt{0.05, -0.02, 0.08};
  const double base =
      instantaneous_snr(f.q, f.w, tilt, theta, f.mrt(), f.params, f.layout);
  for (int k = 0; k < 8; ++k) {
    const double alpha = 2 * M_PI * rng.uniform();
    const Eigen::VectorXcd rotated = std::polar(1.0, alpha) * theta;
    REQUIRE(instantaneous_snr(f.q, f.w, tilt, rotated, f.mrt(), f.params,
                              f.layout) == doctest::Approx(base).epsilon(1e-10));
  }
}

TEST_CASE("mrt precoder attains the matched-filter bound") {
  Fixture f;
  const Precoder v = f.mrt();
  CHECK(v.v.squaredNorm() == doctest::Approx(f.params.tx_power).epsilon(1e-12));
  CHECK(dbm_to_watts(24.0) == doctest::Approx(0.251188643).epsilon(1e-9));

  const Eigen::VectorXcd a = bs_array_response(f.to_ris(), 16, f.lambda);
  const double gain = std::norm(a.dot(v.v));
  CHECK(gain == doctest::Approx(f.params.tx_power * 16).epsilon(1e-12));

  Rng rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    Eigen::VectorXcd cand(16);
    for (int i = 0; i < 16; ++i) cand(i) = rng.complex_gaussian();
    cand *= std::sqrt(f.params.tx_power) * rng.uniform() / cand.norm();
    REQUIRE(std::norm(a.dot(cand)) <= gain * (1 + 1e-12));
  }
}

TEST_CASE("expected_snr degenerates at zero variance and scales as c^2") {
  Fixture f;
  const Eigen::VectorXcd theta = f.steering();
  const PerturbationStats still{};
  const double mean =
      expected_snr(f.q, f.w, still, theta, f.mrt(), f.params, f.layout, 10, 1);
  const double inst = instantaneous_snr(f.q, f.w, EulerAngles{}, theta,
                                        f.mrt(), f.params, f.layout);
  CHECK(mean == doctest::Approx(inst).epsilon(1e-12));

  PerturbationStats wobble{deg_to_rad(5), deg_to_rad(5), deg_to_rad(5), {}};
  const double base = expected_snr(f.q, f.w, wobble, theta, f.mrt(), f.params,
                                   f.layout, 200, 5);
  for (const double c : {0.3, 0.7}) {
    const double scaled = expected_snr(f.q, f.w, wobble, c * theta, f.mrt(),
                                       f.params, f.layout, 200, 5);
    REQUIRE(scaled == doctest::Approx(c * c * base).epsilon(1e-10));
  }
}

TEST_CASE("expected_snr matches the averaged-gain-matrix quadratic form") {
  Fixture f;
  PerturbationStats wobble{deg_to_rad(5), deg_to_rad(5), deg_to_rad(5), {}};
  const Eigen::VectorXcd theta = f.steering();
  const std::uint64_t seed = 99;
  const int n_mc = 400;

  const double direct = expected_snr(f.q, f.w, wobble, theta, f.mrt(),
                                     f.params, f.layout, n_mc, seed);

  const EtaCoefficients eta =
      eta_coefficients(f.to_ris(), link_angles(f.q, f.w));
  const RobustGainMatrix gain =
      gain_matrix_mc(eta, f.layout, wobble, f.lambda, n_mc, seed);
  const std::complex<double> quad =
      (theta.transpose() * gain.entries * theta.conjugate())(0, 0);
  const Eigen::VectorXcd a_bs = bs_array_response(f.to_ris(), 16, f.lambda);
  const double bs_gain = std::norm(a_bs.dot(f.mrt().v));
  const double via_matrix = bs_gain * quad.real() * f.params.beta0 *
                            f.params.beta0 /
                            (3750.0 * 3150.0 * f.params.noise_power);
  CHECK(direct == doctest::Approx(via_matrix).epsilon(1e-10));
}

TEST_CASE("expected_snr agrees with a high-resolution oracle" *
          doctest::timeout(120)) {
  Fixture f;
  PerturbationStats wobble{deg_to_rad(5), deg_to_rad(5), deg_to_rad(5), {}};
  const Eigen::VectorXcd theta = f.steering();

  const double estimate = expected_snr(f.q, f.w, wobble, theta, f.mrt(),
                                       f.params, f.layout, 5000, 1234);

  // independent high-resolution run with draw-level variance
  Rng rng(4321);
  const int big = 1000000;
  double sum = 0.0, sum_sq = 0.0;
  for (int s = 0; s < big; ++s) {
    const EulerAngles r{wobble.sigma_x * rng.gaussian(),
                        wobble.sigma_y * rng.gaussian(),
                        wobble.sigma_z * rng.gaussian()};
    const double snr =
        instantaneous_snr(f.q, f.w, r, theta, f.mrt(), f.params, f.layout);
    sum += snr;
    sum_sq += snr * snr;
  }
  const double mean = sum / big;
  const double var = sum_sq / big - mean * mean;
  const double se = std::sqrt(var / 5000.0 + var / big);
  CHECK(std::abs(estimate - mean) < 3 * se);
}

TEST_SUITE_END();
