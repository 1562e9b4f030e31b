#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mzsim/errors.hpp"
#include "mzsim/scenarios.hpp"
#include "support.hpp"

using namespace mzsim;
using namespace mzsim::test;

namespace {

double t_r_opt(double p) { return (1 + 2 * p) / (2 * (1 + p)); }

MzParams on_constraint(double p, double eta_b, double t, double t_r) {
  MzParams prm;
  prm.p = p;
  prm.eta_b = eta_b;
  prm.t = t;
  prm.eta_a = eta_b * t;
  prm.t_r = t_r;
  return prm;
}

// Amplitude bookkeeping by hand over the two ways a coincidence can happen
// (noise to the tap with the signal at D, or the signal to the tap with the
// noise at D), averaged over the distinguishability mixture.
double coincidence_oracle(const MzParams& prm, double phi) {
  const double x = prm.t * prm.eta_b * (1 - prm.t_r);
  const double pre = prm.eta_s * prm.eta_n * (1 - prm.t) * prm.eta_b * prm.t_r / 4;
  const double k = 2 * (1 + prm.p);
  return pre * (prm.eta_a + k * x + k * std::sqrt(prm.eta_a * x) * std::cos(phi));
}

MzParams random_params(Gen& gen) {
  MzParams prm;
  prm.p = gen.uniform(0, 1);
  prm.eta_s = gen.uniform(0.05, 1);
  prm.eta_n = gen.uniform(0.05, 1);
  prm.eta_a = gen.uniform(0.01, 1);
  prm.eta_b = gen.uniform(0.01, 1);
  prm.t = gen.uniform(0.01, 0.99);
  prm.t_r = gen.uniform(0.01, 0.99);
  return prm;
}

}  // namespace

TEST_CASE("simple model examples") {
  CHECK(std::abs(simple_model(NoiseCase::indistinguishable(), 0.25).visibility - 1.0) < 1e-9);
  CHECK(std::abs(simple_model(NoiseCase::distinguishable(), 0.5).visibility - 1 / std::sqrt(2.0)) < 1e-9);
  CHECK(std::abs(simple_model(NoiseCase::distinguishable(), 1.0).visibility - 2.0 / 3.0) < 1e-9);
  CHECK_THROWS_AS(simple_model(NoiseCase::distinguishable(), 0.0), DomainError);
  CHECK_THROWS_AS(simple_model(NoiseCase::distinguishable(), 1.2), DomainError);
  CHECK_THROWS_AS(simple_model(NoiseCase::mixture(1.5), 0.5), DomainError);
}

TEST_CASE("simple model success probability") {
  auto r = simple_model(NoiseCase::distinguishable(), 1.0);
  CHECK(std::abs(r.success_probability - 1.0) < 1e-12);
  // Psi'' survives attenuation 1/4 with probability (1 + 4/4)/5.
  auto ind = simple_model(NoiseCase::indistinguishable(), 0.25);
  CHECK(std::abs(ind.success_probability - 0.4) < 1e-12);
}

TEST_CASE("simple model subtraction weights") {
  auto dis = simple_model_subtracted(NoiseCase::distinguishable()).conditioned();
  REQUIRE(dis.branches().size() == 2);
  std::vector<double> w{dis.branches()[0].weight, dis.branches()[1].weight};
  std::sort(w.begin(), w.end());
  CHECK(std::abs(w[0] - 1.0 / 3.0) < 1e-12);
  CHECK(std::abs(w[1] - 2.0 / 3.0) < 1e-12);
  auto ind = simple_model_subtracted(NoiseCase::indistinguishable());
  CHECK(ind.branches().size() == 1);
}

TEST_CASE("simple model follows 2 sqrt(eta)/(1 + 2 eta) when distinguishable") {
  for (int k = 1; k <= 10; ++k) {
    const double eta = k / 10.0;
    CHECK(std::abs(simple_model(NoiseCase::distinguishable(), eta).visibility -
                   2 * std::sqrt(eta) / (1 + 2 * eta)) < 1e-9);
  }
}

TEST_CASE("simple model mixtures follow the closed form") {
  Gen gen(51);
  for (int trial = 0; trial < 30; ++trial) {
    const double p = gen.uniform(0, 1), eta = gen.uniform(0.05, 1);
    CHECK(std::abs(simple_model(NoiseCase::mixture(p), eta, 32).visibility - v_simple_closed_form(p, eta)) < 1e-9);
  }
}

TEST_CASE("coincidence matches the hand-derived rate") {
  MzParams prm;
  prm.p = 0;
  prm.eta_a = prm.eta_b = 1;
  prm.t = prm.t_r = 0.5;
  CHECK(std::abs(mz_coincidence(prm, 0) - coincidence_oracle(prm, 0)) < 1e-12);
  Gen gen(52);
  for (int trial = 0; trial < 100; ++trial) {
    auto r = random_params(gen);
    const double phi = gen.uniform(-kPi, kPi);
    CHECK(std::abs(mz_coincidence(r, phi) - coincidence_oracle(r, phi)) < 1e-12);
    CHECK(std::abs(mz_coincidence(r, phi) - mz_coincidence(r, phi + 2 * kPi)) < 1e-12);
  }
}

TEST_CASE("coincidence limits") {
  MzParams prm = on_constraint(0.4, 0.8, 0.5, 0.5);
  for (double phi : {0.0, 1.0, 2.5}) {
    MzParams no_noise = prm;
    no_noise.t = 1.0;
    CHECK(std::abs(mz_coincidence(no_noise, phi)) < 1e-15);
    MzParams no_tap = prm;
    no_tap.t_r = 0.0;
    CHECK(std::abs(mz_coincidence(no_tap, phi)) < 1e-15);
  }
  MzParams t1 = prm;
  t1.t = 1.0;
  CHECK_THROWS_AS(mz_visibility(t1), DomainError);
  MzParams t0 = prm;
  t0.t = 0.0;
  CHECK_THROWS_AS(mz_visibility(t0), DomainError);
  MzParams tr1 = prm;
  tr1.t_r = 1.0;
  CHECK_THROWS_AS(mz_visibility(tr1), DomainError);
  MzParams bad = prm;
  bad.eta_a = -0.1;
  CHECK_THROWS_AS(mz_coincidence(bad, 0.0), DomainError);
  MzParams dark = prm;
  dark.eta_a = 0.0;
  dark.eta_b = 0.0;
  CHECK_THROWS_AS(mz_visibility(dark), UndefinedVisibilityError);
}

TEST_CASE("full interferometer examples") {
  for (double eta_b : {0.4, 1.0})
    for (double t : {0.3, 0.5}) {
      CHECK(std::abs(mz_visibility(on_constraint(1, eta_b, t, 0.75)).visibility - 1.0) < 1e-9);
      CHECK(std::abs(mz_visibility(on_constraint(0, eta_b, t, 0.5)).visibility - 1 / std::sqrt(2.0)) < 1e-9);
    }
  // eta_a = eta_b = T = 1 has no coincidences; approach it from below.
  MzParams near;
  near.p = 1;
  near.eta_a = near.eta_b = 1;
  near.t = 1 - 1e-7;
  near.t_r = 0.5;
  CHECK(std::abs(mz_visibility(near).visibility - 4 * std::sqrt(0.5) / 3) < 1e-6);
}

TEST_CASE("fringe samples are the coincidence rate") {
  MzParams prm = on_constraint(0.6, 0.9, 0.35, 0.6);
  auto r = mz_visibility(prm, 24);
  for (std::size_t i = 0; i < r.fringe.phases.size(); ++i)
    CHECK(std::abs(r.fringe.probabilities[i] - mz_coincidence(prm, r.fringe.phases[i])) < 1e-12);
}

TEST_CASE("property: simulator equals the closed form on random records") {
  Gen gen(53);
  for (int trial = 0; trial < 200; ++trial) {
    auto r = random_params(gen);
    CHECK(std::abs(mz_visibility(r).visibility - v_closed_form(r.p, r.eta_a, r.eta_b, r.t, r.t_r)) < 1e-9);
  }
}

TEST_CASE("property: source couplings scale the rate but not the visibility") {
  Gen gen(54);
  for (int trial = 0; trial < 30; ++trial) {
    auto base = random_params(gen);
    base.eta_s = base.eta_n = 1;
    const double k = gen.uniform(0.01, 1);
    const double phi = gen.uniform(0, 2 * kPi);
    auto s = base;
    s.eta_s = k;
    auto n = base;
    n.eta_n = k;
    CHECK(std::abs(mz_coincidence(s, phi) - k * mz_coincidence(base, phi)) < 1e-12);
    CHECK(std::abs(mz_coincidence(n, phi) - k * mz_coincidence(base, phi)) < 1e-12);
    const double v = mz_visibility(base, 32).visibility;
    CHECK(std::abs(mz_visibility(s, 32).visibility - v) < 1e-12);
    CHECK(std::abs(mz_visibility(n, 32).visibility - v) < 1e-12);
  }
}

TEST_CASE("property: visibility is flat in T on the constraint line") {
  Gen gen(55);
  for (int trial = 0; trial < 10; ++trial) {
    const double p = gen.uniform(0, 1), eta_b = gen.uniform(0.1, 1), t_r = gen.uniform(0.1, 0.9);
    const double v0 = mz_visibility(on_constraint(p, eta_b, 0.5, t_r), 32).visibility;
    for (int k = 1; k <= 9; ++k)
      CHECK(std::abs(mz_visibility(on_constraint(p, eta_b, k / 10.0, t_r), 32).visibility - v0) < 1e-9);
  }
}

TEST_CASE("property: the optimum visibility grows with p") {
  double prev = 0.0;
  for (int k = 0; k <= 20; ++k) {
    const double p = k / 20.0;
    const double v = mz_visibility(on_constraint(p, 0.7, 0.4, t_r_opt(p)), 32).visibility;
    CHECK(std::abs(v - v_max(p)) < 1e-9);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("noise scaling") {
  for (auto sched : {NoiseSchedule::simultaneous, NoiseSchedule::sequential})
    CHECK(std::abs(n_noise_visibility(1, sched) - 1 / std::sqrt(2.0)) < 1e-6);
  CHECK(std::abs(n_noise_visibility(3, NoiseSchedule::simultaneous) - 0.5) < 1e-6);
  CHECK(std::abs(n_noise_visibility(2, NoiseSchedule::sequential) - 0.5) < 1e-6);
  auto r = n_noise_scan(2, NoiseSchedule::simultaneous);
  CHECK(std::abs(r.eta_star - 1.0 / 3.0) < 1e-4);
  CHECK(r.success_probability > 0.0);
  CHECK(r.success_probability <= 1.0);
  CHECK(std::abs(n_noise_scan(2, NoiseSchedule::sequential).eta_star - 0.5) < 1e-4);
  CHECK_THROWS_AS(n_noise_visibility(7, NoiseSchedule::simultaneous), DomainError);
  CHECK_THROWS_AS(n_noise_visibility(0, NoiseSchedule::sequential), DomainError);
}

TEST_CASE("two-photon interference at a splitter") {
  CHECK(std::abs(hom_coincidence(1, 0.5)) < 1e-12);
  CHECK(std::abs(hom_coincidence(0, 0.5) - 0.5) < 1e-12);
  Gen gen(56);
  for (int trial = 0; trial < 50; ++trial) {
    const double p = gen.uniform(0, 1), t = gen.uniform(0, 1);
    CHECK(std::abs(hom_coincidence(p, 0.5) - (1 - p) / 2) < 1e-12);
    CHECK(std::abs(hom_dip_visibility(p, 0.5) - p) < 1e-9);
    const double c = p * std::pow(2 * t - 1, 2) + (1 - p) * (t * t + (1 - t) * (1 - t));
    CHECK(std::abs(hom_coincidence(p, t) - c) < 1e-12);
  }
  CHECK_THROWS_AS(hom_coincidence(1.2, 0.5), DomainError);
}
