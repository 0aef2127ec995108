#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "phasemass/repcheck.hpp"
#include "phasemass/rng.hpp"

using namespace phasemass;

namespace {

bool close(const SpinGenerator& a, const SpinGenerator& b, double tol = 1e-12) {
  return a.distance(b) <= tol;
}

// Random unit traceless generator, deterministic per index.
SpinGenerator random_unit_generator(std::uint64_t index) {
  CounterRng rng(777, index);
  double b[3];
  double n = 0.0;
  do {
    n = 0.0;
    for (auto& c : b) {
      c = rng.next_gaussian();
      n += c * c;
    }
    n = std::sqrt(n);
  } while (n < 1e-6);
  return SpinGenerator::axis(b[0] / n, b[1] / n, b[2] / n);
}

}  // namespace

TEST_CASE("generator matrices multiply like 2x2 complex matrices") {
  // Hand-checked product: J1 J2 has entries (-i/4, 0; 0, +i/4).
  const Mat2 p = mat_j1() * mat_j2();
  CHECK(std::abs(p.m[0] - Complex(0, -0.25)) < 1e-15);
  CHECK(std::abs(p.m[1]) < 1e-15);
  CHECK(std::abs(p.m[2]) < 1e-15);
  CHECK(std::abs(p.m[3] - Complex(0, 0.25)) < 1e-15);
}

TEST_CASE("bracket relations close cyclically") {
  CHECK(close(commutator(SpinGenerator::j1(), SpinGenerator::j2()),
              SpinGenerator::j3()));
  CHECK(close(commutator(SpinGenerator::j2(), SpinGenerator::j3()),
              SpinGenerator::j1()));
  CHECK(close(commutator(SpinGenerator::j3(), SpinGenerator::j1()),
              SpinGenerator::j2()));
  CHECK(commutator(SpinGenerator::j1(), SpinGenerator::j1()).norm() == 0.0);
  CHECK(commutator(SpinGenerator::identity(), SpinGenerator::j3()).norm() == 0.0);
}

TEST_CASE("each generator is anti-Hermitian with J'J = I/4") {
  for (const auto& g :
       {SpinGenerator::j1(), SpinGenerator::j2(), SpinGenerator::j3()}) {
    const Mat2 m = g.matrix();
    CHECK((m.adjoint() + m).max_abs() < 1e-15);
    const Mat2 q = m.adjoint() * m;
    CHECK(std::abs(q.m[0] - Complex(0.25, 0)) < 1e-15);
    CHECK(std::abs(q.m[1]) < 1e-15);
    CHECK(std::abs(q.m[2]) < 1e-15);
    CHECK(std::abs(q.m[3] - Complex(0.25, 0)) < 1e-15);
  }
}

TEST_CASE("coefficient projection round-trips") {
  for (std::uint64_t i = 0; i < 20; ++i) {
    CounterRng rng(5, i);
    const SpinGenerator g{rng.next_gaussian(), rng.next_gaussian(),
                          rng.next_gaussian(), rng.next_gaussian()};
    const SpinGenerator back = SpinGenerator::from_matrix(g.matrix());
    CHECK(close(back, g, 1e-14));
    CHECK(SpinGenerator::projection_residual(g.matrix()) < 1e-14);
  }
}

TEST_CASE("projection residual flags matrices outside the generator span") {
  // A Hermitian Pauli matrix is not a real combination of I and the J's.
  Mat2 sigma1;
  sigma1.m = {Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(0, 0)};
  CHECK(SpinGenerator::projection_residual(sigma1) > 0.5);
}

TEST_CASE("commuting with a plane generator forces the same axis") {
  const auto res = solve_fourth_plane(SpinGenerator::j3());
  REQUIRE(res.feasible);
  REQUIRE(res.solutions.size() == 2);
  CHECK(res.residual == 0.0);
  CHECK(close(res.solutions[0], SpinGenerator::j3()));
  CHECK(close(res.solutions[1], SpinGenerator::j3().negated()));

  // Same statement for a different axis label.
  const auto res1 = solve_fourth_plane(SpinGenerator::j1());
  REQUIRE(res1.solutions.size() == 2);
  CHECK(close(res1.solutions[0], SpinGenerator::j1()));
}

TEST_CASE("fourth-plane solutions commute and share normalization") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const SpinGenerator g = random_unit_generator(i);
    const auto res = solve_fourth_plane(g);
    REQUIRE(res.feasible);
    REQUIRE(res.solutions.size() == 2);
    for (const auto& s : res.solutions) {
      CHECK(commutator(s, g).norm() < 1e-12);
      const Mat2 lhs = s.matrix().adjoint() * s.matrix();
      const Mat2 rhs = g.matrix().adjoint() * g.matrix();
      CHECK((lhs - rhs).max_abs() < 1e-12);
    }
  }
}

TEST_CASE("solve_fourth_plane rejects bad generators") {
  CHECK_THROWS_AS(solve_fourth_plane(SpinGenerator{0.5, 0, 0, 1}),
                  InvalidGenerator);
  CHECK_THROWS_AS(solve_fourth_plane(SpinGenerator::axis(0, 0, 2)),
                  InvalidGenerator);
  CHECK_THROWS_AS(solve_fourth_plane(SpinGenerator::axis(0, 0, 0)),
                  InvalidGenerator);
}

TEST_CASE("excluding both signs empties the solution set") {
  const auto res = solve_fourth_plane(
      SpinGenerator::j3(),
      {SpinGenerator::j3(), SpinGenerator::j3().negated()});
  CHECK_FALSE(res.feasible);
  CHECK(res.solutions.empty());
  CHECK(res.residual > 1e-4);  // admissible grid points all fail to commute
}

TEST_CASE("a fifth independent plane is infeasible") {
  const auto res = check_fifth_plane(SpinGenerator::j3(), SpinGenerator::j3());
  CHECK_FALSE(res.feasible);
  CHECK(res.solutions.empty());
  // The joint violation is bounded below by 1/2 and the bound is attained.
  CHECK(res.residual >= 0.5 - 1e-9);
  CHECK(res.residual <= 0.51);

  const auto neg =
      check_fifth_plane(SpinGenerator::j3(), SpinGenerator::j3().negated());
  CHECK_FALSE(neg.feasible);
  CHECK(neg.residual >= 0.5 - 1e-9);
}

TEST_CASE("check_fifth_plane requires a fourth-plane solution") {
  CHECK_THROWS_AS(check_fifth_plane(SpinGenerator::j3(), SpinGenerator::j1()),
                  InvalidGenerator);
  CHECK_THROWS_AS(check_fifth_plane(SpinGenerator::axis(0, 0, 2),
                                    SpinGenerator::axis(0, 0, 2)),
                  InvalidGenerator);
}

TEST_CASE("no grid direction satisfies both fifth-plane constraints") {
  // Brute-force restatement, independent of the library's search: scan unit
  // directions and confirm the joint violation never drops below 1e-6.
  const SpinGenerator g = SpinGenerator::j3();
  double best = 1e9;
  const std::size_t n = 10'000;
  const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < n; ++i) {
    const double z = 1.0 - 2.0 * (i + 0.5) / static_cast<double>(n);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double a = golden * static_cast<double>(i);
    const SpinGenerator x =
        SpinGenerator::axis(r * std::cos(a), r * std::sin(a), z);
    const double v =
        std::max(commutator(x, g).norm(), 1.0 - commutator(x, g).norm());
    best = std::min(best, v);
  }
  CHECK(best > 1e-6);
  CHECK(best >= 0.5 - 1e-9);  // the max(s, 1-s) structure bounds it by 1/2
}

TEST_CASE("fifth-plane infeasibility holds for arbitrary unit generators") {
  for (std::uint64_t i = 0; i < 10; ++i) {
    const SpinGenerator g = random_unit_generator(i + 100);
    const auto res = check_fifth_plane(g, g);
    CHECK_FALSE(res.feasible);
    CHECK(res.residual >= 0.5 - 1e-9);
    CHECK(res.residual <= 0.51);
  }
}
