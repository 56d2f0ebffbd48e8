// Copyright 2026 The dysonlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "doctest.h"
#include "dysonlab/errors.hpp"
#include "dysonlab/matrixloc.hpp"
#include "dysonlab/random.hpp"
#include "oracle_values.hpp"

using namespace dysonlab;
using namespace dysonlab::matrixloc;

namespace {

Matrix second_difference(int n) {
  Matrix a = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a(i, i) = 2.0;
    if (i + 1 < n) a(i, i + 1) = a(i + 1, i) = -1.0;
  }
  return a;
}

Matrix random_hermitian(int n, Engine& rng) {
  Matrix g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  }
  return 0.5 * (g + g.adjoint());
}

Vector random_unit(int n, Engine& rng) {
  Vector v(n);
  for (int i = 0; i < n; ++i) v[i] = Complex(normal(rng), normal(rng));
  return v / v.norm();
}

// Smallest restricted Rayleigh quotient over all windows, recomputed entrywise.
double brute_force(const Matrix& a, const Vector& psi, int m, int& offset) {
  double best = std::numeric_limits<double>::infinity();
  const int n = static_cast<int>(a.rows());
  for (int s = 0; s + m <= n; ++s) {
    double mass = 0.0;
    for (int i = s; i < s + m; ++i) mass += std::norm(psi[i]);
    if (mass == 0.0) continue;
    Complex q = 0.0;
    for (int i = s; i < s + m; ++i) {
      for (int j = s; j < s + m; ++j) q += std::conj(psi[i]) * a(i, j) * psi[j];
    }
    if (q.real() / mass < best) {
      best = q.real() / mass;
      offset = s;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("second-difference oracle") {
  const Vector psi = Vector::Constant(8, 1.0 / std::sqrt(8.0));
  const auto r = localize(LocalizationProblem(second_difference(8), psi, 4));
  CHECK(r.n == static_cast<int>(oracle::kLocalizeOffset));
  CHECK(r.value == doctest::Approx(oracle::kLocalizeValue).epsilon(1e-14));
  CHECK(r.lambda == doctest::Approx(oracle::kLocalizeLambda).epsilon(1e-14));
  const auto b = verify_budget(r, 50.0);
  CHECK(b.c_required == doctest::Approx(oracle::kLocalizeCRequired).epsilon(1e-13));
  CHECK(b.report.holds);
  CHECK_FALSE(verify_budget(r, 0.5 * oracle::kLocalizeCRequired).report.holds);
}

TEST_CASE("problem validation") {
  Matrix a = second_difference(4);
  const Vector psi = Vector::Constant(4, 0.5);
  CHECK_THROWS_AS(LocalizationProblem(a, psi, 0), PreconditionError);
  CHECK_THROWS_AS(LocalizationProblem(a, psi, 5), PreconditionError);
  CHECK_THROWS_AS(LocalizationProblem(a, 2.0 * psi, 2), PreconditionError);
  a(0, 1) = 3.0;
  CHECK_THROWS_AS(LocalizationProblem(a, psi, 2), PreconditionError);
}

TEST_CASE("band decomposition is exact") {
  Engine rng(1);
  const Matrix a = random_hermitian(10, rng);
  Matrix sum = Matrix::Zero(10, 10);
  for (int k = 0; k < 10; ++k) sum += band_component(a, k);
  CHECK((sum - a).cwiseAbs().maxCoeff() == 0.0);
  const Vector psi = random_unit(10, rng);
  const auto r = localize(LocalizationProblem(a, psi, 3));
  CHECK(std::abs(std::accumulate(r.d.begin(), r.d.end(), 0.0) - r.lambda) <= 1e-10);
  for (int k = 0; k < 10; ++k) {
    CHECK(std::abs((psi.dot(band_component(a, k) * psi)).real() - r.d[k]) <= 1e-12);
  }
}

TEST_CASE("full window gives lambda") {
  Engine rng(2);
  const Matrix a = random_hermitian(6, rng);
  const Vector psi = random_unit(6, rng);
  const auto r = localize(LocalizationProblem(a, psi, 6));
  CHECK(r.n == 0);
  CHECK(std::abs(r.value - r.lambda) <= 1e-12);
  CHECK(verify_budget(r, 1e-6).report.holds);
}

TEST_CASE("diagonal matrices need no budget") {
  Engine rng(3);
  Matrix a = Matrix::Zero(12, 12);
  for (int i = 0; i < 12; ++i) a(i, i) = normal(rng);
  const auto r = localize(LocalizationProblem(a, random_unit(12, rng), 4));
  for (int k = 1; k < 12; ++k) CHECK(r.d[k] == 0.0);
  CHECK(r.budget(7.0) == r.lambda);
  CHECK(r.value <= r.lambda + 1e-14);
  CHECK(verify_budget(r, 1e-3).report.holds);
  CHECK(verify_budget(r, 1e-3).c_required == 0.0);
}

TEST_CASE("localize is the exhaustive optimum") {
  Engine rng(4);
  for (int t = 0; t < 50; ++t) {
    const int n = uniform_int(rng, 2, 20);
    const int m = uniform_int(rng, 1, n);
    const Matrix a = random_hermitian(n, rng);
    const Vector psi = random_unit(n, rng);
    const auto r = localize(LocalizationProblem(a, psi, m));
    int offset = -1;
    const double best = brute_force(a, psi, m, offset);
    CHECK(std::abs(r.value - best) <= 1e-12 * std::max(1.0, std::abs(best)));
    CHECK(r.n == offset);
    CHECK(r.phi.norm() == doctest::Approx(1.0).epsilon(1e-14));
    for (int i = 0; i < n; ++i) {
      if (i < r.n || i >= r.n + m) CHECK(r.phi[i] == Complex(0.0));
    }
  }
}

TEST_CASE("zero-mass windows are skipped") {
  Vector psi = Vector::Zero(6);
  psi[5] = 1.0;
  const auto r = localize(LocalizationProblem(second_difference(6), psi, 2));
  CHECK(r.n == 4);
  CHECK(r.value == doctest::Approx(2.0));
}

TEST_CASE("shift covariance") {
  Engine rng(5);
  const int n = 16, m = 4, shift = 3;
  Matrix a = Matrix::Zero(n, n);
  Vector psi = Vector::Zero(n);
  // Supported on the first n - shift indices so the shift never wraps.
  const Matrix core = random_hermitian(n - shift, rng);
  a.topLeftCorner(n - shift, n - shift) = core;
  psi.head(n - shift) = random_unit(n - shift, rng);
  Matrix sa = Matrix::Zero(n, n);
  Vector spsi = Vector::Zero(n);
  sa.bottomRightCorner(n - shift, n - shift) = core;
  spsi.tail(n - shift) = psi.head(n - shift);
  const auto r = localize(LocalizationProblem(a, psi, m));
  const auto s = localize(LocalizationProblem(sa, spsi, m));
  CHECK(s.n == r.n + shift);
  CHECK(std::abs(s.value - r.value) <= 1e-13);
}

TEST_CASE("matrix and vector files") {
  const auto dir = std::filesystem::temp_directory_path() / "dysonlab_matrixloc_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream m(dir / "a.txt");
    m << "# second difference\n3 real\n2 -1 0\n-1 2 -1\n0 -1 2\n";
    std::ofstream v(dir / "psi.txt");
    v << "3 complex\n1 0\n0 0\n0 0\n";
    std::ofstream bad(dir / "bad.txt");
    bad << "2 real\n1 2\n3\n";
  }
  const Matrix a = read_matrix(dir / "a.txt");
  CHECK((a - second_difference(3)).cwiseAbs().maxCoeff() == 0.0);
  const Vector psi = read_vector(dir / "psi.txt");
  CHECK(psi[0] == Complex(1.0, 0.0));
  CHECK(localize(LocalizationProblem(a, psi, 1)).value == 2.0);
  CHECK_THROWS(read_matrix(dir / "bad.txt"));
  CHECK_THROWS(read_matrix(dir / "missing.txt"));
  std::filesystem::remove_all(dir);
}
