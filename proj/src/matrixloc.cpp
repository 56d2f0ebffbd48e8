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

#include "dysonlab/matrixloc.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>

#include "dysonlab/errors.hpp"

namespace dysonlab::matrixloc {

namespace {

double quadratic_form(const Matrix& a, const Vector& v) { return v.dot(a * v).real(); }

// Reads the whole file minus comments, returns the header count and kind.
std::istringstream open_numeric(const std::filesystem::path& path, long& n, bool& is_complex) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path.string());
  std::string text, line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    text += line;
    text += '\n';
  }
  std::istringstream body(text);
  std::string kind;
  if (!(body >> n >> kind) || n < 1) throw PreconditionError(path.string() + ": bad header, expected 'N real|complex'");
  if (kind == "real") {
    is_complex = false;
  } else if (kind == "complex") {
    is_complex = true;
  } else {
    throw PreconditionError(path.string() + ": unknown entry kind '" + kind + "'");
  }
  return body;
}

Complex read_entry(std::istringstream& body, bool is_complex, const std::filesystem::path& path) {
  double re = 0.0, im = 0.0;
  if (!(body >> re) || (is_complex && !(body >> im))) {
    throw PreconditionError(path.string() + ": too few entries");
  }
  return {re, im};
}

void expect_end(std::istringstream& body, const std::filesystem::path& path) {
  std::string extra;
  if (body >> extra) throw PreconditionError(path.string() + ": trailing data '" + extra + "'");
}

}  // namespace

LocalizationProblem::LocalizationProblem(Matrix a, Vector psi, int window)
    : a_(std::move(a)), psi_(std::move(psi)), window_(window) {
  if (a_.rows() == 0 || a_.rows() != a_.cols()) throw PreconditionError("LocalizationProblem: A must be square");
  if (psi_.size() != a_.rows()) throw PreconditionError("LocalizationProblem: psi has the wrong length");
  if (window_ < 1 || window_ > a_.rows()) throw PreconditionError("LocalizationProblem: need 1 <= M <= N");
  const double scale = std::max(1.0, a_.cwiseAbs().maxCoeff());
  if ((a_ - a_.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw PreconditionError("LocalizationProblem: A is not Hermitian");
  }
  if (std::abs(psi_.norm() - 1.0) > 1e-12) throw PreconditionError("LocalizationProblem: psi must have unit norm");
}

double LocalizationResult::budget_slope() const {
  const double m2 = static_cast<double>(window) * window;
  double slope = 0.0;
  for (std::size_t k = 1; k < d.size(); ++k) {
    const double kk = static_cast<double>(k);
    slope += static_cast<int>(k) < window ? kk * kk * std::abs(d[k]) / m2 : std::abs(d[k]);
  }
  return slope;
}

double LocalizationResult::budget(double c) const { return lambda + c * budget_slope(); }

Matrix band_component(const Matrix& a, int k) {
  const int n = static_cast<int>(a.rows());
  if (k < 0 || k >= n) throw DomainError("band_component: k out of range");
  Matrix band = Matrix::Zero(n, n);
  for (int i = 0; i + k < n; ++i) {
    band(i, i + k) = a(i, i + k);
    band(i + k, i) = a(i + k, i);
  }
  return band;
}

LocalizationResult localize(const LocalizationProblem& problem) {
  const Matrix& a = problem.a();
  const Vector& psi = problem.psi();
  const int n = problem.dimension();
  const int m = problem.window();

  LocalizationResult result;
  result.window = m;
  result.lambda = quadratic_form(a, psi);
  result.d.resize(n);
  for (int k = 0; k < n; ++k) {
    // <psi, A^(k) psi> from the two off-diagonals directly.
    Complex sum = 0.0;
    for (int i = 0; i + k < n; ++i) {
      sum += std::conj(psi[i]) * a(i, i + k) * psi[i + k];
      if (k > 0) sum += std::conj(psi[i + k]) * a(i + k, i) * psi[i];
    }
    result.d[k] = sum.real();
  }

  bool found = false;
  double best = std::numeric_limits<double>::infinity();
  for (int offset = 0; offset + m <= n; ++offset) {
    const double mass = psi.segment(offset, m).norm();
    if (mass == 0.0) continue;
    const Vector local = psi.segment(offset, m) / mass;
    const double value = local.dot(a.block(offset, offset, m, m) * local).real();
    if (!found || value < best) {
      found = true;
      best = value;
      result.n = offset;
    }
  }
  if (!found) throw PreconditionError("localize: psi vanishes on every window");
  result.value = best;
  result.phi = Vector::Zero(n);
  const double mass = psi.segment(result.n, m).norm();
  result.phi.segment(result.n, m) = psi.segment(result.n, m) / mass;
  return result;
}

BudgetReport verify_budget(const LocalizationResult& result, double c) {
  if (!(c > 0.0)) throw DomainError("verify_budget: C must be positive");
  BudgetReport out;
  out.report = InequalityReport::compare(result.budget(c), result.value);
  const double excess = result.value - result.lambda;
  const double slope = result.budget_slope();
  if (excess <= 0.0) {
    out.c_required = 0.0;
  } else if (slope == 0.0) {
    out.c_required = std::numeric_limits<double>::infinity();
  } else {
    out.c_required = excess / slope;
  }
  return out;
}

Matrix read_matrix(const std::filesystem::path& path) {
  long n = 0;
  bool is_complex = false;
  auto body = open_numeric(path, n, is_complex);
  Matrix a(n, n);
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) a(i, j) = read_entry(body, is_complex, path);
  }
  expect_end(body, path);
  return a;
}

Vector read_vector(const std::filesystem::path& path) {
  long n = 0;
  bool is_complex = false;
  auto body = open_numeric(path, n, is_complex);
  Vector v(n);
  for (long i = 0; i < n; ++i) v[i] = read_entry(body, is_complex, path);
  expect_end(body, path);
  return v;
}

}  // namespace dysonlab::matrixloc
