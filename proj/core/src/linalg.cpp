// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/linalg.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>

#include <Eigen/Eigenvalues>

namespace chronos {

namespace {

constexpr cx kI{0.0, 1.0};

// Zero tiny components so canonicalized entries quantize stably.
double chop(double x, double eps) { return std::abs(x) < eps ? 0.0 : x; }

}  // namespace

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_argument: return "invalid_argument";
    case ErrorCode::domain: return "domain";
    case ErrorCode::numerical: return "numerical";
    case ErrorCode::budget: return "budget";
    case ErrorCode::consumed: return "consumed";
    case ErrorCode::non_stationary: return "non_stationary";
    case ErrorCode::zero_probability: return "zero_probability";
    case ErrorCode::io: return "io";
  }
  return "unknown";
}

Mat identity(Eigen::Index n) { return Mat::Identity(n, n); }

Mat pauli_x() {
  Mat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Mat pauli_y() {
  Mat m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Mat pauli_z() {
  Mat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vec kron(const Vec& a, const Vec& b) {
  Vec out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

Vec ket0() {
  Vec v(2);
  v << 1, 0;
  return v;
}

Vec ket1() {
  Vec v(2);
  v << 0, 1;
  return v;
}

Vec ket_plus() {
  Vec v(2);
  v << 1, 1;
  return v / std::sqrt(2.0);
}

Vec ket_minus() {
  Vec v(2);
  v << 1, -1;
  return v / std::sqrt(2.0);
}

Vec ket_plus_i() {
  Vec v(2);
  v << cx(1, 0), kI;
  return v / std::sqrt(2.0);
}

Vec ket_minus_i() {
  Vec v(2);
  v << cx(1, 0), -kI;
  return v / std::sqrt(2.0);
}

Mat rot_z(double phi) {
  Mat m = Mat::Zero(2, 2);
  m(0, 0) = std::exp(kI * (phi / 2.0));
  m(1, 1) = std::exp(-kI * (phi / 2.0));
  return m;
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

double unitarity_residual(const Mat& u) {
  return max_abs(u.adjoint() * u - Mat::Identity(u.cols(), u.cols()));
}

bool is_unitary(const Mat& u, double tolerance) {
  if (u.rows() != u.cols()) return false;
  return unitarity_residual(u) <= tolerance;
}

double fidelity(const Vec& a, const Vec& b) {
  const cx overlap = a.dot(b);
  return std::norm(overlap);
}

Mat phase_canonical(const Mat& m, double eps) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double mag = std::abs(m(i, j));
      if (mag > eps) {
        const cx phase = m(i, j) / mag;
        return m / phase;
      }
    }
  }
  return m;
}

Vec phase_canonical(const Vec& v, double eps) {
  Mat m = phase_canonical(Mat(v), eps);
  return Vec(m.col(0));
}

namespace {

std::string quantized_key(const Mat& canon, double eps) {
  // Real and imaginary parts are quantized independently; folding them into a
  // single rounded value caused distinct gates to collide in an earlier
  // attempt.
  std::string key;
  key.reserve(static_cast<size_t>(canon.size()) * 2 * sizeof(std::int64_t) + 16);
  const double scale = 1.0 / eps;
  auto push = [&key](std::int64_t q) {
    char buf[sizeof q];
    std::memcpy(buf, &q, sizeof q);
    key.append(buf, sizeof q);
  };
  push(canon.rows());
  push(canon.cols());
  for (Eigen::Index i = 0; i < canon.rows(); ++i) {
    for (Eigen::Index j = 0; j < canon.cols(); ++j) {
      push(std::llround(chop(canon(i, j).real(), eps / 2) * scale));
      push(std::llround(chop(canon(i, j).imag(), eps / 2) * scale));
    }
  }
  return key;
}

}  // namespace

std::string canonical_key(const Mat& m, double eps) {
  return quantized_key(phase_canonical(m, eps), eps);
}

std::string canonical_key(const Vec& v, double eps) {
  return quantized_key(Mat(phase_canonical(v, eps)), eps);
}

Mat principal_hamiltonian(const Mat& v, double tolerance) {
  if (!is_unitary(v, tolerance)) {
    throw Error(ErrorCode::numerical,
                "principal_hamiltonian: input is not unitary (residual " +
                    std::to_string(unitarity_residual(v)) + ")");
  }
  // A unitary is normal, so its Schur form is diagonal and the Schur vectors
  // are an orthonormal eigenbasis.
  Eigen::ComplexSchur<Mat> schur(v);
  const Mat q = schur.matrixU();
  const Mat t = schur.matrixT();
  Mat h = Mat::Zero(v.rows(), v.cols());
  for (Eigen::Index i = 0; i < v.rows(); ++i) {
    // V = exp(-iH): an eigenphase e^{i a} with a in (-pi, pi] contributes -a.
    h(i, i) = -std::arg(t(i, i));
  }
  Mat out = q * h * q.adjoint();
  return (out + out.adjoint()) / 2.0;
}

std::array<double, 3> bloch_vector(const Vec& v) {
  if (v.size() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "bloch_vector: expected a 2-component state");
  }
  Mat rho = v * v.adjoint();
  return bloch_vector(rho);
}

std::array<double, 3> bloch_vector(const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "bloch_vector: expected a 2x2 matrix");
  }
  return {
      (m * pauli_x()).trace().real(),
      (m * pauli_y()).trace().real(),
      (m * pauli_z()).trace().real(),
  };
}

}  // namespace chronos
