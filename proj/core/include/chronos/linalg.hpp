// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// Dense complex linear algebra helpers shared across the library: Pauli
// matrices, Kronecker products, global-phase canonicalization with hashable
// quantized keys, principal logarithms of unitaries, and Bloch-sphere
// coordinates for qubit states.

#pragma once

#include <array>
#include <string>

#include <Eigen/Dense>

#include "chronos/common.hpp"

namespace chronos {

using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;

Mat identity(Eigen::Index n);
Mat pauli_x();
Mat pauli_y();
Mat pauli_z();

/// Kronecker product, row-major qubit ordering (first factor is the most
/// significant qubit).
Mat kron(const Mat& a, const Mat& b);
Vec kron(const Vec& a, const Vec& b);

/// Named single-qubit states.
Vec ket0();
Vec ket1();
Vec ket_plus();
Vec ket_minus();
Vec ket_plus_i();
Vec ket_minus_i();

/// diag(e^{+i phi/2}, e^{-i phi/2}); advances the equatorial phase clockwise
/// in the |0>,|1> relative phase.
Mat rot_z(double phi);

double max_abs(const Mat& m);
bool is_unitary(const Mat& u, double tolerance = tol::unitary);
double unitarity_residual(const Mat& u);

/// |<a|b>|^2 for unit vectors.
double fidelity(const Vec& a, const Vec& b);

/// Rescales so the first entry with magnitude above `eps` (row-major scan)
/// becomes real and positive. Collapses the global-phase freedom of states
/// and gates to a unique representative.
Mat phase_canonical(const Mat& m, double eps = tol::dedup);
Vec phase_canonical(const Vec& v, double eps = tol::dedup);

/// Hashable key for a phase-canonicalized matrix: every entry's real and
/// imaginary parts are quantized separately at the dedup tolerance. Two
/// matrices equal up to global phase and rounding produce the same key.
std::string canonical_key(const Mat& m, double eps = tol::dedup);
std::string canonical_key(const Vec& v, double eps = tol::dedup);

/// Hermitian H with V = exp(-iH), eigenphases taken in (-pi, pi]. Throws
/// Error(numerical) if V is not unitary within `tolerance`.
Mat principal_hamiltonian(const Mat& v, double tolerance = tol::unitary);

/// (x, y, z) Bloch coordinates of a unit 2-vector.
std::array<double, 3> bloch_vector(const Vec& v);

/// Bloch coordinates of a 2x2 Hermitian matrix: M = (tr(M) I + x X + y Y +
/// z Z)/2, returned as {x, y, z}.
std::array<double, 3> bloch_vector(const Mat& m);

}  // namespace chronos
