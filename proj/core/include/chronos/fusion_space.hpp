// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// Fusion-tree Hilbert spaces for sigma anyons. Two shapes are supported:
//
//   3 sigmas, total charge sigma: the intermediate charge a of the pair (1,2)
//   labels a qubit, a in {vac, psi} <-> {|0>, |1>}. Dimension 2.
//
//   6 sigmas, total charge vac: two triples ((s1 s2) s3) and (s4 (s5 s6)),
//   each of total charge sigma, fusing to the vacuum. The pair labels a on
//   (1,2) and a' on (5,6) form a two-qubit register (a is the most
//   significant bit). Dimension 4.
//
// Reassociating a triple with the F matrix exchanges the "z" labeling (pair
// (1,2), resp. (5,6)) for the "x" labeling (pair (2,3), resp. (4,5)).

#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "chronos/anyon_model.hpp"
#include "chronos/linalg.hpp"

namespace chronos {

struct FusionBasis {
  std::string model_name;
  int n_anyons = 0;
  AnyonLabel total_charge = AnyonLabel::vac;
  std::string tree;             // fixed fusion order, rendered
  std::string frame;            // one char per triple: 'z' or 'x'
  std::vector<std::string> state_names;

  Eigen::Index dim() const {
    return static_cast<Eigen::Index>(state_names.size());
  }
  int n_triples() const { return n_anyons / 3; }
};

/// Plain qubit register (used for decoded / conditional states).
struct QubitRegister {
  int n_qubits = 1;
  Eigen::Index dim() const { return Eigen::Index(1) << n_qubits; }
};

using BasisDesc = std::variant<FusionBasis, QubitRegister>;

struct StateVector {
  BasisDesc basis;
  Vec amplitudes;

  Eigen::Index dim() const { return amplitudes.size(); }
  bool on_fusion_basis() const {
    return std::holds_alternative<FusionBasis>(basis);
  }
  const FusionBasis& fusion_basis() const;
};

/// The canonical basis for n_anyons sigmas with the given total charge.
/// Supported shapes: (3, sigma) and (6, vac). Structurally empty labelings
/// (e.g. 3 sigmas with total vac) and shapes outside the clock construction
/// raise Error(domain).
FusionBasis standard_basis(const AnyonModelSpec& model, int n_anyons,
                           AnyonLabel total_charge);

/// Unit basis vector |index> on the given basis.
StateVector basis_state(const FusionBasis& basis, Eigen::Index index);

/// Wraps amplitudes on a basis; normalizes, rejecting near-zero vectors.
StateVector make_state(const FusionBasis& basis, Vec amplitudes);
StateVector make_state(const QubitRegister& reg, Vec amplitudes);

/// Applies F on the chosen triple's label qubit, toggling that triple's
/// frame between 'z' and 'x'. Self-inverse.
StateVector change_basis_z_to_x(const StateVector& state, int triple = 0);

/// Encodes a single-qubit state onto the 3-sigma basis (|0> = vac label,
/// |1> = psi label).
StateVector encode_qubit(const AnyonModelSpec& model, const Vec& qubit);

/// Amplitude pair (over {vac, psi}) of a dim-2 state.
std::array<cx, 2> decode_qubit(const StateVector& state);

/// Named single-qubit kets: "0", "1", "+", "-", "+i", "-i".
Vec named_ket(std::string_view name);

}  // namespace chronos
