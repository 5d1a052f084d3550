// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// Measurements on the fusion spaces. Fusing a pair of sigmas inside a triple
// projects its encoded qubit onto a Pauli axis: the directly labeled pair is
// the Z axis, the F-reassociated pair is X, and the remaining pair is Y (its
// projector is obtained by conjugating with the crossing that brings the two
// anyons together). Ancilla-assisted clock POVMs are built from circuits on
// 1 + m qubits with projective readout, dilated from effect lists, and
// enumerated over the braid-reachable (Clifford) gate class.

#pragma once

#include <string>
#include <vector>

#include "chronos/braiding.hpp"
#include "chronos/fusion_space.hpp"

namespace chronos {

/// One Born-rule outcome of fusing a pair of sigmas.
struct FusionOutcome {
  std::array<int, 2> pair;  // 1-based anyon indices, ascending
  AnyonLabel charge;        // vac or psi
  double probability;
  StateVector post_state;
};

/// Probabilities and post-states of fusing anyons (i, j). Admissible pairs
/// lie inside one triple; on six anyons a pair spanning both triples is
/// rejected (the clock and system never interact). Outcomes of probability
/// below the floor are dropped.
std::vector<FusionOutcome> fuse_pair(const StateVector& state,
                                     std::array<int, 2> pair);

/// A generalized-measurement effect on the clock qubit.
struct PovmEffect {
  std::string outcome_label;  // readout bit string, clock bit first
  Mat matrix;                 // 2x2 positive semidefinite
};

/// Effects of the circuit POVM: the clock qubit enters u together with m
/// ancillas in |0...0>, all 1 + m qubits are read out in the computational
/// basis. Effect z is E_z = W^dag u^dag P_z u W with W the ancilla
/// embedding. Verifies completeness.
std::vector<PovmEffect> povm_from_circuit(const Mat& u, int m);

/// N rank-1 effects (2/N)|tau_j><tau_j| with |tau_j> equatorial at angle
/// 2 pi j / N. Complete by symmetry. Requires N >= 2.
std::vector<PovmEffect> covariant_equatorial_povm(int n_outcomes);

/// Unitary u on 1 + m qubits whose circuit POVM reproduces the given rank-1
/// effects (outcomes beyond the list read out with probability zero).
/// Requires sum E = I and effects.size() <= 2^(m+1).
Mat dilate_rank_one_povm(const std::vector<PovmEffect>& effects, int m);

/// All stabilizer states on n_qubits qubits (n <= 3), phase-canonical,
/// sorted by canonical key. Counts: 6, 60, 1080.
std::vector<Vec> stabilizer_states(int n_qubits);

/// Distinct clock effects achievable over a gate class, after trace
/// normalization; zero effects dropped. `equatorial` is the rank-1 subset on
/// the Bloch equator, ordered by angle; its size is the tick count N_max.
struct EffectCatalog {
  int ancilla_count = 0;
  std::vector<PovmEffect> effects;     // sorted by direction label
  std::vector<PovmEffect> equatorial;  // sorted by equatorial angle

  int n_distinct() const { return static_cast<int>(effects.size()); }
  int n_max() const { return static_cast<int>(equatorial.size()); }
  double delta_tau() const;
};

/// Catalog over the Clifford class on 1 + m qubits (m <= 2), via
/// stabilizer-state classification of the circuit images. Ancilla
/// preparation by further Clifford circuits composes into the same class, so
/// prepared-ancilla catalogs coincide with this one.
EffectCatalog enumerate_clifford_povms(int m);

/// Same catalog by brute-force closure of the braid-generator image (24
/// elements for m = 0, 11520 for m = 1); cross-check for the classification
/// route. Guarded to m <= 1.
EffectCatalog enumerate_clifford_povms_by_closure(int m);

}  // namespace chronos
