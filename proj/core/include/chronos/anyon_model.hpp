// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// Anyon theories as data: particle labels, multiplicity-free fusion rules,
// and the F / R matrices for a sigma-sigma-sigma reassociation. Ships the
// SU(2) level-2 instance and its Ising variant, which share F and differ by
// the exchange-phase convention R -> i R^dag.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chronos/linalg.hpp"
#include "chronos/validation.hpp"

namespace chronos {

enum class AnyonLabel : int {
  vac = 0,
  sigma = 1,
  psi = 2,
};

const char* to_string(AnyonLabel label) noexcept;
AnyonLabel anyon_label_from_string(std::string_view name);

/// Multiplicity-free fusion rules: allowed(a, b, c) means c appears in a x b.
class FusionRuleTable {
 public:
  static FusionRuleTable su2_level2();

  bool allowed(AnyonLabel a, AnyonLabel b, AnyonLabel c) const;
  std::vector<AnyonLabel> channels(AnyonLabel a, AnyonLabel b) const;

  void set(AnyonLabel a, AnyonLabel b, AnyonLabel c, bool value);

 private:
  static int index(AnyonLabel a, AnyonLabel b, AnyonLabel c);
  std::array<bool, 27> table_{};
};

/// A concrete anyon theory. f_matrix and r_matrix are written over the
/// two-dimensional channel space {vac, psi} of a sigma-sigma pair.
struct AnyonModelSpec {
  std::string name;
  std::vector<AnyonLabel> labels;
  std::vector<double> quantum_dims;  // aligned with labels
  FusionRuleTable rules;
  Mat f_matrix;  // reassociation of three sigmas, unitary, here self-inverse
  Mat r_matrix;  // diagonal exchange phases diag(r_vac, r_psi)

  double quantum_dim(AnyonLabel label) const;
  cx r_phase(AnyonLabel channel) const;
};

/// F = (1/sqrt(2))[[1,1],[1,-1]], R = diag(1, i).
AnyonModelSpec su2_level2();

/// Same F; R replaced by i R^dag = diag(i, 1).
AnyonModelSpec ising_variant();

/// Lookup by spec name: "su2_2" or "ising".
AnyonModelSpec model_by_name(std::string_view name);

/// Structural checks: commutativity, vacuum identity, associativity,
/// quantum-dimension consistency, F/R unitarity, F self-inverse.
ValidationReport validate_model(const AnyonModelSpec& spec);

}  // namespace chronos
