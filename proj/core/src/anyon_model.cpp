// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/anyon_model.hpp"

#include <cmath>

namespace chronos {

namespace {

constexpr std::array<AnyonLabel, 3> kLabels = {AnyonLabel::vac,
                                              AnyonLabel::sigma,
                                              AnyonLabel::psi};

}  // namespace

const char* to_string(AnyonLabel label) noexcept {
  switch (label) {
    case AnyonLabel::vac: return "vac";
    case AnyonLabel::sigma: return "sigma";
    case AnyonLabel::psi: return "psi";
  }
  return "invalid";
}

AnyonLabel anyon_label_from_string(std::string_view name) {
  if (name == "vac") return AnyonLabel::vac;
  if (name == "sigma") return AnyonLabel::sigma;
  if (name == "psi") return AnyonLabel::psi;
  throw Error(ErrorCode::invalid_argument,
              "unknown anyon label: " + std::string(name));
}

int FusionRuleTable::index(AnyonLabel a, AnyonLabel b, AnyonLabel c) {
  const int ia = static_cast<int>(a);
  const int ib = static_cast<int>(b);
  const int ic = static_cast<int>(c);
  if (ia < 0 || ia > 2 || ib < 0 || ib > 2 || ic < 0 || ic > 2) {
    throw Error(ErrorCode::invalid_argument, "anyon label out of range");
  }
  return ia * 9 + ib * 3 + ic;
}

bool FusionRuleTable::allowed(AnyonLabel a, AnyonLabel b, AnyonLabel c) const {
  return table_[index(a, b, c)];
}

void FusionRuleTable::set(AnyonLabel a, AnyonLabel b, AnyonLabel c,
                          bool value) {
  table_[index(a, b, c)] = value;
}

std::vector<AnyonLabel> FusionRuleTable::channels(AnyonLabel a,
                                                  AnyonLabel b) const {
  std::vector<AnyonLabel> out;
  for (AnyonLabel c : kLabels) {
    if (allowed(a, b, c)) out.push_back(c);
  }
  return out;
}

FusionRuleTable FusionRuleTable::su2_level2() {
  FusionRuleTable t;
  auto both = [&t](AnyonLabel a, AnyonLabel b, AnyonLabel c) {
    t.set(a, b, c, true);
    t.set(b, a, c, true);
  };
  for (AnyonLabel a : kLabels) both(AnyonLabel::vac, a, a);
  both(AnyonLabel::sigma, AnyonLabel::sigma, AnyonLabel::vac);
  both(AnyonLabel::sigma, AnyonLabel::sigma, AnyonLabel::psi);
  both(AnyonLabel::sigma, AnyonLabel::psi, AnyonLabel::sigma);
  both(AnyonLabel::psi, AnyonLabel::psi, AnyonLabel::vac);
  return t;
}

double AnyonModelSpec::quantum_dim(AnyonLabel label) const {
  for (size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return quantum_dims[i];
  }
  throw Error(ErrorCode::invalid_argument,
              std::string("label not in model: ") + to_string(label));
}

cx AnyonModelSpec::r_phase(AnyonLabel channel) const {
  switch (channel) {
    case AnyonLabel::vac: return r_matrix(0, 0);
    case AnyonLabel::psi: return r_matrix(1, 1);
    default:
      throw Error(ErrorCode::invalid_argument,
                  "r_phase: channel must be vac or psi");
  }
}

AnyonModelSpec su2_level2() {
  AnyonModelSpec spec;
  spec.name = "su2_2";
  spec.labels = {AnyonLabel::vac, AnyonLabel::sigma, AnyonLabel::psi};
  spec.quantum_dims = {1.0, std::sqrt(2.0), 1.0};
  spec.rules = FusionRuleTable::su2_level2();
  spec.f_matrix = Mat(2, 2);
  spec.f_matrix << 1, 1, 1, -1;
  spec.f_matrix /= std::sqrt(2.0);
  spec.r_matrix = Mat::Zero(2, 2);
  spec.r_matrix(0, 0) = cx(1, 0);
  spec.r_matrix(1, 1) = cx(0, 1);
  return spec;
}

AnyonModelSpec ising_variant() {
  AnyonModelSpec spec = su2_level2();
  spec.name = "ising";
  spec.r_matrix = cx(0, 1) * spec.r_matrix.adjoint();
  return spec;
}

AnyonModelSpec model_by_name(std::string_view name) {
  if (name == "su2_2") return su2_level2();
  if (name == "ising") return ising_variant();
  throw Error(ErrorCode::invalid_argument,
              "unknown model name: " + std::string(name));
}

ValidationReport validate_model(const AnyonModelSpec& spec) {
  ValidationReport report;

  bool commutative = true;
  for (AnyonLabel a : kLabels) {
    for (AnyonLabel b : kLabels) {
      for (AnyonLabel c : kLabels) {
        if (spec.rules.allowed(a, b, c) != spec.rules.allowed(b, a, c)) {
          commutative = false;
        }
      }
    }
  }
  report.add("fusion_commutative", commutative);

  bool vacuum_identity = true;
  for (AnyonLabel a : kLabels) {
    for (AnyonLabel c : kLabels) {
      const bool expected = (a == c);
      if (spec.rules.allowed(AnyonLabel::vac, a, c) != expected) {
        vacuum_identity = false;
      }
    }
  }
  report.add("vacuum_identity", vacuum_identity);

  // N_{(ab)c}^d == N_{a(bc)}^d summed over the intermediate channel.
  bool associative = true;
  for (AnyonLabel a : kLabels) {
    for (AnyonLabel b : kLabels) {
      for (AnyonLabel c : kLabels) {
        for (AnyonLabel d : kLabels) {
          int left = 0;
          int right = 0;
          for (AnyonLabel e : kLabels) {
            left += spec.rules.allowed(a, b, e) && spec.rules.allowed(e, c, d);
            right += spec.rules.allowed(b, c, e) && spec.rules.allowed(a, e, d);
          }
          if (left != right) associative = false;
        }
      }
    }
  }
  report.add("fusion_associative", associative);

  // d_a d_b = sum_c N_ab^c d_c.
  double dim_residual = 0.0;
  for (AnyonLabel a : kLabels) {
    for (AnyonLabel b : kLabels) {
      double rhs = 0.0;
      for (AnyonLabel c : kLabels) {
        if (spec.rules.allowed(a, b, c)) rhs += spec.quantum_dim(c);
      }
      dim_residual = std::max(
          dim_residual,
          std::abs(spec.quantum_dim(a) * spec.quantum_dim(b) - rhs));
    }
  }
  report.add("quantum_dims_consistent", dim_residual <= tol::exact_phase,
             dim_residual);

  const double f_unitary = unitarity_residual(spec.f_matrix);
  report.add("f_unitary", f_unitary <= tol::exact_phase, f_unitary);

  const double f_self_inverse =
      max_abs(spec.f_matrix * spec.f_matrix - Mat::Identity(2, 2));
  report.add("f_self_inverse", f_self_inverse <= tol::exact_phase,
             f_self_inverse);

  const double r_unitary = unitarity_residual(spec.r_matrix);
  report.add("r_unitary", r_unitary <= tol::exact_phase, r_unitary);

  const double r_diag =
      std::max(std::abs(spec.r_matrix(0, 1)), std::abs(spec.r_matrix(1, 0)));
  report.add("r_diagonal", r_diag == 0.0, r_diag);

  return report;
}

}  // namespace chronos
