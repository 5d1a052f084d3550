// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/fusion_space.hpp"

#include <cmath>

namespace chronos {

namespace {

// Number of fusion paths of n sigmas with the given total charge, used to
// distinguish "structurally empty" from "unsupported shape" in errors.
int path_count(const AnyonModelSpec& model, int n, AnyonLabel total) {
  std::array<int, 3> weight{0, 0, 0};
  weight[static_cast<int>(AnyonLabel::sigma)] = 1;
  for (int k = 1; k < n; ++k) {
    std::array<int, 3> next{0, 0, 0};
    for (int a = 0; a < 3; ++a) {
      if (weight[a] == 0) continue;
      for (AnyonLabel c : model.rules.channels(static_cast<AnyonLabel>(a),
                                               AnyonLabel::sigma)) {
        next[static_cast<int>(c)] += weight[a];
      }
    }
    weight = next;
  }
  return weight[static_cast<int>(total)];
}

}  // namespace

const FusionBasis& StateVector::fusion_basis() const {
  if (!on_fusion_basis()) {
    throw Error(ErrorCode::invalid_argument,
                "state does not live on a fusion basis");
  }
  return std::get<FusionBasis>(basis);
}

FusionBasis standard_basis(const AnyonModelSpec& model, int n_anyons,
                           AnyonLabel total_charge) {
  if (n_anyons != 3 && n_anyons != 6) {
    throw Error(ErrorCode::invalid_argument,
                "standard_basis: supported anyon counts are 3 and 6, got " +
                    std::to_string(n_anyons));
  }
  if (path_count(model, n_anyons, total_charge) == 0) {
    throw Error(ErrorCode::domain,
                std::string("standard_basis: no admissible labeling of ") +
                    std::to_string(n_anyons) + " sigmas with total charge " +
                    to_string(total_charge) + " (empty basis)");
  }

  FusionBasis basis;
  basis.model_name = model.name;
  basis.n_anyons = n_anyons;
  basis.total_charge = total_charge;

  if (n_anyons == 3) {
    if (total_charge != AnyonLabel::sigma) {
      throw Error(ErrorCode::domain,
                  "standard_basis: three sigmas only carry total charge "
                  "sigma in this construction");
    }
    basis.tree = "((1 2) 3)";
    basis.frame = "z";
    basis.state_names = {"vac", "psi"};
    return basis;
  }

  if (total_charge != AnyonLabel::vac) {
    throw Error(ErrorCode::domain,
                "standard_basis: the six-sigma shape is two triples fusing "
                "to the vacuum; other total charges are not modeled");
  }
  basis.tree = "(((1 2) 3) (4 (5 6)))";
  basis.frame = "zz";
  for (const char* a : {"vac", "psi"}) {
    for (const char* b : {"vac", "psi"}) {
      basis.state_names.push_back(std::string(a) + "," + b);
    }
  }
  return basis;
}

StateVector basis_state(const FusionBasis& basis, Eigen::Index index) {
  if (index < 0 || index >= basis.dim()) {
    throw Error(ErrorCode::invalid_argument,
                "basis_state: index " + std::to_string(index) +
                    " out of range for dim " + std::to_string(basis.dim()));
  }
  Vec amps = Vec::Zero(basis.dim());
  amps(index) = 1.0;
  return StateVector{basis, std::move(amps)};
}

namespace {

Vec normalized_or_throw(Vec amplitudes, Eigen::Index expected_dim) {
  if (amplitudes.size() != expected_dim) {
    throw Error(ErrorCode::invalid_argument,
                "make_state: amplitude count " +
                    std::to_string(amplitudes.size()) +
                    " does not match basis dim " +
                    std::to_string(expected_dim));
  }
  const double norm = amplitudes.norm();
  if (norm < std::sqrt(tol::probability)) {
    throw Error(ErrorCode::invalid_argument,
                "make_state: near-zero amplitude vector");
  }
  return amplitudes / norm;
}

}  // namespace

StateVector make_state(const FusionBasis& basis, Vec amplitudes) {
  return StateVector{basis, normalized_or_throw(std::move(amplitudes),
                                                basis.dim())};
}

StateVector make_state(const QubitRegister& reg, Vec amplitudes) {
  return StateVector{reg, normalized_or_throw(std::move(amplitudes),
                                              reg.dim())};
}

StateVector change_basis_z_to_x(const StateVector& state, int triple) {
  const FusionBasis& basis = state.fusion_basis();
  if (triple < 0 || triple >= basis.n_triples()) {
    throw Error(ErrorCode::invalid_argument,
                "change_basis_z_to_x: triple index " + std::to_string(triple) +
                    " out of range");
  }
  const AnyonModelSpec model = su2_level2();
  const Mat& f = model.f_matrix;

  FusionBasis out_basis = basis;
  out_basis.frame[triple] = (basis.frame[triple] == 'z') ? 'x' : 'z';

  Mat op;
  if (basis.n_triples() == 1) {
    op = f;
  } else {
    op = (triple == 0) ? kron(f, identity(2)) : kron(identity(2), f);
  }
  return StateVector{out_basis, op * state.amplitudes};
}

StateVector encode_qubit(const AnyonModelSpec& model, const Vec& qubit) {
  if (qubit.size() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "encode_qubit: expected 2 amplitudes");
  }
  FusionBasis basis = standard_basis(model, 3, AnyonLabel::sigma);
  return make_state(basis, qubit);
}

std::array<cx, 2> decode_qubit(const StateVector& state) {
  if (state.dim() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "decode_qubit: expected a dim-2 state");
  }
  return {state.amplitudes(0), state.amplitudes(1)};
}

Vec named_ket(std::string_view name) {
  if (name == "0") return ket0();
  if (name == "1") return ket1();
  if (name == "+") return ket_plus();
  if (name == "-") return ket_minus();
  if (name == "+i") return ket_plus_i();
  if (name == "-i") return ket_minus_i();
  throw Error(ErrorCode::invalid_argument,
              "named_ket: unknown ket name '" + std::string(name) + "'");
}

}  // namespace chronos
