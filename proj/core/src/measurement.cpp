// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace chronos {

namespace {

constexpr double kPi = std::numbers::pi;

enum class PairAxis { z, x, y };

struct PairSite {
  int triple;  // 0-based triple index
  PairAxis axis;
};

// Maps an ascending in-triple anyon pair to its triple and Pauli axis. The
// first triple is ((1 2) 3); the second is the mirrored (4 (5 6)), so its
// directly labeled (Z) pair is (5,6) and its reassociated (X) pair is (4,5).
PairSite classify_pair(int n_anyons, std::array<int, 2> pair) {
  const auto [i, j] = pair;
  if (i == j || i < 1 || j < 1 || i > n_anyons || j > n_anyons) {
    throw Error(ErrorCode::invalid_argument,
                "fuse_pair: bad anyon pair (" + std::to_string(i) + "," +
                    std::to_string(j) + ")");
  }
  if (n_anyons == 6 && (i <= 3) != (j <= 3)) {
    throw Error(ErrorCode::domain,
                "fuse_pair: pair (" + std::to_string(i) + "," +
                    std::to_string(j) +
                    ") spans the two triples; the clock and system "
                    "subsystems never interact");
  }
  const int triple = (i <= 3) ? 0 : 1;
  const int a = i - 3 * triple;
  const int b = j - 3 * triple;
  if (triple == 0) {
    if (a == 1 && b == 2) return {triple, PairAxis::z};
    if (a == 2 && b == 3) return {triple, PairAxis::x};
    return {triple, PairAxis::y};  // (1,3)
  }
  if (a == 2 && b == 3) return {triple, PairAxis::z};  // (5,6)
  if (a == 1 && b == 2) return {triple, PairAxis::x};  // (4,5)
  return {triple, PairAxis::y};                        // (4,6)
}

// Vacuum-channel projector on the triple's qubit. The Z projector is the
// label definition; X conjugates it with F; Y conjugates with the crossing
// that brings the pair together (the mirrored triple uses the mirrored
// crossing, so both triples measure the same Y axis).
Mat vac_projector(const AnyonModelSpec& model, PairSite site) {
  Mat pz = Mat::Zero(2, 2);
  pz(0, 0) = 1.0;
  const Mat& f = model.f_matrix;
  const Mat b = f * model.r_matrix * f;
  switch (site.axis) {
    case PairAxis::z:
      return pz;
    case PairAxis::x:
      return f * pz * f;
    case PairAxis::y: {
      const Mat px = f * pz * f;
      if (site.triple == 0) return b.adjoint() * pz * b;
      return model.r_matrix * px * model.r_matrix.adjoint();
    }
  }
  throw Error(ErrorCode::invalid_argument, "unreachable axis");
}

}  // namespace

std::vector<FusionOutcome> fuse_pair(const StateVector& state,
                                     std::array<int, 2> pair) {
  const FusionBasis& basis = state.fusion_basis();
  for (char fch : basis.frame) {
    if (fch != 'z') {
      throw Error(ErrorCode::invalid_argument,
                  "fuse_pair: state must be in the z frame");
    }
  }
  if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
  const PairSite site = classify_pair(basis.n_anyons, pair);
  const AnyonModelSpec model = model_by_name(basis.model_name);

  const Mat p_vac_qubit = vac_projector(model, site);
  Mat p_vac;
  if (basis.n_triples() == 1) {
    p_vac = p_vac_qubit;
  } else {
    p_vac = (site.triple == 0) ? kron(p_vac_qubit, identity(2))
                               : kron(identity(2), p_vac_qubit);
  }

  std::vector<FusionOutcome> outcomes;
  for (AnyonLabel charge : {AnyonLabel::vac, AnyonLabel::psi}) {
    const Mat proj = (charge == AnyonLabel::vac)
                         ? p_vac
                         : Mat(identity(basis.dim()) - p_vac);
    Vec projected = proj * state.amplitudes;
    const double probability = projected.squaredNorm();
    if (probability < tol::probability) continue;
    outcomes.push_back(FusionOutcome{
        pair, charge, probability,
        StateVector{basis, projected / std::sqrt(probability)}});
  }
  return outcomes;
}

std::vector<PovmEffect> povm_from_circuit(const Mat& u, int m) {
  if (m < 0) {
    throw Error(ErrorCode::invalid_argument,
                "povm_from_circuit: negative ancilla count");
  }
  const Eigen::Index dim = Eigen::Index(1) << (m + 1);
  if (u.rows() != dim || u.cols() != dim) {
    throw Error(ErrorCode::invalid_argument,
                "povm_from_circuit: circuit dimension " +
                    std::to_string(u.rows()) + " does not match 2^(m+1) = " +
                    std::to_string(dim));
  }
  if (!is_unitary(u)) {
    throw Error(ErrorCode::numerical, "povm_from_circuit: u is not unitary");
  }

  const Eigen::Index col1 = Eigen::Index(1) << m;  // |1> (x) |0...0>
  std::vector<PovmEffect> effects;
  effects.reserve(static_cast<size_t>(dim));
  Mat total = Mat::Zero(2, 2);
  for (Eigen::Index z = 0; z < dim; ++z) {
    Vec v(2);
    v << std::conj(u(z, 0)), std::conj(u(z, col1));
    Mat e = v * v.adjoint();
    total += e;
    std::string label;
    for (int bit = m; bit >= 0; --bit) {
      label += ((z >> bit) & 1) ? '1' : '0';
    }
    effects.push_back(PovmEffect{std::move(label), std::move(e)});
  }
  const double completeness = max_abs(total - identity(2));
  if (completeness > tol::completeness) {
    throw Error(ErrorCode::numerical,
                "povm_from_circuit: effects do not sum to identity "
                "(residual " + std::to_string(completeness) + ")");
  }
  return effects;
}

std::vector<PovmEffect> covariant_equatorial_povm(int n_outcomes) {
  if (n_outcomes < 2) {
    throw Error(ErrorCode::invalid_argument,
                "covariant_equatorial_povm: need at least 2 outcomes");
  }
  std::vector<PovmEffect> effects;
  effects.reserve(static_cast<size_t>(n_outcomes));
  const double weight = 2.0 / n_outcomes;
  for (int j = 0; j < n_outcomes; ++j) {
    const Vec tau = rot_z(2.0 * kPi * j / n_outcomes) * ket_plus();
    effects.push_back(
        PovmEffect{std::to_string(j), Mat(weight * tau * tau.adjoint())});
  }
  return effects;
}

namespace {

struct RankOneDecomp {
  double weight;
  Vec direction;  // unit, phase-canonical
};

RankOneDecomp decompose_rank_one(const PovmEffect& effect) {
  const Mat& e = effect.matrix;
  if (e.rows() != 2 || e.cols() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "effect must be a 2x2 matrix");
  }
  if (max_abs(e - e.adjoint()) > tol::psd) {
    throw Error(ErrorCode::domain, "effect is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Mat> solver(e);
  const auto& eigs = solver.eigenvalues();
  if (eigs(0) < -tol::psd) {
    throw Error(ErrorCode::domain, "effect is not positive semidefinite");
  }
  if (eigs(0) > tol::psd) {
    throw Error(ErrorCode::domain,
                "effect '" + effect.outcome_label + "' has rank above 1");
  }
  return RankOneDecomp{eigs(1), phase_canonical(Vec(solver.eigenvectors().col(1)))};
}

}  // namespace

Mat dilate_rank_one_povm(const std::vector<PovmEffect>& effects, int m) {
  if (m < 0) {
    throw Error(ErrorCode::invalid_argument,
                "dilate_rank_one_povm: negative ancilla count");
  }
  const Eigen::Index dim = Eigen::Index(1) << (m + 1);
  const Eigen::Index n = static_cast<Eigen::Index>(effects.size());
  if (n > dim) {
    throw Error(ErrorCode::domain,
                "dilate_rank_one_povm: " + std::to_string(n) +
                    " outcomes exceed 2^(m+1) = " + std::to_string(dim));
  }

  Mat total = Mat::Zero(2, 2);
  for (const PovmEffect& e : effects) total += e.matrix;
  const double completeness = max_abs(total - identity(2));
  if (completeness > tol::completeness) {
    throw Error(ErrorCode::numerical,
                "dilate_rank_one_povm: effects do not sum to identity "
                "(residual " + std::to_string(completeness) + ")");
  }

  // Isometry rows from the effect square roots; V^dag V = sum E = I.
  Mat v = Mat::Zero(dim, 2);
  for (Eigen::Index z = 0; z < n; ++z) {
    const RankOneDecomp d = decompose_rank_one(effects[static_cast<size_t>(z)]);
    v.row(z) = std::sqrt(d.weight) * d.direction.adjoint();
  }

  // Complete to a unitary whose columns 0 and 2^m are V's columns (the
  // positions of |c> (x) |0...0>), filling the rest by Gram-Schmidt over
  // standard basis vectors.
  const Eigen::Index col1 = Eigen::Index(1) << m;
  Mat u = Mat::Zero(dim, dim);
  u.col(0) = v.col(0);
  u.col(col1) = v.col(1);
  std::vector<Eigen::Index> placed = {0, col1};
  Eigen::Index candidate = 0;
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (j == 0 || j == col1) continue;
    while (true) {
      if (candidate >= dim) {
        throw Error(ErrorCode::numerical,
                    "dilate_rank_one_povm: basis completion failed");
      }
      Vec w = Vec::Zero(dim);
      w(candidate) = 1.0;
      ++candidate;
      for (Eigen::Index p : placed) {
        w -= u.col(p).dot(w) * u.col(p);
      }
      const double norm = w.norm();
      if (norm > 0.5) {
        u.col(j) = w / norm;
        placed.push_back(j);
        break;
      }
    }
  }

  if (!is_unitary(u, tol::completeness)) {
    throw Error(ErrorCode::numerical,
                "dilate_rank_one_povm: completion is not unitary");
  }
  return u;
}

namespace {

Mat hadamard() {
  Mat h(2, 2);
  h << 1, 1, 1, -1;
  return h / std::sqrt(2.0);
}

Mat phase_s() {
  Mat s = Mat::Zero(2, 2);
  s(0, 0) = 1.0;
  s(1, 1) = cx(0, 1);
  return s;
}

Mat embed_single(const Mat& gate, int qubit, int n_qubits) {
  Mat out(1, 1);
  out(0, 0) = 1.0;
  for (int q = 0; q < n_qubits; ++q) {
    out = kron(out, q == qubit ? gate : identity(2));
  }
  return out;
}

Mat cz_gate(int a, int b, int n_qubits) {
  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Mat out = Mat::Identity(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const bool bit_a = (idx >> (n_qubits - 1 - a)) & 1;
    const bool bit_b = (idx >> (n_qubits - 1 - b)) & 1;
    if (bit_a && bit_b) out(idx, idx) = -1.0;
  }
  return out;
}

}  // namespace

std::vector<Vec> stabilizer_states(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 3) {
    throw Error(ErrorCode::invalid_argument,
                "stabilizer_states: supported qubit counts are 1..3");
  }
  std::vector<Mat> gens;
  for (int q = 0; q < n_qubits; ++q) {
    gens.push_back(embed_single(hadamard(), q, n_qubits));
    gens.push_back(embed_single(phase_s(), q, n_qubits));
  }
  for (int a = 0; a < n_qubits; ++a) {
    for (int b = a + 1; b < n_qubits; ++b) {
      gens.push_back(cz_gate(a, b, n_qubits));
    }
  }

  const Eigen::Index dim = Eigen::Index(1) << n_qubits;
  Vec start = Vec::Zero(dim);
  start(0) = 1.0;
  start = phase_canonical(start);

  std::map<std::string, Vec> seen;
  std::deque<Vec> frontier;
  seen.emplace(canonical_key(start), start);
  frontier.push_back(start);
  while (!frontier.empty()) {
    const Vec current = frontier.front();
    frontier.pop_front();
    for (const Mat& g : gens) {
      Vec next = phase_canonical(Vec(g * current));
      auto [it, inserted] = seen.emplace(canonical_key(next), next);
      if (inserted) frontier.push_back(it->second);
    }
  }

  std::vector<Vec> out;
  out.reserve(seen.size());
  for (auto& [key, state] : seen) out.push_back(std::move(state));
  return out;
}

namespace {

// Direction label of a trace-normalized rank-1 effect from its Bloch vector.
std::string direction_label(const std::array<double, 3>& bloch) {
  const char* axes = "xyz";
  for (int k = 0; k < 3; ++k) {
    if (std::abs(bloch[k] - 1.0) <= tol::dedup) {
      return std::string(1, axes[k]) + "+";
    }
    if (std::abs(bloch[k] + 1.0) <= tol::dedup) {
      return std::string(1, axes[k]) + "-";
    }
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%.3f,%.3f,%.3f)", bloch[0], bloch[1],
                bloch[2]);
  return buf;
}

EffectCatalog catalog_from_effects(int m,
                                   const std::map<std::string, Mat>& dedup) {
  EffectCatalog catalog;
  catalog.ancilla_count = m;
  std::vector<PovmEffect> labeled;
  for (const auto& [key, e] : dedup) {
    labeled.push_back(PovmEffect{direction_label(bloch_vector(e)), e});
  }
  std::sort(labeled.begin(), labeled.end(),
            [](const PovmEffect& a, const PovmEffect& b) {
              return a.outcome_label < b.outcome_label;
            });
  catalog.effects = labeled;

  std::vector<std::pair<double, PovmEffect>> equatorial;
  for (const PovmEffect& e : labeled) {
    const auto bloch = bloch_vector(e.matrix);
    const double planar = std::hypot(bloch[0], bloch[1]);
    if (std::abs(bloch[2]) <= tol::dedup &&
        std::abs(planar - 1.0) <= tol::dedup) {
      // Tick order: the angle of rot_z(phi)|+> is phi, i.e. atan2(-y, x).
      double angle = std::atan2(-bloch[1], bloch[0]);
      if (angle < -tol::dedup) angle += 2.0 * kPi;
      equatorial.emplace_back(angle, e);
    }
  }
  std::sort(equatorial.begin(), equatorial.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [angle, e] : equatorial) {
    catalog.equatorial.push_back(std::move(e));
  }
  return catalog;
}

void accumulate_pair_effects(const Vec& s, const Vec& t,
                             std::map<std::string, Mat>& dedup) {
  for (Eigen::Index z = 0; z < s.size(); ++z) {
    Vec v(2);
    v << std::conj(s(z)), std::conj(t(z));
    const double norm2 = v.squaredNorm();
    if (norm2 < tol::probability) continue;  // zero effect, defines no tick
    v /= std::sqrt(norm2);
    Mat e = v * v.adjoint();
    dedup.emplace(canonical_key(e), std::move(e));
  }
}

}  // namespace

double EffectCatalog::delta_tau() const {
  if (equatorial.empty()) {
    throw Error(ErrorCode::domain, "catalog has no equatorial ticks");
  }
  return 2.0 * kPi / static_cast<double>(n_max());
}

EffectCatalog enumerate_clifford_povms(int m) {
  if (m < 0 || m > 2) {
    throw Error(ErrorCode::invalid_argument,
                "enumerate_clifford_povms: ancilla count must be 0..2");
  }
  const int n_qubits = m + 1;
  const std::vector<Vec> states = stabilizer_states(n_qubits);

  // Pauli words on n_qubits qubits, identity excluded.
  std::vector<Mat> paulis;
  const std::array<Mat, 4> single = {identity(2), pauli_x(), pauli_y(),
                                     pauli_z()};
  const int n_words = 1 << (2 * n_qubits);
  for (int w = 1; w < n_words; ++w) {
    Mat p(1, 1);
    p(0, 0) = 1.0;
    int code = w;
    for (int q = 0; q < n_qubits; ++q) {
      p = kron(p, single[static_cast<size_t>(code & 3)]);
      code >>= 2;
    }
    paulis.push_back(std::move(p));
  }

  // A circuit u maps the two embedded clock columns to (s, Q s) with s a
  // stabilizer state and Q = u X_c u^dag a signed Pauli orthogonal to s;
  // every such pair is realized, so sweeping them enumerates the catalog.
  std::map<std::string, Mat> dedup;
  for (const Vec& s : states) {
    for (const Mat& p : paulis) {
      const Vec ps = p * s;
      if (std::abs(s.dot(ps)) > tol::dedup) continue;
      accumulate_pair_effects(s, ps, dedup);
      accumulate_pair_effects(s, Vec(-ps), dedup);
    }
  }
  return catalog_from_effects(m, dedup);
}

EffectCatalog enumerate_clifford_povms_by_closure(int m) {
  if (m < 0 || m > 1) {
    throw Error(ErrorCode::budget,
                "enumerate_clifford_povms_by_closure: full closure is "
                "guarded to m <= 1");
  }
  const AnyonModelSpec model = su2_level2();
  const FusionBasis basis =
      (m == 0) ? standard_basis(model, 3, AnyonLabel::sigma)
               : standard_basis(model, 6, AnyonLabel::vac);
  const ClosureResult closure =
      group_closure(basis_generators(model, basis));

  std::map<std::string, Mat> dedup;
  const Eigen::Index col1 = Eigen::Index(1) << m;
  for (const PhaseCanonicalGate& g : closure.elements) {
    accumulate_pair_effects(Vec(g.matrix.col(0)), Vec(g.matrix.col(col1)),
                            dedup);
  }
  return catalog_from_effects(m, dedup);
}

}  // namespace chronos
