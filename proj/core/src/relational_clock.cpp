// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/relational_clock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

namespace chronos {

namespace {

constexpr double kPi = std::numbers::pi;

// Transfer-operator unitarity gate. Looser than tol::unitary because the
// amplitude matrix is inverted on the way.
constexpr double kTransferUnitarity = 1e-8;

Mat evolve(const Mat& h, double t) {
  Eigen::SelfAdjointEigenSolver<Mat> solver(h);
  const Mat& q = solver.eigenvectors();
  Vec phases(h.rows());
  for (Eigen::Index i = 0; i < h.rows(); ++i) {
    phases(i) = std::exp(cx(0, -solver.eigenvalues()(i) * t));
  }
  return q * phases.asDiagonal() * q.adjoint();
}

}  // namespace

StateVector tick_state(int j, int n_ticks) {
  if (n_ticks < 2) {
    throw Error(ErrorCode::invalid_argument,
                "tick_state: a clock needs at least 2 ticks");
  }
  if (j < 0 || j >= n_ticks) {
    throw Error(ErrorCode::invalid_argument,
                "tick_state: tick index " + std::to_string(j) +
                    " out of range for " + std::to_string(n_ticks) +
                    " ticks");
  }
  const Vec tau = rot_z(2.0 * kPi * j / n_ticks) * ket_plus();
  return StateVector{QubitRegister{1}, tau};
}

ClockSchedule ClockSchedule::equatorial(int n_ticks) {
  if (n_ticks < 2) {
    throw Error(ErrorCode::invalid_argument,
                "ClockSchedule: a clock needs at least 2 ticks");
  }
  ClockSchedule schedule;
  schedule.n_ticks = n_ticks;
  for (int j = 0; j < n_ticks; ++j) {
    schedule.ticks.push_back(tick_state(j, n_ticks).amplitudes);
    schedule.weights.push_back(2.0 / n_ticks);
  }
  return schedule;
}

ClockSchedule ClockSchedule::from_effects(
    const std::vector<PovmEffect>& effects) {
  if (effects.size() < 2) {
    throw Error(ErrorCode::invalid_argument,
                "ClockSchedule: a clock needs at least 2 effects");
  }
  struct Entry {
    double angle;
    Vec tick;
    double weight;
  };
  std::vector<Entry> entries;
  for (const PovmEffect& e : effects) {
    Eigen::SelfAdjointEigenSolver<Mat> solver(e.matrix);
    const auto& eigs = solver.eigenvalues();
    if (eigs(0) < -tol::psd || eigs(0) > tol::psd) {
      throw Error(ErrorCode::domain,
                  "ClockSchedule: effect '" + e.outcome_label +
                      "' is not a rank-1 positive effect");
    }
    const Vec dir = phase_canonical(Vec(solver.eigenvectors().col(1)));
    const auto bloch = bloch_vector(dir);
    if (std::abs(bloch[2]) > tol::dedup) {
      throw Error(ErrorCode::domain,
                  "ClockSchedule: effect '" + e.outcome_label +
                      "' is not equatorial");
    }
    // rot_z(phi)|+> sits at Bloch (cos phi, -sin phi), so the tick angle of
    // a direction is atan2(-y, x).
    double angle = std::atan2(-bloch[1], bloch[0]);
    if (angle < -tol::dedup) angle += 2.0 * kPi;
    entries.push_back(Entry{angle, dir, eigs(1)});
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.angle < b.angle; });

  ClockSchedule schedule;
  schedule.n_ticks = static_cast<int>(entries.size());
  for (Entry& e : entries) {
    schedule.ticks.push_back(std::move(e.tick));
    schedule.weights.push_back(e.weight);
  }
  return schedule;
}

double ClockSchedule::angle(int j) const {
  return 2.0 * kPi * j / n_ticks;
}

GlobalState::GlobalState(StateVector state) : state_(std::move(state)) {}

const StateVector& GlobalState::state() const {
  if (consumed_) {
    throw Error(ErrorCode::consumed, "global state was already conditioned");
  }
  return state_;
}

void GlobalState::consume() {
  if (consumed_) {
    throw Error(ErrorCode::consumed,
                "global state was already conditioned; prepare a new one");
  }
  consumed_ = true;
}

GlobalState GlobalState::prepare_bell_singlet() {
  const AnyonModelSpec model = su2_level2();
  FusionBasis basis = standard_basis(model, 6, AnyonLabel::vac);
  Vec amps = Vec::Zero(4);
  amps(1) = 1.0 / std::sqrt(2.0);
  amps(2) = -1.0 / std::sqrt(2.0);
  return GlobalState(StateVector{std::move(basis), std::move(amps)});
}

GlobalState GlobalState::prepare_bell_via_braiding(const AnyonModelSpec& model) {
  const FusionBasis basis = standard_basis(model, 6, AnyonLabel::vac);
  const BraidWord word = BraidWord::parse(6, "s2 s4 s3");
  const Mat u = evaluate_braid(word, model, basis);
  Vec out = u * basis_state(basis, 0).amplitudes;

  Vec target(4);
  target << 1, 1, 1, -1;
  target /= 2.0;
  const double fid = fidelity(out, target);
  if (1.0 - fid > tol::fidelity) {
    throw Error(ErrorCode::numerical,
                "prepare_bell_via_braiding: braided state misses the Bell "
                "target (infidelity " + std::to_string(1.0 - fid) +
                    "); generator conventions are inconsistent");
  }
  return GlobalState(StateVector{basis, std::move(out)});
}

GlobalState GlobalState::from_state(StateVector state) {
  if (state.dim() != 4) {
    throw Error(ErrorCode::invalid_argument,
                "GlobalState: expected a dim-4 clock-system state");
  }
  const double norm = state.amplitudes.norm();
  if (std::abs(norm - 1.0) > tol::unitary) {
    state.amplitudes /= norm;
  }
  return GlobalState(std::move(state));
}

Mat GlobalState::amplitude_matrix() const {
  const Vec& amps = state().amplitudes;
  Mat m(2, 2);
  m << amps(0), amps(1), amps(2), amps(3);
  return m;
}

namespace {

Conditional condition_impl(const Mat& amplitude_matrix, const Vec& clock_state,
                           double weight) {
  if (clock_state.size() != 2) {
    throw Error(ErrorCode::invalid_argument,
                "condition: clock state must be a single qubit");
  }
  const Vec u = amplitude_matrix.transpose() * clock_state.conjugate();
  const double probability = weight * u.squaredNorm();
  if (probability < tol::probability) {
    throw Error(ErrorCode::zero_probability,
                "condition: outcome probability below floor; conditional "
                "state undefined");
  }
  return Conditional{probability,
                     StateVector{QubitRegister{1}, Vec(u / u.norm())}};
}

}  // namespace

Conditional condition(GlobalState&& global, const Vec& clock_state) {
  const Mat m = global.amplitude_matrix();
  global.consume();
  const double norm = clock_state.norm();
  if (norm < std::sqrt(tol::probability)) {
    throw Error(ErrorCode::invalid_argument, "condition: zero clock state");
  }
  return condition_impl(m, Vec(clock_state / norm), 1.0);
}

Conditional condition(GlobalState&& global, const PovmEffect& effect) {
  const Mat m = global.amplitude_matrix();
  global.consume();
  Eigen::SelfAdjointEigenSolver<Mat> solver(effect.matrix);
  const auto& eigs = solver.eigenvalues();
  if (eigs(0) < -tol::psd) {
    throw Error(ErrorCode::domain, "condition: effect is not positive");
  }
  if (eigs(0) > tol::psd) {
    throw Error(ErrorCode::domain,
                "condition: effect has rank above 1; no pure conditional "
                "state exists");
  }
  return condition_impl(m, Vec(solver.eigenvectors().col(1)), eigs(1));
}

EffectiveHamiltonians derive_effective_hamiltonians(
    const GlobalState& global, const ClockSchedule& schedule) {
  const int n = schedule.n_ticks;
  if (n < 2) {
    throw Error(ErrorCode::invalid_argument,
                "derive_effective_hamiltonians: need at least 2 ticks");
  }

  // The schedule must be the orbit of the one-tick rotation.
  const Mat step = rot_z(2.0 * kPi / n);
  for (int j = 0; j < n; ++j) {
    const Vec& now = schedule.ticks[static_cast<size_t>(j)];
    const Vec& next = schedule.ticks[static_cast<size_t>((j + 1) % n)];
    if (1.0 - fidelity(Vec(step * now), next) > tol::fidelity) {
      throw Error(ErrorCode::domain,
                  "derive_effective_hamiltonians: schedule is not a "
                  "single-rotation orbit");
    }
  }

  EffectiveHamiltonians result;
  result.h_clock = -kPi / n * pauli_z();

  const Mat m_t = global.amplitude_matrix().transpose();
  // Conditionals advance as u_{j+1} = M^T rot_z(-2 pi / n) (M^T)^{-1} u_j;
  // stationarity requires that transfer to be unitary.
  const cx det = m_t.determinant();
  Mat h_system;
  if (std::abs(det) < kTransferUnitarity) {
    // Clock and system unentangled (or nearly so): conditionals are all
    // parallel and any phase assignment is consistent; take H_s = 0 and let
    // the eigenstate check below decide.
    h_system = Mat::Zero(2, 2);
  } else {
    Mat inv(2, 2);
    inv << m_t(1, 1), -m_t(0, 1), -m_t(1, 0), m_t(0, 0);
    inv /= det;
    const Mat transfer = m_t * rot_z(-2.0 * kPi / n) * inv;
    if (unitarity_residual(transfer) > kTransferUnitarity) {
      throw Error(ErrorCode::non_stationary,
                  "derive_effective_hamiltonians: conditional transfer is "
                  "not unitary (residual " +
                      std::to_string(unitarity_residual(transfer)) +
                      "); the state is not stationary for this schedule");
    }
    h_system = principal_hamiltonian(transfer, kTransferUnitarity);
  }
  result.h_system = h_system;

  const Vec& psi = global.state().amplitudes;
  const Mat total =
      kron(result.h_clock, identity(2)) + kron(identity(2), h_system);
  const Vec image = total * psi;
  const cx energy = psi.dot(image);
  result.total_eigenvalue = energy.real();
  result.eigen_residual = (image - energy * psi).norm();
  if (result.eigen_residual > tol::stationary) {
    throw Error(ErrorCode::non_stationary,
                "derive_effective_hamiltonians: no consistent effective "
                "Hamiltonian; eigen-residual " +
                    std::to_string(result.eigen_residual));
  }
  return result;
}

EvolutionReport run_schedule(GlobalState&& global,
                             const ClockSchedule& schedule) {
  EvolutionReport report;
  report.delta_tau = 2.0 * kPi / schedule.n_ticks;

  try {
    report.hamiltonians = derive_effective_hamiltonians(global, schedule);
  } catch (const Error& err) {
    if (err.code() != ErrorCode::non_stationary &&
        err.code() != ErrorCode::domain) {
      throw;
    }
    report.hamiltonian_error = err.what();
  }
  const Mat h_system = report.hamiltonians ? report.hamiltonians->h_system
                                           : Mat(Mat::Zero(2, 2));

  const Mat m = global.amplitude_matrix();
  global.consume();

  // Reduced system state, for the ensemble-reconstruction invariant.
  Mat rho_system = Mat::Zero(2, 2);
  for (int c = 0; c < 2; ++c) {
    rho_system += m.row(c).transpose() * m.row(c).conjugate();
  }

  Vec origin;
  Mat reconstructed = Mat::Zero(2, 2);
  for (int j = 0; j < schedule.n_ticks; ++j) {
    TickRecord record;
    record.index = j;
    record.angle = schedule.angle(j);
    const Vec u = m.transpose() *
                  schedule.ticks[static_cast<size_t>(j)].conjugate();
    const double p = schedule.weights[static_cast<size_t>(j)] * u.squaredNorm();
    record.probability = p;
    report.probability_sum += p;
    if (p >= tol::probability) {
      record.defined = true;
      record.conditional_state = u / u.norm();
      reconstructed += p * record.conditional_state *
                       record.conditional_state.adjoint();
      if (j == schedule.origin_index) origin = record.conditional_state;
    }
    report.ticks.push_back(std::move(record));
  }

  if (origin.size() == 0) {
    for (const TickRecord& r : report.ticks) {
      if (r.defined) {
        origin = r.conditional_state;
        break;
      }
    }
  }
  for (TickRecord& r : report.ticks) {
    if (!r.defined || origin.size() == 0) continue;
    const Vec predicted = evolve(h_system, r.index) * origin;
    r.fidelity_vs_schrodinger = fidelity(r.conditional_state, predicted);
  }

  double max_dev = 0.0;
  for (const TickRecord& r : report.ticks) {
    max_dev = std::max(max_dev,
                       std::abs(r.probability - 1.0 / schedule.n_ticks));
  }
  report.uniform_probability = max_dev <= tol::stationary;
  report.marginal_residual = max_abs(reconstructed - rho_system);
  return report;
}

GateClass gate_class_from_string(std::string_view name) {
  if (name == "clifford") return GateClass::clifford;
  if (name == "universal") return GateClass::universal;
  throw Error(ErrorCode::invalid_argument,
              "unknown gate class: " + std::string(name));
}

const char* to_string(GateClass gate_class) noexcept {
  return gate_class == GateClass::clifford ? "clifford" : "universal";
}

ResolutionReport time_resolution(GateClass gate_class, int m) {
  if (m < 0) {
    throw Error(ErrorCode::invalid_argument,
                "time_resolution: negative ancilla count");
  }
  ResolutionReport report;
  report.gate_class = gate_class;
  report.ancilla_count = m;
  if (gate_class == GateClass::universal) {
    report.n_max = 1 << (m + 1);
    report.n_distinct = report.n_max;
    report.delta_tau = 2.0 * kPi / report.n_max;
    report.enumerated = false;
    return report;
  }
  // The catalog is stationary from m = 2 on, so larger registers reuse it.
  const EffectCatalog catalog = enumerate_clifford_povms(std::min(m, 2));
  report.n_max = catalog.n_max();
  report.n_distinct = catalog.n_distinct();
  report.delta_tau = catalog.delta_tau();
  report.enumerated = true;
  return report;
}

}  // namespace chronos
