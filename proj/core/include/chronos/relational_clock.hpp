// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// The relational-time engine. A two-qubit global state (clock triple (x)
// system triple) is conditioned on equatorial clock outcomes |tau_j>; the
// conditional system states then evolve unitarily in the tick index, and the
// generating Hamiltonians are derived from the state itself: H_c rotates the
// tick sequence, H_s is read off the conditional transfer operator, and
// (H_c (x) I + I (x) H_s) |Psi> = E |Psi> certifies stationarity.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chronos/measurement.hpp"

namespace chronos {

/// Equatorial tick |tau_j> = rot_z(2 pi j / n)|+>, as a 1-qubit register
/// state. Requires n >= 2 and 0 <= j < n.
StateVector tick_state(int j, int n_ticks);

/// An ordered, complete set of clock outcomes. Weights are the effect
/// traces: effect j is weights[j] |ticks[j]><ticks[j]|.
struct ClockSchedule {
  int n_ticks = 0;
  std::vector<Vec> ticks;
  std::vector<double> weights;
  int origin_index = 0;

  static ClockSchedule equatorial(int n_ticks);

  /// Builds a schedule from rank-1 effects, ordered by ascending equatorial
  /// angle; the origin is the tick closest to angle zero.
  static ClockSchedule from_effects(const std::vector<PovmEffect>& effects);

  double angle(int j) const;  // 2 pi j / n_ticks
};

struct Conditional;
struct EvolutionReport;

/// The entangled clock-system resource. Conditioning consumes it: the
/// consuming operations take the state by value (move it in), and a
/// moved-from or already-conditioned state refuses further use.
class GlobalState {
 public:
  GlobalState(GlobalState&&) noexcept = default;
  GlobalState& operator=(GlobalState&&) noexcept = default;
  GlobalState(const GlobalState&) = delete;
  GlobalState& operator=(const GlobalState&) = delete;

  /// (|01> - |10>)/sqrt(2) = (|-,+> - |+,->)/sqrt(2).
  static GlobalState prepare_bell_singlet();

  /// Braids the two-triple vacuum state with the word s2 s4 s3 and verifies
  /// the result is (|+,0> + |-,1>)/sqrt(2) up to global phase.
  static GlobalState prepare_bell_via_braiding(
      const AnyonModelSpec& model = su2_level2());

  /// Wraps an arbitrary normalized two-qubit state (clock bit first).
  static GlobalState from_state(StateVector state);

  const StateVector& state() const;

  /// Amplitude matrix M with M(c, s) = <c, s|Psi>.
  Mat amplitude_matrix() const;

  bool consumed() const noexcept { return consumed_; }

 private:
  explicit GlobalState(StateVector state);
  void consume();

  StateVector state_;
  bool consumed_ = false;

  friend struct Conditional;
  friend Conditional condition(GlobalState&& global, const Vec& clock_state);
  friend Conditional condition(GlobalState&& global, const PovmEffect& effect);
  friend EvolutionReport run_schedule(GlobalState&& global,
                                      const ClockSchedule& schedule);
};

struct Conditional {
  double probability;
  StateVector system_state;  // 1-qubit register
};

/// Projects the clock factor onto |clock_state> and normalizes the system
/// remainder. Probability below the floor raises Error(zero_probability).
Conditional condition(GlobalState&& global, const Vec& clock_state);

/// Same for a rank-1 POVM effect (weight included in the probability).
/// Higher-rank effects leave no pure conditional state: Error(domain).
Conditional condition(GlobalState&& global, const PovmEffect& effect);

struct EffectiveHamiltonians {
  Mat h_clock;   // 2x2 Hermitian
  Mat h_system;  // 2x2 Hermitian
  double total_eigenvalue = 0.0;
  double eigen_residual = 0.0;
};

/// Derives the generating Hamiltonians from the state and schedule without
/// consuming the state: H_c = -pi Z / n for an equatorial schedule; H_s from
/// the tick-to-tick transfer of conditional states, one tick = one unit of
/// time; then checks the stationarity eigenproblem. A state with no
/// consistent unitary transfer, or failing the eigenstate property, raises
/// Error(non_stationary).
EffectiveHamiltonians derive_effective_hamiltonians(
    const GlobalState& global, const ClockSchedule& schedule);

struct TickRecord {
  int index = 0;
  double angle = 0.0;
  double probability = 0.0;
  bool defined = false;             // false when probability is at the floor
  Vec conditional_state;            // empty when !defined
  double fidelity_vs_schrodinger = 0.0;
};

struct EvolutionReport {
  std::vector<TickRecord> ticks;
  double probability_sum = 0.0;
  bool uniform_probability = false;
  double delta_tau = 0.0;
  std::optional<EffectiveHamiltonians> hamiltonians;
  std::string hamiltonian_error;    // set when the derivation failed
  double marginal_residual = 0.0;   // ensemble vs reduced system state
};

/// Conditions on every tick of the schedule (consuming the state), compares
/// each conditional state against Schroedinger evolution generated by the
/// derived H_s from the origin tick, and reconstructs the reduced system
/// state from the outcome ensemble. If no effective Hamiltonian exists the
/// comparison falls back to H_s = 0 and records the failure reason.
EvolutionReport run_schedule(GlobalState&& global,
                             const ClockSchedule& schedule);

enum class GateClass { clifford, universal };

GateClass gate_class_from_string(std::string_view name);
const char* to_string(GateClass gate_class) noexcept;

struct ResolutionReport {
  GateClass gate_class = GateClass::clifford;
  int ancilla_count = 0;
  int n_max = 0;        // distinct equatorial ticks
  int n_distinct = 0;   // all distinct effect directions
  double delta_tau = 0.0;
  bool enumerated = false;  // true when n_max came from catalog enumeration
};

/// Time resolution of the clock for a gate class: the universal class
/// saturates 2^(m+1) equatorial outcomes; the Clifford class is capped by
/// its enumerated catalog, independent of m.
ResolutionReport time_resolution(GateClass gate_class, int m);

}  // namespace chronos
