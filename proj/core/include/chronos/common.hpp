// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace chronos {

using cx = std::complex<double>;

/// Failure categories surfaced to callers (and mapped to CLI exit codes).
enum class ErrorCode {
  invalid_argument,  ///< malformed input (bad index, bad token, bad dimension)
  domain,            ///< structurally valid input outside the model's domain
  numerical,         ///< a numerical invariant was violated beyond tolerance
  budget,            ///< an enumeration exceeded its element budget
  consumed,          ///< a one-shot state was used twice
  non_stationary,    ///< no consistent effective Hamiltonian exists
  zero_probability,  ///< conditioning on an outcome of (near-)zero probability
  io,                ///< file or stream failure
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

const char* to_string(ErrorCode code) noexcept;

// Numerical tolerances. Group-theoretic identities in this model hold exactly
// in IEEE arithmetic up to rounding, so the gates are tight.
namespace tol {
inline constexpr double unitary = 1e-10;        // ||U^dag U - I||_max
inline constexpr double fidelity = 1e-10;       // 1 - |<a|b>|^2
inline constexpr double psd = 1e-10;            // eigenvalue floor for effects
inline constexpr double completeness = 1e-9;    // ||sum E_z - I||_max
inline constexpr double dedup = 1e-8;           // canonical-form quantization
inline constexpr double exact_phase = 1e-12;    // identities with no phase freedom
inline constexpr double probability = 1e-14;    // conditioning floor
inline constexpr double stationary = 1e-10;     // eigen-residual for derived H
}  // namespace tol

}  // namespace chronos
