// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "chronos/common.hpp"

namespace chronos {

/// One named invariant check with its worst-case residual.
struct ValidationCheck {
  std::string name;
  bool passed = false;
  double residual = 0.0;
  std::string detail;
};

/// Accumulated results of a validation pass.
struct ValidationReport {
  std::vector<ValidationCheck> checks;

  void add(std::string name, bool passed, double residual = 0.0,
           std::string detail = {}) {
    checks.push_back({std::move(name), passed, residual, std::move(detail)});
  }

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }

  /// Throws Error(numerical) naming every failed check.
  void require_all() const {
    if (all_passed()) return;
    std::string msg = "validation failed:";
    for (const auto& c : checks) {
      if (!c.passed) {
        msg += " " + c.name + " (residual " + std::to_string(c.residual) + ")";
      }
    }
    throw Error(ErrorCode::numerical, msg);
  }
};

}  // namespace chronos
