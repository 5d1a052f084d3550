// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// Braid-group representations on the fusion bases. On three sigmas the two
// generators act on the label qubit as R = diag(1, i) and B = F R F; on six
// sigmas the five generators act on the two-qubit register as
//
//   g1 = R (x) I     g2 = B (x) I     g4 = I (x) B     g5 = I (x) R
//   g3 = diag(r_vac, r_psi, r_psi, r_vac)
//
// g3 exchanges the inner strands (3,4); reassociating both triples makes its
// action diagonal in the pair labels, with the phase set by the fusion
// channel of the two triple charges. Also provides brute-force group closure
// modulo global phase and orbit enumeration.

#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chronos/fusion_space.hpp"

namespace chronos {

struct Crossing {
  int index = 0;    // 1-based strand pair (index, index+1)
  bool over = true; // false = inverse crossing
};

struct BraidWord {
  int n_strands = 0;
  std::vector<Crossing> crossings;  // applied first-to-last

  /// Parses whitespace-separated tokens: "s3" (over) / "S3" (under).
  static BraidWord parse(int n_strands, std::string_view text);
  std::string format() const;
};

/// A unitary normalized to a canonical global phase: the first entry with
/// magnitude above the dedup tolerance (row-major) is made real positive.
/// `key` quantizes the canonical entries for hashing and ordering.
struct PhaseCanonicalGate {
  Mat matrix;
  std::string key;

  static PhaseCanonicalGate from(const Mat& m);
};

/// Unitary of the positive crossing of strands (i, i+1) on the basis.
Mat generator_matrix(const AnyonModelSpec& model, const FusionBasis& basis,
                     int i);

/// Ordered product of crossing matrices; the word's first crossing acts
/// first. Under-crossings contribute the inverse generator.
Mat evaluate_braid(const BraidWord& word, const AnyonModelSpec& model,
                   const FusionBasis& basis);

/// Generator-level checks: unitarity, inverse crossings, the braid relation
/// g_i g_{i+1} g_i = g_{i+1} g_i g_{i+1}, far commutation, and on six
/// strands the two-triple Bell preparation oracle that pins the crossing
/// orientation convention.
ValidationReport verify_braid_relations(const AnyonModelSpec& model,
                                        const FusionBasis& basis);

/// Closure of the generated group modulo global phase, found by
/// breadth-first multiplication. Elements are returned sorted by canonical
/// key (set semantics). Throws Error(budget) if the closure would exceed
/// max_size.
struct ClosureResult {
  std::vector<PhaseCanonicalGate> elements;
  size_t order() const { return elements.size(); }
};

ClosureResult group_closure(const std::vector<Mat>& generators,
                            size_t max_size = 1000000);

/// All braid generators of the basis, in strand order.
std::vector<Mat> basis_generators(const AnyonModelSpec& model,
                                  const FusionBasis& basis);

/// Orbit of `start` under the closure, phase-canonical, sorted by key.
std::vector<Vec> reachable_states(const StateVector& start,
                                  const ClosureResult& group);

}  // namespace chronos
