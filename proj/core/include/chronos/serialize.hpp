// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic report serialization. All reports carry "schema": 1; floats
// are emitted in fixed scientific notation with 12 significant digits so
// identical inputs yield byte-identical documents. Complex numbers are
// [re, im] pairs; matrices are arrays of rows.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "chronos/anyon_model.hpp"
#include "chronos/braiding.hpp"
#include "chronos/measurement.hpp"
#include "chronos/relational_clock.hpp"

namespace chronos {

/// Minimal insertion-ordered JSON emitter (compact, no whitespace).
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(std::string_view k);
  JsonWriter& value(double x);
  JsonWriter& value(std::int64_t x);
  JsonWriter& value(int x) { return value(static_cast<std::int64_t>(x)); }
  JsonWriter& value(bool b);
  JsonWriter& value(std::string_view s);
  JsonWriter& value(const char* s) { return value(std::string_view(s)); }
  JsonWriter& null();
  const std::string& str() const { return out_; }

  /// "%.11e" with negative zero normalized; non-finite values become null.
  static std::string format_double(double x);

 private:
  void element_prefix();
  std::string out_;
  std::vector<bool> comma_stack_;
  bool pending_key_ = false;
};

void write_complex(JsonWriter& w, cx z);
void write_vector(JsonWriter& w, const Vec& v);
void write_matrix(JsonWriter& w, const Mat& m);
void write_validation(JsonWriter& w, const ValidationReport& report);

std::string model_show_json(const AnyonModelSpec& spec,
                            const ValidationReport& validation);

std::string braid_eval_json(const AnyonModelSpec& spec, const BraidWord& word,
                            const Mat& unitary,
                            const Vec* applied_input,
                            const Vec* applied_output);

std::string braid_closure_json(const AnyonModelSpec& spec, int n_anyons,
                               const ClosureResult& closure, size_t max_size);

std::string fuse_json(const AnyonModelSpec& spec, const StateVector& input,
                      const std::vector<FusionOutcome>& outcomes,
                      const std::vector<std::int64_t>* sample_counts,
                      std::uint64_t seed, std::int64_t n_samples);

std::string fuse_csv(const std::vector<FusionOutcome>& outcomes,
                     const std::vector<std::int64_t>* sample_counts);

std::string povm_enumerate_json(const EffectCatalog& catalog,
                                const EffectCatalog* cross_check);

std::string paw_run_json(std::string_view resource, int n_ticks,
                         const EvolutionReport& report);

std::string paw_run_csv(const EvolutionReport& report);

std::string resolution_json(const ResolutionReport& report);

}  // namespace chronos
