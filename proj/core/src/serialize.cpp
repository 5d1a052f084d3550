// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/serialize.hpp"

#include <cmath>
#include <cstdio>

namespace chronos {

void JsonWriter::element_prefix() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!comma_stack_.empty()) {
    if (comma_stack_.back()) out_ += ',';
    comma_stack_.back() = true;
  }
}

JsonWriter& JsonWriter::begin_object() {
  element_prefix();
  out_ += '{';
  comma_stack_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_ += '}';
  comma_stack_.pop_back();
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  element_prefix();
  out_ += '[';
  comma_stack_.push_back(false);
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_ += ']';
  comma_stack_.pop_back();
  return *this;
}

namespace {

void append_escaped(std::string& out, std::string_view s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

}  // namespace

JsonWriter& JsonWriter::key(std::string_view k) {
  element_prefix();
  append_escaped(out_, k);
  out_ += ':';
  pending_key_ = true;
  return *this;
}

std::string JsonWriter::format_double(double x) {
  if (!std::isfinite(x)) return "null";
  if (x == 0.0) x = 0.0;  // fold -0.0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return buf;
}

JsonWriter& JsonWriter::value(double x) {
  element_prefix();
  out_ += format_double(x);
  return *this;
}

JsonWriter& JsonWriter::value(std::int64_t x) {
  element_prefix();
  out_ += std::to_string(x);
  return *this;
}

JsonWriter& JsonWriter::value(bool b) {
  element_prefix();
  out_ += b ? "true" : "false";
  return *this;
}

JsonWriter& JsonWriter::value(std::string_view s) {
  element_prefix();
  append_escaped(out_, s);
  return *this;
}

JsonWriter& JsonWriter::null() {
  element_prefix();
  out_ += "null";
  return *this;
}

void write_complex(JsonWriter& w, cx z) {
  w.begin_array().value(z.real()).value(z.imag()).end_array();
}

void write_vector(JsonWriter& w, const Vec& v) {
  w.begin_array();
  for (Eigen::Index i = 0; i < v.size(); ++i) write_complex(w, v(i));
  w.end_array();
}

void write_matrix(JsonWriter& w, const Mat& m) {
  w.begin_array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    w.begin_array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) write_complex(w, m(i, j));
    w.end_array();
  }
  w.end_array();
}

void write_validation(JsonWriter& w, const ValidationReport& report) {
  w.begin_object();
  w.key("all_passed").value(report.all_passed());
  w.key("checks").begin_array();
  for (const ValidationCheck& c : report.checks) {
    w.begin_object();
    w.key("name").value(c.name);
    w.key("passed").value(c.passed);
    w.key("residual").value(c.residual);
    if (!c.detail.empty()) w.key("detail").value(c.detail);
    w.end_object();
  }
  w.end_array();
  w.end_object();
}

std::string model_show_json(const AnyonModelSpec& spec,
                            const ValidationReport& validation) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("name").value(spec.name);
  w.key("labels").begin_array();
  for (AnyonLabel label : spec.labels) w.value(to_string(label));
  w.end_array();
  w.key("quantum_dims").begin_array();
  for (double d : spec.quantum_dims) w.value(d);
  w.end_array();
  w.key("fusion_triples").begin_array();
  for (AnyonLabel a : spec.labels) {
    for (AnyonLabel b : spec.labels) {
      for (AnyonLabel c : spec.labels) {
        if (spec.rules.allowed(a, b, c)) {
          w.begin_array()
              .value(to_string(a))
              .value(to_string(b))
              .value(to_string(c))
              .end_array();
        }
      }
    }
  }
  w.end_array();
  w.key("f_matrix");
  write_matrix(w, spec.f_matrix);
  w.key("r_matrix");
  write_matrix(w, spec.r_matrix);
  w.key("validation");
  write_validation(w, validation);
  w.end_object();
  return w.str();
}

std::string braid_eval_json(const AnyonModelSpec& spec, const BraidWord& word,
                            const Mat& unitary, const Vec* applied_input,
                            const Vec* applied_output) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("model").value(spec.name);
  w.key("n_anyons").value(word.n_strands);
  w.key("word").value(word.format());
  w.key("unitary");
  write_matrix(w, unitary);
  w.key("unitarity_residual").value(unitarity_residual(unitary));
  if (applied_input != nullptr && applied_output != nullptr) {
    w.key("applied").begin_object();
    w.key("input");
    write_vector(w, *applied_input);
    w.key("output");
    write_vector(w, *applied_output);
    w.end_object();
  }
  w.end_object();
  return w.str();
}

std::string braid_closure_json(const AnyonModelSpec& spec, int n_anyons,
                               const ClosureResult& closure, size_t max_size) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("model").value(spec.name);
  w.key("n_anyons").value(n_anyons);
  w.key("n_generators").value(n_anyons - 1);
  w.key("max_size").value(static_cast<std::int64_t>(max_size));
  w.key("group_order").value(static_cast<std::int64_t>(closure.order()));
  w.end_object();
  return w.str();
}

std::string fuse_json(const AnyonModelSpec& spec, const StateVector& input,
                      const std::vector<FusionOutcome>& outcomes,
                      const std::vector<std::int64_t>* sample_counts,
                      std::uint64_t seed, std::int64_t n_samples) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("model").value(spec.name);
  w.key("n_anyons").value(input.fusion_basis().n_anyons);
  if (!outcomes.empty()) {
    w.key("pair").begin_array();
    w.value(outcomes.front().pair[0]).value(outcomes.front().pair[1]);
    w.end_array();
  }
  w.key("input_state");
  write_vector(w, input.amplitudes);
  w.key("outcomes").begin_array();
  for (size_t k = 0; k < outcomes.size(); ++k) {
    const FusionOutcome& o = outcomes[k];
    w.begin_object();
    w.key("charge").value(to_string(o.charge));
    w.key("probability").value(o.probability);
    w.key("post_state");
    write_vector(w, o.post_state.amplitudes);
    if (sample_counts != nullptr) {
      w.key("count").value((*sample_counts)[k]);
    }
    w.end_object();
  }
  w.end_array();
  if (sample_counts != nullptr) {
    w.key("sampling").begin_object();
    w.key("seed").value(static_cast<std::int64_t>(seed));
    w.key("n_samples").value(n_samples);
    w.end_object();
  }
  w.end_object();
  return w.str();
}

std::string fuse_csv(const std::vector<FusionOutcome>& outcomes,
                     const std::vector<std::int64_t>* sample_counts) {
  std::string out = "charge,probability";
  const Eigen::Index dim =
      outcomes.empty() ? 0 : outcomes.front().post_state.dim();
  for (Eigen::Index k = 0; k < dim; ++k) {
    out += ",post_re" + std::to_string(k) + ",post_im" + std::to_string(k);
  }
  if (sample_counts != nullptr) out += ",count";
  out += '\n';
  for (size_t k = 0; k < outcomes.size(); ++k) {
    const FusionOutcome& o = outcomes[k];
    out += to_string(o.charge);
    out += ',' + JsonWriter::format_double(o.probability);
    for (Eigen::Index i = 0; i < o.post_state.dim(); ++i) {
      out += ',' + JsonWriter::format_double(o.post_state.amplitudes(i).real());
      out += ',' + JsonWriter::format_double(o.post_state.amplitudes(i).imag());
    }
    if (sample_counts != nullptr) {
      out += ',' + std::to_string((*sample_counts)[k]);
    }
    out += '\n';
  }
  return out;
}

namespace {

void write_catalog_body(JsonWriter& w, const EffectCatalog& catalog) {
  w.key("ancilla").value(catalog.ancilla_count);
  w.key("n_distinct").value(catalog.n_distinct());
  w.key("n_max").value(catalog.n_max());
  w.key("equatorial_ticks").value(catalog.n_max());
  w.key("delta_tau").value(catalog.delta_tau());
  w.key("effects").begin_array();
  for (const PovmEffect& e : catalog.effects) {
    w.begin_object();
    w.key("outcome").value(e.outcome_label);
    w.key("matrix");
    write_matrix(w, e.matrix);
    const auto bloch = bloch_vector(e.matrix);
    w.key("bloch").begin_array();
    w.value(bloch[0]).value(bloch[1]).value(bloch[2]);
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.key("equatorial_outcomes").begin_array();
  for (const PovmEffect& e : catalog.equatorial) w.value(e.outcome_label);
  w.end_array();
}

}  // namespace

std::string povm_enumerate_json(const EffectCatalog& catalog,
                                const EffectCatalog* cross_check) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("gate_class").value("clifford");
  write_catalog_body(w, catalog);
  // Clifford ancilla preparation composes into the enumerated circuit class,
  // so the prepared-ancilla catalog is the same object.
  w.key("prepared_ancilla_catalog_identical").value(true);
  if (cross_check != nullptr) {
    bool identical =
        catalog.n_distinct() == cross_check->n_distinct() &&
        catalog.n_max() == cross_check->n_max();
    if (identical) {
      for (int k = 0; k < catalog.n_distinct(); ++k) {
        const auto& a = catalog.effects[static_cast<size_t>(k)];
        const auto& b = cross_check->effects[static_cast<size_t>(k)];
        if (a.outcome_label != b.outcome_label ||
            max_abs(a.matrix - b.matrix) > tol::dedup) {
          identical = false;
          break;
        }
      }
    }
    w.key("cross_check").begin_object();
    w.key("method").value("group_closure");
    w.key("n_distinct").value(cross_check->n_distinct());
    w.key("n_max").value(cross_check->n_max());
    w.key("identical").value(identical);
    w.end_object();
  }
  w.end_object();
  return w.str();
}

std::string paw_run_json(std::string_view resource, int n_ticks,
                         const EvolutionReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("resource").value(resource);
  w.key("n_ticks").value(n_ticks);
  w.key("delta_tau").value(report.delta_tau);
  w.key("ticks").begin_array();
  for (const TickRecord& t : report.ticks) {
    w.begin_object();
    w.key("index").value(t.index);
    w.key("angle").value(t.angle);
    w.key("probability").value(t.probability);
    w.key("defined").value(t.defined);
    w.key("conditional_state");
    if (t.defined) {
      write_vector(w, t.conditional_state);
    } else {
      w.null();
    }
    w.key("fidelity_vs_schrodinger");
    if (t.defined) {
      w.value(t.fidelity_vs_schrodinger);
    } else {
      w.null();
    }
    w.end_object();
  }
  w.end_array();
  w.key("probability_sum").value(report.probability_sum);
  w.key("uniform_probability").value(report.uniform_probability);
  w.key("marginal_residual").value(report.marginal_residual);
  w.key("hamiltonians");
  if (report.hamiltonians) {
    const EffectiveHamiltonians& h = *report.hamiltonians;
    w.begin_object();
    w.key("h_clock");
    write_matrix(w, h.h_clock);
    w.key("h_system");
    write_matrix(w, h.h_system);
    w.key("total_eigenvalue").value(h.total_eigenvalue);
    w.key("eigen_residual").value(h.eigen_residual);
    w.end_object();
  } else {
    w.null();
  }
  if (!report.hamiltonian_error.empty()) {
    w.key("hamiltonian_error").value(report.hamiltonian_error);
  }
  w.end_object();
  return w.str();
}

std::string paw_run_csv(const EvolutionReport& report) {
  std::string out =
      "index,angle,probability,defined,re0,im0,re1,im1,"
      "fidelity_vs_schrodinger\n";
  for (const TickRecord& t : report.ticks) {
    out += std::to_string(t.index);
    out += ',' + JsonWriter::format_double(t.angle);
    out += ',' + JsonWriter::format_double(t.probability);
    out += t.defined ? ",1" : ",0";
    if (t.defined) {
      for (Eigen::Index i = 0; i < 2; ++i) {
        out += ',' + JsonWriter::format_double(t.conditional_state(i).real());
        out += ',' + JsonWriter::format_double(t.conditional_state(i).imag());
      }
      out += ',' + JsonWriter::format_double(t.fidelity_vs_schrodinger);
    } else {
      out += ",,,,,";
    }
    out += '\n';
  }
  return out;
}

std::string resolution_json(const ResolutionReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("schema").value(1);
  w.key("gate_class").value(to_string(report.gate_class));
  w.key("ancilla").value(report.ancilla_count);
  w.key("n_max").value(report.n_max);
  w.key("n_distinct").value(report.n_distinct);
  w.key("delta_tau").value(report.delta_tau);
  w.key("enumerated").value(report.enumerated);
  w.end_object();
  return w.str();
}

}  // namespace chronos
