// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0

#include "chronos/braiding.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace chronos {

BraidWord BraidWord::parse(int n_strands, std::string_view text) {
  if (n_strands < 2) {
    throw Error(ErrorCode::invalid_argument,
                "BraidWord: need at least 2 strands");
  }
  BraidWord word;
  word.n_strands = n_strands;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    if (token.size() < 2 || (token[0] != 's' && token[0] != 'S')) {
      throw Error(ErrorCode::invalid_argument,
                  "BraidWord: bad token '" + token +
                      "' (expected s<i> or S<i>)");
    }
    int index = 0;
    for (size_t k = 1; k < token.size(); ++k) {
      if (!std::isdigit(static_cast<unsigned char>(token[k]))) {
        throw Error(ErrorCode::invalid_argument,
                    "BraidWord: bad token '" + token + "'");
      }
      index = index * 10 + (token[k] - '0');
    }
    if (index < 1 || index >= n_strands) {
      throw Error(ErrorCode::invalid_argument,
                  "BraidWord: crossing index " + std::to_string(index) +
                      " out of range for " + std::to_string(n_strands) +
                      " strands");
    }
    word.crossings.push_back({index, token[0] == 's'});
  }
  return word;
}

std::string BraidWord::format() const {
  std::string out;
  for (const Crossing& c : crossings) {
    if (!out.empty()) out += ' ';
    out += c.over ? 's' : 'S';
    out += std::to_string(c.index);
  }
  return out;
}

PhaseCanonicalGate PhaseCanonicalGate::from(const Mat& m) {
  PhaseCanonicalGate gate;
  gate.matrix = phase_canonical(m);
  gate.key = canonical_key(gate.matrix);
  return gate;
}

namespace {

int strand_count_of(const FusionBasis& basis) { return basis.n_anyons; }

void require_z_frame(const FusionBasis& basis) {
  for (char f : basis.frame) {
    if (f != 'z') {
      throw Error(ErrorCode::invalid_argument,
                  "braid generators are defined on the z-frame basis; "
                  "reassociate back first");
    }
  }
}

}  // namespace

Mat generator_matrix(const AnyonModelSpec& model, const FusionBasis& basis,
                     int i) {
  const int n = strand_count_of(basis);
  if (i < 1 || i >= n) {
    throw Error(ErrorCode::invalid_argument,
                "generator_matrix: strand index " + std::to_string(i) +
                    " out of range for " + std::to_string(n) + " strands");
  }
  require_z_frame(basis);

  const Mat& r = model.r_matrix;
  const Mat b = model.f_matrix * r * model.f_matrix;

  if (n == 3) {
    return (i == 1) ? r : b;
  }

  switch (i) {
    case 1: return kron(r, identity(2));
    case 2: return kron(b, identity(2));
    case 4: return kron(identity(2), b);
    case 5: return kron(identity(2), r);
    case 3: {
      // Exchange of the two inner strands. In the two-triple tree both pair
      // labels are spectators; the phase is the exchange phase of the two
      // triple charges, whose fusion channel is vac when the labels agree
      // and psi when they differ.
      Mat g = Mat::Zero(4, 4);
      for (int a = 0; a < 2; ++a) {
        for (int ap = 0; ap < 2; ++ap) {
          const AnyonLabel channel =
              (a == ap) ? AnyonLabel::vac : AnyonLabel::psi;
          g(a * 2 + ap, a * 2 + ap) = model.r_phase(channel);
        }
      }
      return g;
    }
    default:
      throw Error(ErrorCode::invalid_argument, "unreachable strand index");
  }
}

Mat evaluate_braid(const BraidWord& word, const AnyonModelSpec& model,
                   const FusionBasis& basis) {
  if (word.n_strands != basis.n_anyons) {
    throw Error(ErrorCode::invalid_argument,
                "evaluate_braid: word strand count " +
                    std::to_string(word.n_strands) +
                    " does not match basis anyon count " +
                    std::to_string(basis.n_anyons));
  }
  Mat u = identity(basis.dim());
  for (const Crossing& c : word.crossings) {
    Mat g = generator_matrix(model, basis, c.index);
    if (!c.over) g = Mat(g.adjoint());
    u = g * u;
  }
  return u;
}

std::vector<Mat> basis_generators(const AnyonModelSpec& model,
                                  const FusionBasis& basis) {
  std::vector<Mat> gens;
  for (int i = 1; i < basis.n_anyons; ++i) {
    gens.push_back(generator_matrix(model, basis, i));
  }
  return gens;
}

ValidationReport verify_braid_relations(const AnyonModelSpec& model,
                                        const FusionBasis& basis) {
  ValidationReport report;
  const std::vector<Mat> gens = basis_generators(model, basis);
  const Eigen::Index d = basis.dim();

  double unitary_resid = 0.0;
  double inverse_resid = 0.0;
  for (const Mat& g : gens) {
    unitary_resid = std::max(unitary_resid, unitarity_residual(g));
    inverse_resid =
        std::max(inverse_resid, max_abs(g * g.adjoint() - identity(d)));
  }
  report.add("generators_unitary", unitary_resid <= tol::unitary,
             unitary_resid);
  report.add("under_is_inverse", inverse_resid <= tol::unitary, inverse_resid);

  double yb_resid = 0.0;
  for (size_t i = 0; i + 1 < gens.size(); ++i) {
    const Mat& a = gens[i];
    const Mat& b = gens[i + 1];
    yb_resid = std::max(yb_resid, max_abs(a * b * a - b * a * b));
  }
  report.add("braid_relation", yb_resid <= tol::unitary, yb_resid);

  double far_resid = 0.0;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 2; j < gens.size(); ++j) {
      far_resid = std::max(far_resid,
                           max_abs(gens[i] * gens[j] - gens[j] * gens[i]));
    }
  }
  report.add("far_commutation", far_resid <= tol::unitary, far_resid);

  if (basis.n_anyons == 6) {
    // Orientation convention check: with positive crossings throughout, the
    // word s2 s4 s3 maps |vac,vac> to the two-triple Bell state
    // (|+,0> + |-,1>)/sqrt(2) up to a global phase of i.
    const BraidWord word = BraidWord::parse(6, "s2 s4 s3");
    const Vec out =
        evaluate_braid(word, model, basis) * basis_state(basis, 0).amplitudes;
    Vec target(4);
    target << 1, 1, 1, -1;
    target /= 2.0;
    const double fid = fidelity(out, target);
    report.add("bell_word_orientation", 1.0 - fid <= tol::fidelity, 1.0 - fid,
               "positive crossings; global phase i relative to the target");
  }

  return report;
}

ClosureResult group_closure(const std::vector<Mat>& generators,
                            size_t max_size) {
  if (generators.empty()) {
    throw Error(ErrorCode::invalid_argument, "group_closure: no generators");
  }
  const Eigen::Index d = generators.front().rows();
  for (const Mat& g : generators) {
    if (g.rows() != d || g.cols() != d) {
      throw Error(ErrorCode::invalid_argument,
                  "group_closure: generator dimensions disagree");
    }
    if (!is_unitary(g)) {
      throw Error(ErrorCode::invalid_argument,
                  "group_closure: generators must be unitary");
    }
  }

  std::map<std::string, Mat> seen;
  std::deque<Mat> frontier;
  PhaseCanonicalGate id = PhaseCanonicalGate::from(identity(d));
  seen.emplace(id.key, id.matrix);
  frontier.push_back(id.matrix);

  while (!frontier.empty()) {
    const Mat current = frontier.front();
    frontier.pop_front();
    for (const Mat& g : generators) {
      PhaseCanonicalGate next = PhaseCanonicalGate::from(g * current);
      auto [it, inserted] = seen.emplace(next.key, next.matrix);
      if (inserted) {
        if (seen.size() > max_size) {
          throw Error(ErrorCode::budget,
                      "group_closure: closure exceeds max_size " +
                          std::to_string(max_size) +
                          " (non-finite or too-large group)");
        }
        frontier.push_back(next.matrix);
      }
    }
  }

  ClosureResult result;
  result.elements.reserve(seen.size());
  for (auto& [key, mat] : seen) {
    result.elements.push_back(PhaseCanonicalGate{std::move(mat), key});
  }
  return result;
}

std::vector<Vec> reachable_states(const StateVector& start,
                                  const ClosureResult& group) {
  std::map<std::string, Vec> seen;
  for (const PhaseCanonicalGate& g : group.elements) {
    if (g.matrix.cols() != start.dim()) {
      throw Error(ErrorCode::invalid_argument,
                  "reachable_states: dimension mismatch");
    }
    Vec v = phase_canonical(Vec(g.matrix * start.amplitudes));
    seen.emplace(canonical_key(v), std::move(v));
  }
  std::vector<Vec> out;
  out.reserve(seen.size());
  for (auto& [key, v] : seen) out.push_back(std::move(v));
  return out;
}

}  // namespace chronos
