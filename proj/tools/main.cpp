// Copyright 2026 The anyon-chronos Authors
// SPDX-License-Identifier: Apache-2.0
//
// chronos: command-line front end for the anyon-chronos library.
//
// Subcommands: model show, braid eval, braid closure, fuse, povm enumerate,
// paw run, resolution. Reports go to stdout (or --out) as JSON; `fuse` and
// `paw run` also speak CSV. Exit codes: 0 success, 1 domain/numerical error,
// 2 usage error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "chronos/serialize.hpp"

namespace {

using namespace chronos;

constexpr std::uint64_t kDefaultSeed = 20260822;

std::uint64_t sampling_seed() {
  const char* env = std::getenv("ANYON_CHRONOS_SEED");
  if (env == nullptr || *env == '\0') return kDefaultSeed;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(env, &end, 10);
  if (end == nullptr || *end != '\0') {
    throw Error(ErrorCode::invalid_argument,
                "ANYON_CHRONOS_SEED must be a decimal integer");
  }
  return parsed;
}

void emit(const std::string& report, const std::string& out_path) {
  std::string doc = report;
  if (doc.empty() || doc.back() != '\n') doc += '\n';
  if (out_path.empty()) {
    std::cout << doc;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::io, "cannot open output file: " + out_path);
  }
  out << doc;
  if (!out) {
    throw Error(ErrorCode::io, "write failed: " + out_path);
  }
}

std::array<int, 2> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw Error(ErrorCode::invalid_argument,
                "--pair expects two comma-separated indices, e.g. 1,2");
  }
  try {
    return {std::stoi(text.substr(0, comma)),
            std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument,
                "--pair expects two comma-separated indices, e.g. 1,2");
  }
}

Vec parse_amps(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    try {
      values.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::invalid_argument,
                  "--amps expects comma-separated re,im pairs");
    }
  }
  if (values.empty() || values.size() % 2 != 0) {
    throw Error(ErrorCode::invalid_argument,
                "--amps expects comma-separated re,im pairs");
  }
  Vec amps(values.size() / 2);
  for (size_t k = 0; k < values.size(); k += 2) {
    amps(static_cast<Eigen::Index>(k / 2)) = cx(values[k], values[k + 1]);
  }
  return amps;
}

StateVector resolve_fuse_state(const AnyonModelSpec& model, int n_anyons,
                               const std::string& name,
                               const std::string& amps_text) {
  if (n_anyons == 3) {
    const FusionBasis basis = standard_basis(model, 3, AnyonLabel::sigma);
    if (!amps_text.empty()) return make_state(basis, parse_amps(amps_text));
    return make_state(basis, named_ket(name.empty() ? "0" : name));
  }
  const FusionBasis basis = standard_basis(model, 6, AnyonLabel::vac);
  if (!amps_text.empty()) return make_state(basis, parse_amps(amps_text));
  const std::string resolved = name.empty() ? "basis0" : name;
  if (resolved == "singlet") {
    Vec amps = Vec::Zero(4);
    amps(1) = 1.0;
    amps(2) = -1.0;
    return make_state(basis, std::move(amps));
  }
  if (resolved == "braided") {
    GlobalState g = GlobalState::prepare_bell_via_braiding(model);
    return g.state();
  }
  if (resolved.rfind("basis", 0) == 0) {
    const int index = std::atoi(resolved.c_str() + 5);
    return basis_state(basis, index);
  }
  throw Error(ErrorCode::invalid_argument,
              "--state for six anyons accepts singlet, braided, or basis<k>");
}

std::vector<PovmEffect> load_povm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open POVM file: " + path);
  }
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const std::exception& e) {
    throw Error(ErrorCode::invalid_argument,
                std::string("POVM file is not valid JSON: ") + e.what());
  }
  if (!doc.contains("effects") || !doc["effects"].is_array()) {
    throw Error(ErrorCode::invalid_argument,
                "POVM file must contain an \"effects\" array");
  }
  std::vector<PovmEffect> effects;
  for (const auto& item : doc["effects"]) {
    PovmEffect effect;
    effect.outcome_label = item.value("outcome", std::to_string(effects.size()));
    const auto& rows = item.at("matrix");
    if (!rows.is_array() || rows.size() != 2) {
      throw Error(ErrorCode::invalid_argument,
                  "each effect matrix must be 2x2 with [re, im] entries");
    }
    effect.matrix = Mat(2, 2);
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        const auto& entry = rows.at(i).at(j);
        effect.matrix(i, j) =
            cx(entry.at(0).get<double>(), entry.at(1).get<double>());
      }
    }
    effects.push_back(std::move(effect));
  }
  return effects;
}

std::vector<std::int64_t> sample_outcomes(
    const std::vector<FusionOutcome>& outcomes, std::int64_t n_samples,
    std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<std::int64_t> counts(outcomes.size(), 0);
  for (std::int64_t s = 0; s < n_samples; ++s) {
    // Top 53 bits give a uniform double in [0, 1); inverse-CDF walk keeps
    // the draw independent of library distribution internals.
    const double x =
        static_cast<double>(gen() >> 11) * (1.0 / 9007199254740992.0);
    double acc = 0.0;
    size_t pick = outcomes.size() - 1;
    for (size_t k = 0; k < outcomes.size(); ++k) {
      acc += outcomes[k].probability;
      if (x < acc) {
        pick = k;
        break;
      }
    }
    ++counts[pick];
  }
  return counts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anyon-chronos: relational time in a small anyonic universe"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "chronos 0.1.0");

  std::string out_path;
  app.add_option("--out", out_path, "Write the report to a file")
      ->capture_default_str();

  std::string model_name = "su2_2";
  std::string format = "json";
  int anyons = 3;
  std::string word_text;
  int apply_index = -1;
  std::uint64_t max_size = 1000000;
  std::string pair_text;
  std::string state_name;
  std::string amps_text;
  std::int64_t n_samples = 0;
  int ancilla = 0;
  bool cross_check = false;
  std::string resource = "singlet";
  int ticks = 0;
  std::string povm_file;
  std::string gates = "clifford";

  const auto model_check = CLI::IsMember({"su2_2", "ising"});
  const auto format_check = CLI::IsMember({"json", "csv"});
  const auto anyons_check = CLI::IsMember({3, 6});

  auto* model_cmd = app.add_subcommand("model", "Anyon model data");
  auto* model_show = model_cmd->add_subcommand("show", "Emit model data and validation");
  model_show->add_option("--model", model_name, "Model name")->check(model_check);

  auto* braid_cmd = app.add_subcommand("braid", "Braid-group operations");
  auto* braid_eval = braid_cmd->add_subcommand("eval", "Evaluate a braid word");
  braid_eval->add_option("--model", model_name, "Model name")->check(model_check);
  braid_eval->add_option("--anyons", anyons, "Anyon count")->check(anyons_check);
  braid_eval->add_option("--word", word_text, "Braid word, e.g. \"s2 s4 S3\"")
      ->required();
  braid_eval->add_option("--apply", apply_index,
                         "Apply the unitary to this basis state");

  auto* braid_closure = braid_cmd->add_subcommand("closure",
                                                  "Enumerate the gate group");
  braid_closure->add_option("--model", model_name, "Model name")->check(model_check);
  braid_closure->add_option("--anyons", anyons, "Anyon count")->check(anyons_check);
  braid_closure->add_option("--max-size", max_size, "Closure size budget");

  auto* fuse_cmd = app.add_subcommand("fuse", "Fuse a pair of anyons");
  fuse_cmd->add_option("--model", model_name, "Model name")->check(model_check);
  fuse_cmd->add_option("--anyons", anyons, "Anyon count")->check(anyons_check);
  fuse_cmd->add_option("--pair", pair_text, "Anyon pair, e.g. 1,2")->required();
  fuse_cmd->add_option("--state", state_name,
                       "Named input state (3 anyons: 0,1,+,-,+i,-i; "
                       "6 anyons: singlet, braided, basis<k>)");
  fuse_cmd->add_option("--amps", amps_text, "Raw amplitudes re,im,re,im,...");
  fuse_cmd->add_option("--samples", n_samples, "Draw this many samples");
  fuse_cmd->add_option("--format", format, "json or csv")->check(format_check);

  auto* povm_cmd = app.add_subcommand("povm", "Clock POVMs");
  auto* povm_enumerate =
      povm_cmd->add_subcommand("enumerate", "Enumerate the Clifford effect catalog");
  povm_enumerate->add_option("--model", model_name, "Model name")->check(model_check);
  povm_enumerate->add_option("--ancilla", ancilla, "Ancilla count (0..2)")
      ->required()
      ->check(CLI::Range(0, 2));
  povm_enumerate->add_flag("--cross-check", cross_check,
                           "Also enumerate by full group closure (ancilla <= 1)");

  auto* paw_cmd = app.add_subcommand("paw", "Relational-evolution runs against a clock schedule");
  auto* paw_run = paw_cmd->add_subcommand("run", "Condition on a clock schedule");
  paw_run->add_option("--model", model_name, "Model name")->check(model_check);
  paw_run->add_option("--resource", resource, "Global state")
      ->check(CLI::IsMember({"singlet", "braided"}));
  paw_run->add_option("--ticks", ticks, "Number of clock ticks")->required();
  paw_run->add_option("--povm-file", povm_file,
                      "JSON file with rank-1 clock effects");
  paw_run->add_option("--format", format, "json or csv")->check(format_check);

  auto* resolution_cmd =
      app.add_subcommand("resolution", "Clock time resolution for a gate class");
  resolution_cmd->add_option("--gates", gates, "Gate class")
      ->check(CLI::IsMember({"clifford", "universal"}));
  resolution_cmd->add_option("--ancilla", ancilla, "Ancilla count")
      ->required()
      ->check(CLI::Range(0, 20));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }

  try {
    const AnyonModelSpec model = model_by_name(model_name);
    std::string report;

    if (model_show->parsed()) {
      report = model_show_json(model, validate_model(model));
    } else if (braid_eval->parsed()) {
      const FusionBasis basis =
          (anyons == 3) ? standard_basis(model, 3, AnyonLabel::sigma)
                        : standard_basis(model, 6, AnyonLabel::vac);
      const BraidWord word = BraidWord::parse(anyons, word_text);
      const Mat u = evaluate_braid(word, model, basis);
      if (apply_index >= 0) {
        const Vec input = basis_state(basis, apply_index).amplitudes;
        const Vec output = u * input;
        report = braid_eval_json(model, word, u, &input, &output);
      } else {
        report = braid_eval_json(model, word, u, nullptr, nullptr);
      }
    } else if (braid_closure->parsed()) {
      const FusionBasis basis =
          (anyons == 3) ? standard_basis(model, 3, AnyonLabel::sigma)
                        : standard_basis(model, 6, AnyonLabel::vac);
      const ClosureResult closure =
          group_closure(basis_generators(model, basis), max_size);
      report = braid_closure_json(model, anyons, closure, max_size);
    } else if (fuse_cmd->parsed()) {
      const StateVector input =
          resolve_fuse_state(model, anyons, state_name, amps_text);
      const auto outcomes = fuse_pair(input, parse_pair(pair_text));
      std::optional<std::vector<std::int64_t>> counts;
      std::uint64_t seed = 0;
      if (n_samples > 0) {
        seed = sampling_seed();
        counts = sample_outcomes(outcomes, n_samples, seed);
      }
      if (format == "csv") {
        report = fuse_csv(outcomes, counts ? &*counts : nullptr);
      } else {
        report = fuse_json(model, input, outcomes,
                           counts ? &*counts : nullptr, seed, n_samples);
      }
    } else if (povm_enumerate->parsed()) {
      const EffectCatalog catalog = enumerate_clifford_povms(ancilla);
      std::optional<EffectCatalog> cross;
      if (cross_check) {
        cross = enumerate_clifford_povms_by_closure(ancilla);
      }
      report = povm_enumerate_json(catalog, cross ? &*cross : nullptr);
    } else if (paw_run->parsed()) {
      GlobalState global =
          (resource == "singlet")
              ? GlobalState::prepare_bell_singlet()
              : GlobalState::prepare_bell_via_braiding(model);
      const ClockSchedule schedule =
          povm_file.empty() ? ClockSchedule::equatorial(ticks)
                            : ClockSchedule::from_effects(load_povm_file(povm_file));
      if (!povm_file.empty() && schedule.n_ticks != ticks) {
        throw Error(ErrorCode::invalid_argument,
                    "--ticks disagrees with the POVM file's effect count");
      }
      const EvolutionReport evolution =
          run_schedule(std::move(global), schedule);
      report = (format == "csv")
                   ? paw_run_csv(evolution)
                   : paw_run_json(resource, schedule.n_ticks, evolution);
    } else if (resolution_cmd->parsed()) {
      report = resolution_json(
          time_resolution(gate_class_from_string(gates), ancilla));
    }

    emit(report, out_path);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
