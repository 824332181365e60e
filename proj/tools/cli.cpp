// Copyright 2026 The qobf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iostream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "qobf/circuit_library.hpp"
#include "qobf/dag.hpp"
#include "qobf/decoupling.hpp"
#include "qobf/equivalence.hpp"
#include "qobf/error.hpp"
#include "qobf/json_io.hpp"
#include "qobf/metrics.hpp"
#include "qobf/pipeline.hpp"
#include "qobf/qasm.hpp"
#include "qobf/qcoo.hpp"
#include "qobf/schedule.hpp"
#include "qobf/seed.hpp"
#include "qobf/simulator.hpp"

namespace qobf::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::uint64_t seed = 0;
  bool lambda = true;
  std::string durations;
  std::string config;
  std::size_t samples = kDefaultPtdSamples;
  double ratio = 0.10;
  bool ratio_override = false;
  std::uint64_t shots = 10000;
  std::size_t cap = 16;
  std::size_t repeats = 10;
  std::size_t random_count = 20;
  std::string out_dir = ".";
  std::string out_file;
  std::string ek;
};

/// Options registered on one subcommand, by flag name.
using Registered = std::map<std::string, CLI::Option *>;

void add_seed(CLI::App *app, Options &o, Registered &r) {
  r["seed"] = app->add_option("--seed", o.seed, "Root seed; every stage derives its stream from it");
}
void add_config(CLI::App *app, Options &o, Registered &r) {
  r["config"] = app->add_option("--config", o.config, "JSON config file; explicit flags override it");
}
void add_lambda(CLI::App *app, Options &o, Registered &r) {
  r["lambda"] = app->add_flag("--lambda,!--no-lambda", o.lambda, "Enable the ZZ-merge branch (default on)");
}
void add_durations(CLI::App *app, Options &o, Registered &r) {
  r["durations"] = app->add_option("--durations", o.durations, "Duration table JSON {kind: ns}");
}
void add_verify_flags(CLI::App *app, Options &o, Registered &r) {
  r["samples"] = app->add_option("--samples", o.samples, "PTD samples (default 64)");
  r["ratio"] = app->add_option("--ratio", o.ratio, "Mutation ratio in [0.05, 0.15] (default 0.10)");
  r["ratio_override"] = app->add_flag("--ratio-override", o.ratio_override, "Allow a ratio outside [0.05, 0.15]");
}
void add_sim_flags(CLI::App *app, Options &o, Registered &r) {
  r["shots"] = app->add_option("--shots", o.shots, "Measurement shots");
  r["cap"] = app->add_option("--cap", o.cap, "Simulator qubit cap (default 16)");
}

bool given(const Registered &r, const std::string &name) {
  const auto it = r.find(name);
  return it != r.end() && it->second->count() > 0;
}

PipelineConfig make_config(const Options &o, const Registered &r) {
  PipelineConfig c = given(r, "config") ? load_config(o.config) : PipelineConfig{};
  if (given(r, "seed")) {
    c.seed = o.seed;
  }
  if (given(r, "lambda")) {
    c.lambda = o.lambda;
  }
  if (given(r, "durations")) {
    c.durations = durations_from_json(read_json_file(o.durations));
  }
  if (given(r, "samples")) {
    c.samples = o.samples;
  }
  if (given(r, "ratio")) {
    c.ratio = o.ratio;
  }
  if (given(r, "ratio_override")) {
    c.ratio_override = o.ratio_override;
  }
  if (given(r, "shots")) {
    c.shots = o.shots;
  }
  if (given(r, "cap")) {
    c.cap = o.cap;
  }
  if (given(r, "repeats")) {
    c.repeats = o.repeats;
  }
  if (given(r, "random_count")) {
    c.random_count = o.random_count;
  }
  c.validate();
  return c;
}

Circuit load_circuit(const std::string &path) {
  try {
    return parse_qasm(read_text_file(path));
  } catch (const ParseError &e) {
    throw Error(path + ": " + e.what());
  }
}

std::string seed_header(std::uint64_t seed, const std::string &stage) {
  return "seed: " + std::to_string(seed) + "\nstage: " + stage;
}

/// Writes JSON to `path`, or to `out` when the path is empty.
void emit_json(const std::string &path, const Json &j, std::ostream &out) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    write_json_file(path, j);
  }
}

std::vector<Qubit> parse_wires(const std::string &list) {
  std::vector<Qubit> wires;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos) {
      throw Error("bad qubit index '" + item + "' in --measured");
    }
    wires.push_back(static_cast<Qubit>(std::stoul(item)));
  }
  std::sort(wires.begin(), wires.end());
  return wires;
}

void write_encryption(const fs::path &dir, const EncryptionResult &enc, std::uint64_t seed) {
  write_text_file(dir / "enc_circuit.qasm", emit_qasm(enc.enc_circuit, seed_header(seed, "encrypt")));
  write_text_file(dir / "enc_prefix.qasm", emit_qasm(enc.enc_prefix, seed_header(seed, "encrypt-prefix")));
  Json ek = key_to_json(enc.ek);
  ek["seed"] = seed;
  Json dk = key_to_json(enc.dk);
  dk["seed"] = seed;
  write_json_file(dir / "ek.json", ek);
  write_json_file(dir / "dk.json", dk);
  write_json_file(dir / "replacement_log.json",
                  Json{{"seed", seed}, {"replacements", replacement_log_to_json(enc.replacement_log)}});
}

Json schedule_report(const Circuit &in, const DecouplingResult &dd, const PipelineConfig &c) {
  const AnalogSchedule before = schedule_circuit(in, c.durations);
  const AnalogSchedule after = schedule_circuit(dd.circuit, c.durations);
  return Json{{"seed", c.seed},
              {"lambda", c.lambda},
              {"durations", durations_to_json(c.durations)},
              {"makespan_before_ns", before.makespan},
              {"makespan_after_ns", after.makespan},
              {"gate_count_before", in.size()},
              {"gate_count_after", dd.circuit.size()},
              {"windows", insertion_log_to_json(dd.log)}};
}

Json verification_json(const PositiveNegativeReport &r, const PipelineConfig &c, std::string_view mode) {
  Json j = positive_negative_to_json(r);
  j["seed"] = c.seed;
  j["samples"] = c.samples;
  j["ratio"] = c.ratio;
  j["requested_mode"] = mode;
  j["canonical_fallback"] = r.canonical_fallback;
  return j;
}

int verdict_exit(const PositiveNegativeReport &r) {
  if (!r.positive.equal) {
    return kExitPositiveFailed;
  }
  if (r.negative.equal) {
    return kExitNegativeFailed;
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"qobf: encrypt, obfuscate, verify and measure Clifford+T circuits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "qobf 0.1.0");

  Options o;
  std::string input;
  std::string second;
  std::string prefix;
  std::string measured;
  std::string circuit_for_wires;
  std::string counts_before;
  std::string counts_after;
  std::string mode = "sampled";
  std::string suite;
  bool exact = false;
  std::size_t budget = kDefaultGedBudget;

  // encrypt
  Registered r_enc;
  auto *enc = app.add_subcommand("encrypt", "QOTP-encrypt a circuit (T/Tdg replacement and key update)");
  enc->add_option("input", input, "Input circuit (QASM subset)")->required();
  add_seed(enc, o, r_enc);
  add_config(enc, o, r_enc);
  enc->add_option("--ek", o.ek, "Use this key JSON instead of generating one");
  enc->add_option("--out", o.out_dir, "Output directory (default .)");

  // obfuscate
  Registered r_obf;
  auto *obf = app.add_subcommand("obfuscate", "Insert decoupling sequences into idle windows");
  obf->add_option("input", input, "Encrypted circuit")->required();
  add_seed(obf, o, r_obf);
  add_config(obf, o, r_obf);
  add_lambda(obf, o, r_obf);
  add_durations(obf, o, r_obf);
  obf->add_option("--out", o.out_dir, "Output directory (default .)");

  // verify
  Registered r_ver;
  auto *ver = app.add_subcommand("verify", "Positive/negative path-sum equivalence test");
  ver->add_option("original", input, "Reference circuit (the encrypted circuit)")->required();
  ver->add_option("obfuscated", second, "Obfuscated circuit")->required();
  add_seed(ver, o, r_ver);
  add_config(ver, o, r_ver);
  add_verify_flags(ver, o, r_ver);
  ver->add_option("--mode", mode, "sampled (with canonical fallback) or canonical")
      ->check(CLI::IsMember({"sampled", "canonical"}));
  ver->add_option("--out", o.out_file, "Verdict JSON path (default stdout)");

  // decrypt
  auto *dec = app.add_subcommand("decrypt", "Classically decrypt measurement counts");
  dec->add_option("counts", input, "Counts JSON")->required();
  dec->add_option("dk", second, "Decryption key JSON")->required();
  dec->add_option("--measured", measured, "Comma-separated measured qubits (default: all)");
  dec->add_option("--circuit", circuit_for_wires, "Take the measured qubits from this circuit");
  dec->add_option("--out", o.out_file, "Output path (default stdout)");

  // simulate
  Registered r_sim;
  auto *sim = app.add_subcommand("simulate", "Statevector simulation and seeded sampling");
  sim->add_option("circuit", input, "Circuit to simulate")->required();
  sim->add_option("--prefix", prefix, "Circuit prepended before simulation (e.g. enc_prefix.qasm)");
  add_seed(sim, o, r_sim);
  add_config(sim, o, r_sim);
  add_sim_flags(sim, o, r_sim);
  sim->add_flag("--exact", exact, "Print the exact distribution instead of sampled counts");
  sim->add_option("--out", o.out_file, "Output path (default stdout)");

  // metrics
  Registered r_met;
  auto *met = app.add_subcommand("metrics", "TVD, normGED and overhead between two circuits");
  met->add_option("before", input, "Circuit before the transformation")->required();
  met->add_option("after", second, "Circuit after the transformation")->required();
  met->add_option("--counts-before", counts_before, "Counts JSON for the first circuit");
  met->add_option("--counts-after", counts_after, "Counts JSON for the second circuit");
  met->add_option("--budget", budget, "Largest graph (nodes) for exact GED")->default_val(kDefaultGedBudget);
  add_config(met, o, r_met);
  add_durations(met, o, r_met);
  met->add_option("--out", o.out_file, "Output path (default stdout)");

  // bench
  Registered r_bench;
  auto *bench = app.add_subcommand("bench", "Run the full pipeline over a generated suite");
  bench->add_option("suite", suite, "toffoli, adders, grover, bv, qft or random")->required();
  add_seed(bench, o, r_bench);
  add_config(bench, o, r_bench);
  add_lambda(bench, o, r_bench);
  add_durations(bench, o, r_bench);
  add_verify_flags(bench, o, r_bench);
  add_sim_flags(bench, o, r_bench);
  r_bench["repeats"] = bench->add_option("--repeats", o.repeats, "Sampling repeats averaged per entry (default 10)");
  r_bench["random_count"] = bench->add_option("--count", o.random_count, "Circuits in the random suite");
  bench->add_option("--out", o.out_dir, "Output directory (default .)");

  // pipeline
  Registered r_pipe;
  auto *pipe = app.add_subcommand("pipeline", "encrypt -> obfuscate -> verify -> simulate -> metrics");
  pipe->add_option("input", input, "Input circuit")->required();
  add_seed(pipe, o, r_pipe);
  add_config(pipe, o, r_pipe);
  add_lambda(pipe, o, r_pipe);
  add_durations(pipe, o, r_pipe);
  add_verify_flags(pipe, o, r_pipe);
  add_sim_flags(pipe, o, r_pipe);
  r_pipe["repeats"] = pipe->add_option("--repeats", o.repeats, "Sampling repeats averaged (default 10)");
  pipe->add_option("--ek", o.ek, "Use this key JSON instead of generating one");
  pipe->add_option("--out", o.out_dir, "Output directory (default .)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err);
  }

  try {
    if (enc->parsed()) {
      const PipelineConfig c = make_config(o, r_enc);
      const Circuit circuit = load_circuit(input);
      const PauliKey ek = o.ek.empty() ? keygen(circuit.num_qubits(), derive_seed(c.seed, "keygen"))
                                       : key_from_json(read_json_file(o.ek));
      const EncryptionResult result = qcoo_transform(circuit, ek);
      write_encryption(o.out_dir, result, c.seed);
      out << "ek=(" << result.ek.a_string() << "," << result.ek.b_string() << ") dk=(" << result.dk.a_string()
          << "," << result.dk.b_string() << ") replacements=" << result.replacement_log.size() << "\n";
      return 0;
    }
    if (obf->parsed()) {
      const PipelineConfig c = make_config(o, r_obf);
      const Circuit circuit = load_circuit(input);
      const DecouplingResult dd = insert_dd(circuit, c.durations, c.lambda, derive_seed(c.seed, "adoa"));
      const fs::path dir = o.out_dir;
      write_text_file(dir / "obfuscated.qasm", emit_qasm(dd.circuit, seed_header(c.seed, "obfuscate")));
      const Json report = schedule_report(circuit, dd, c);
      write_json_file(dir / "schedule_report.json", report);
      out << "windows=" << dd.log.size() << " gates " << circuit.size() << " -> " << dd.circuit.size()
          << " makespan " << report["makespan_before_ns"].get<double>() << " -> "
          << report["makespan_after_ns"].get<double>() << " ns\n";
      return 0;
    }
    if (ver->parsed()) {
      const PipelineConfig c = make_config(o, r_ver);
      const Circuit reference = load_circuit(input);
      const Circuit candidate = load_circuit(second);
      const std::uint64_t seed = derive_seed(c.seed, "verify");
      const PositiveNegativeReport r =
          mode == "canonical"
              ? positive_negative_test(reference, candidate, c.ratio, c.samples, seed, EquivMode::Canonical)
              : verify_with_fallback(reference, candidate, c.ratio, c.samples, seed);
      emit_json(o.out_file, verification_json(r, c, mode), out);
      return verdict_exit(r);
    }
    if (dec->parsed()) {
      const Counts counts = counts_from_json(read_json_file(input));
      const PauliKey dk = key_from_json(read_json_file(second));
      std::optional<std::vector<Qubit>> wires;
      if (!measured.empty()) {
        wires = parse_wires(measured);
      } else if (!circuit_for_wires.empty()) {
        wires = load_circuit(circuit_for_wires).measured();
      }
      const Counts plain = wires ? rpd_decrypt_counts(counts, dk, std::span<const Qubit>(*wires))
                                 : rpd_decrypt_counts(counts, dk);
      emit_json(o.out_file, counts_to_json(plain), out);
      return 0;
    }
    if (sim->parsed()) {
      const PipelineConfig c = make_config(o, r_sim);
      Circuit circuit = load_circuit(input);
      if (!prefix.empty()) {
        circuit = concat(load_circuit(prefix), circuit);
      }
      SimulatorConfig sc;
      sc.max_qubits = c.cap;
      const State state = simulate(circuit, sc);
      std::vector<Qubit> wires = circuit.measured();
      if (wires.empty()) {
        wires.resize(circuit.num_qubits());
        std::iota(wires.begin(), wires.end(), Qubit{0});
      }
      if (exact) {
        emit_json(o.out_file, distribution_to_json(exact_distribution(state, wires)), out);
      } else {
        Json j = counts_to_json(sample_counts(state, wires, c.shots, derive_seed(c.seed, "shots")));
        j["_seed"] = c.seed;
        emit_json(o.out_file, j, out);
      }
      return 0;
    }
    if (met->parsed()) {
      const PipelineConfig c = make_config(o, r_met);
      const Circuit before = load_circuit(input);
      const Circuit after = load_circuit(second);
      const AnalogSchedule sb = schedule_circuit(before, c.durations);
      const AnalogSchedule sa = schedule_circuit(after, c.durations);
      ReportInputs in;
      in.before = &before;
      in.before_schedule = &sb;
      in.after = &after;
      in.after_schedule = &sa;
      in.ged_budget = budget;
      if (!counts_before.empty() || !counts_after.empty()) {
        if (counts_before.empty() || counts_after.empty()) {
          throw Error("--counts-before and --counts-after must be given together");
        }
        in.counts = std::make_pair(counts_from_json(read_json_file(counts_before)),
                                   counts_from_json(read_json_file(counts_after)));
      }
      emit_json(o.out_file, report_to_json(overhead_report(in)), out);
      return 0;
    }
    if (bench->parsed()) {
      const PipelineConfig c = make_config(o, r_bench);
      const BenchResult result = run_bench(suite, c);
      const fs::path dir = o.out_dir;
      write_text_file(dir / (suite + ".csv"), bench_csv(result));
      const Json summary = bench_summary(result, c);
      write_json_file(dir / (suite + "_summary.json"), summary);
      out << "suite=" << suite << " entries=" << result.rows.size()
          << " positive_pass_rate=" << summary["positive_pass_rate"].get<double>()
          << " negative_detection_rate=" << summary["negative_detection_rate"].get<double>() << "\n";
      return 0;
    }
    if (pipe->parsed()) {
      const PipelineConfig c = make_config(o, r_pipe);
      const Circuit circuit = load_circuit(input);
      std::optional<PauliKey> ek;
      if (!o.ek.empty()) {
        ek = key_from_json(read_json_file(o.ek));
      }
      const PipelineResult r = run_pipeline(circuit, c, ek);
      const fs::path dir = o.out_dir;
      write_encryption(dir, r.encryption, c.seed);
      write_text_file(dir / "obfuscated.qasm", emit_qasm(r.decoupling.circuit, seed_header(c.seed, "obfuscate")));
      write_json_file(dir / "schedule_report.json", schedule_report(r.encryption.enc_circuit, r.decoupling, c));
      write_json_file(dir / "verdict.json", verification_json(r.verification, c, "sampled"));
      Json report = report_to_json(r.report);
      report["seed"] = c.seed;
      report["canonical_positive"] = verdict_to_json(r.canonical_positive);
      report["decrypt_ok"] = r.decrypt_ok ? Json(*r.decrypt_ok) : Json(nullptr);
      report["exact_tvd"] = r.exact_tvd ? Json(*r.exact_tvd) : Json(nullptr);
      write_json_file(dir / "report.json", report);
      out << "positive=" << (r.verification.positive.equal ? "equal" : "unequal")
          << " negative=" << (r.verification.negative.equal ? "undetected" : "detected")
          << " norm_ged=" << r.report.ged.normalized() << "\n";
      return verdict_exit(r.verification);
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

}  // namespace qobf::cli
