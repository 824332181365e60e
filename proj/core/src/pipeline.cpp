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

#include "qobf/pipeline.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "qobf/error.hpp"
#include "qobf/pathsum.hpp"
#include "qobf/seed.hpp"
#include "qobf/simulator.hpp"

namespace qobf {

namespace {

constexpr double kReferenceTvd = 0.7;
constexpr double kReferenceNormGed = 0.88;

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

bool distributions_match(const Distribution &a, const Distribution &b, double tol) {
  return tvd(a, b) * 2.0 <= tol;
}

}  // namespace

void PipelineConfig::validate() const {
  if (samples < 1) {
    throw Error("samples must be at least 1");
  }
  if (!(ratio > 0.0) || ratio > 1.0) {
    throw Error("mutation ratio must be in (0, 1]");
  }
  if (!ratio_override && (ratio < kMinMutationRatio - 1e-12 || ratio > kMaxMutationRatio + 1e-12)) {
    throw Error("mutation ratio " + fixed(ratio) + " is outside [0.05, 0.15]; set ratio_override to allow it");
  }
  if (shots < 1) {
    throw Error("shots must be at least 1");
  }
  if (repeats < 1) {
    throw Error("repeats must be at least 1");
  }
  if (cap < 1) {
    throw Error("simulator cap must be at least 1");
  }
}

PipelineConfig config_from_json(const Json &j, const std::filesystem::path &base_dir) {
  if (!j.is_object()) {
    throw Error("config JSON must be an object");
  }
  PipelineConfig c;
  for (const auto &[key, value] : j.items()) {
    if (key == "seed") {
      c.seed = value.get<std::uint64_t>();
    } else if (key == "lambda") {
      c.lambda = value.get<bool>();
    } else if (key == "durations") {
      if (value.is_string()) {
        std::filesystem::path p = value.get<std::string>();
        if (p.is_relative()) {
          p = base_dir / p;
        }
        c.durations = durations_from_json(read_json_file(p));
      } else {
        c.durations = durations_from_json(value);
      }
    } else if (key == "samples") {
      c.samples = value.get<std::size_t>();
    } else if (key == "ratio") {
      c.ratio = value.get<double>();
    } else if (key == "ratio_override") {
      c.ratio_override = value.get<bool>();
    } else if (key == "shots") {
      c.shots = value.get<std::uint64_t>();
    } else if (key == "cap") {
      c.cap = value.get<std::size_t>();
    } else if (key == "repeats") {
      c.repeats = value.get<std::size_t>();
    } else if (key == "random_count") {
      c.random_count = value.get<std::size_t>();
    } else if (key == "workers") {
      c.workers = value.get<std::size_t>();
    } else {
      throw Error("unknown config key '" + key + "'");
    }
  }
  c.validate();
  return c;
}

PipelineConfig load_config(const std::filesystem::path &path) {
  return config_from_json(read_json_file(path), path.parent_path());
}

Json config_to_json(const PipelineConfig &c) {
  return Json{{"seed", c.seed},
              {"lambda", c.lambda},
              {"durations", durations_to_json(c.durations)},
              {"samples", c.samples},
              {"ratio", c.ratio},
              {"ratio_override", c.ratio_override},
              {"shots", c.shots},
              {"cap", c.cap},
              {"repeats", c.repeats},
              {"random_count", c.random_count}};
}

PipelineResult run_pipeline(const Circuit &circuit, const PipelineConfig &config, const std::optional<PauliKey> &ek) {
  config.validate();
  PipelineResult r;
  const PauliKey key = ek ? *ek : keygen(circuit.num_qubits(), derive_seed(config.seed, "keygen"));
  r.encryption = qcoo_transform(circuit, key);
  const Circuit &enc = r.encryption.enc_circuit;
  r.decoupling = insert_dd(enc, config.durations, config.lambda, derive_seed(config.seed, "adoa"));
  const Circuit &obf = r.decoupling.circuit;

  r.verification = verify_with_fallback(enc, obf, config.ratio, config.samples, derive_seed(config.seed, "verify"));
  r.canonical_positive = pathsum_canonical_equal(circuit_to_pathsum(enc), circuit_to_pathsum(obf));

  const AnalogSchedule before = schedule_circuit(circuit, config.durations);
  const AnalogSchedule after = schedule_circuit(obf, config.durations);
  ReportInputs in;
  in.before = &circuit;
  in.before_schedule = &before;
  in.after = &obf;
  in.after_schedule = &after;
  r.report = overhead_report(in);

  if (circuit.num_qubits() <= config.cap) {
    SimulatorConfig sim;
    sim.max_qubits = config.cap;
    const auto &measured = circuit.measured();
    const State plain = simulate(circuit, sim);
    const State cipher = simulate(concat(r.encryption.enc_prefix, obf), sim);
    const Distribution plain_dist = exact_distribution(plain, measured);
    const Distribution cipher_dist = exact_distribution(cipher, measured);
    r.decrypt_ok =
        distributions_match(rpd_decrypt_distribution(cipher_dist, r.encryption.dk, measured), plain_dist, 1e-9);
    r.exact_tvd = tvd(plain_dist, cipher_dist);
    double sum = 0.0;
    for (std::size_t i = 0; i < config.repeats; ++i) {
      const Counts a = sample_counts(plain, measured, config.shots, derive_seed(config.seed, "shots-plain", i));
      const Counts b = sample_counts(cipher, measured, config.shots, derive_seed(config.seed, "shots-cipher", i));
      sum += tvd(a, b);
    }
    r.mean_tvd = sum / static_cast<double>(config.repeats);
    r.adoa_fidelity = fidelity(simulate(enc, sim), simulate(obf, sim));
    r.report.tvd = r.mean_tvd;
    r.report.fidelity = r.adoa_fidelity;
    r.simulated = true;
  }
  return r;
}

BenchResult run_bench(const std::string &suite, const PipelineConfig &config) {
  config.validate();
  const auto circuits = make_suite(suite, config.seed, config.random_count);
  BenchResult bench;
  bench.suite = suite;
  bench.rows.resize(circuits.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < circuits.size(); i = next++) {
      try {
        PipelineConfig entry = config;
        entry.seed = derive_seed(config.seed, "bench-entry", i);
        bench.rows[i] = BenchRow{circuits[i].name, circuits[i].circuit.num_qubits(),
                                 run_pipeline(circuits[i].circuit, entry)};
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
      }
    }
  };
  std::size_t workers = config.workers != 0 ? config.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, std::max<std::size_t>(1, circuits.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) {
      pool.emplace_back(worker);
    }
    worker();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
  return bench;
}

std::string bench_csv(const BenchResult &bench) {
  std::ostringstream os;
  os << "benchmark,tvd,norm_ged,depth_delta,duration_delta,qubits,gates_before,gates_after,ged_mode,"
        "exact_tvd,positive,negative,canonical_positive,decrypt_ok\n";
  for (const auto &row : bench.rows) {
    const auto &r = row.result;
    os << row.name << ',' << (r.mean_tvd ? fixed(*r.mean_tvd) : "") << ',' << fixed(r.report.ged.normalized())
       << ',' << r.report.depth_delta() << ',' << fixed(r.report.duration_delta()) << ',' << row.qubits << ','
       << r.report.gate_count_before << ',' << r.report.gate_count_after << ',' << ged_mode_name(r.report.ged.mode)
       << ',' << (r.exact_tvd ? fixed(*r.exact_tvd) : "") << ','
       << (r.verification.positive.equal ? "pass" : "fail") << ','
       << (r.verification.negative.equal ? "undetected" : "detected") << ','
       << (r.canonical_positive.equal ? "pass" : "fail") << ','
       << (r.decrypt_ok ? (*r.decrypt_ok ? "yes" : "no") : "") << '\n';
  }
  return os.str();
}

Json bench_summary(const BenchResult &bench, const PipelineConfig &config) {
  Json rows = Json::array();
  std::size_t positive = 0;
  std::size_t canonical = 0;
  std::size_t detected = 0;
  std::size_t simulated = 0;
  double tvd_sum = 0.0;
  double ged_sum = 0.0;
  double pos_ms = 0.0;
  double neg_ms = 0.0;
  for (const auto &row : bench.rows) {
    const auto &r = row.result;
    positive += r.verification.positive.equal;
    canonical += r.canonical_positive.equal;
    detected += !r.verification.negative.equal;
    ged_sum += r.report.ged.normalized();
    pos_ms += r.verification.positive_ms;
    neg_ms += r.verification.negative_ms;
    if (r.mean_tvd) {
      ++simulated;
      tvd_sum += *r.mean_tvd;
    }
    Json j{{"benchmark", row.name},
           {"qubits", row.qubits},
           {"ek", key_to_json(r.encryption.ek)},
           {"dk", key_to_json(r.encryption.dk)},
           {"verification", positive_negative_to_json(r.verification)},
           {"canonical_positive", verdict_to_json(r.canonical_positive)},
           {"report", report_to_json(r.report)}};
    j["decrypt_ok"] = r.decrypt_ok ? Json(*r.decrypt_ok) : Json(nullptr);
    j["exact_tvd"] = r.exact_tvd ? Json(*r.exact_tvd) : Json(nullptr);
    j["adoa_fidelity"] = r.adoa_fidelity ? Json(*r.adoa_fidelity) : Json(nullptr);
    rows.push_back(std::move(j));
  }
  const double n = bench.rows.empty() ? 1.0 : static_cast<double>(bench.rows.size());
  Json s;
  s["suite"] = bench.suite;
  s["seed"] = config.seed;
  s["config"] = config_to_json(config);
  s["entries"] = bench.rows.size();
  s["positive_pass_rate"] = static_cast<double>(positive) / n;
  s["canonical_positive_pass_rate"] = static_cast<double>(canonical) / n;
  s["negative_detection_rate"] = static_cast<double>(detected) / n;
  s["mean_tvd"] = simulated ? Json(tvd_sum / static_cast<double>(simulated)) : Json(nullptr);
  s["mean_norm_ged"] = ged_sum / n;
  s["positive_ms_total"] = pos_ms;
  s["negative_ms_total"] = neg_ms;
  s["timing_ratio"] = pos_ms > 0.0 && neg_ms > 0.0 ? Json(std::max(pos_ms, neg_ms) / std::min(pos_ms, neg_ms))
                                                    : Json(nullptr);
  s["reference_averages"] = Json{{"tvd", kReferenceTvd}, {"norm_ged", kReferenceNormGed}, {"asserted", false}};
  s["rows"] = std::move(rows);
  return s;
}

}  // namespace qobf
