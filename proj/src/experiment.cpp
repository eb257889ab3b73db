#include "wdlmp/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "wdlmp/errors.hpp"
#include "wdlmp/noise.hpp"
#include "wdlmp/random.hpp"
#include "wdlmp/signal.hpp"

namespace wdlmp {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct TrialStreams {
  Rng truth;
  std::vector<Rng> regressors;
  std::vector<Rng> noise;
};

TrialStreams make_streams(const ExperimentConfig& config, Algorithm algorithm, std::size_t trial) {
  const auto alg = static_cast<std::uint64_t>(algorithm);
  TrialStreams s{make_stream(config.master_seed, alg, trial, 0, StreamRole::GroundTruth), {}, {}};
  for (std::size_t k = 0; k < config.num_nodes; ++k) {
    s.regressors.push_back(make_stream(config.master_seed, alg, trial, k, StreamRole::Regressor));
    s.noise.push_back(make_stream(config.master_seed, alg, trial, k, StreamRole::Noise));
  }
  return s;
}

}  // namespace

bool ExperimentResult::ok() const {
  return std::all_of(algorithms.begin(), algorithms.end(), [](const auto& a) { return a.error.empty(); });
}

const AlgorithmResult& ExperimentResult::at(Algorithm a) const {
  for (const auto& r : algorithms) {
    if (r.algorithm == a) return r;
  }
  throw Error("algorithm " + std::string(algorithm_name(a)) + " was not run");
}

double divergence_threshold(const GroundTruth& truth) { return 1e6 * (1.0 + truth.w_o.norm()); }

TrialOutput simulate_trial(const ExperimentConfig& config, const NetworkTopology& topology, Algorithm algorithm,
                           std::size_t trial) {
  auto streams = make_streams(config, algorithm, trial);
  const auto truth = generate_ground_truth(config.dimension, streams.truth);
  const double limit = divergence_threshold(truth);
  const auto n = config.num_nodes;
  const bool per_node = !is_centralized(algorithm);

  TrialOutput out;
  out.curve.squared_deviation.reserve(config.iterations);
  out.trace.stride = config.snapshot_stride;
  if (per_node) out.node_squared_deviation.assign(n, std::vector<double>(config.iterations));

  Estimator estimator(algorithm, topology, config.dimension, config.lmp, config.mu_a_global, config.mu_a_local);
  MeasurementBatch batch(n);
  try {
    for (std::size_t it = 0; it < config.iterations; ++it) {
      for (std::size_t k = 0; k < n; ++k) {
        auto& m = batch[k];
        m.u = generate_regressor(config.dimension, config.sigma_u, streams.regressors[k]);
        m.d = measure(truth, m.u, sample_noise(config.noise, k, streams.noise[k]));
        m.node = k;
        m.time = it;
      }
      estimator.step(batch);

      const double norm = estimator.max_estimate_norm();
      if (!std::isfinite(norm) || norm > limit) {
        throw DivergenceError("estimate norm " + std::to_string(norm) + " exceeded " + std::to_string(limit) +
                              " at iteration " + std::to_string(it));
      }

      double total = 0.0;
      if (per_node) {
        for (std::size_t k = 0; k < n; ++k) {
          const double sq = squared_deviation(estimator.estimate(k), truth);
          out.node_squared_deviation[k][it] = sq;
          total += sq;
        }
        total /= static_cast<double>(n);
      } else {
        total = squared_deviation(estimator.estimate(0), truth);
      }
      out.curve.squared_deviation.push_back(total);
      record(out.trace, it, estimator.current_weights());
    }
    out.final_weights = estimator.current_weights();
  } catch (const DivergenceError& e) {
    out.curve.diverged = true;
    out.diagnostic = "trial " + std::to_string(trial) + ": " + e.what();
  }
  return out;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const RunOptions& options) {
  config.validate();
  const auto start = Clock::now();
  const auto topology = config.topology();

  std::size_t workers = options.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : options.workers;
  workers = std::min(workers, config.trials);

  ExperimentResult result;
  result.config = config;
  result.workers = workers;

  for (auto algorithm : config.algorithms) {
    const auto alg_start = Clock::now();
    std::vector<TrialOutput> trials(config.trials);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
      for (std::size_t t = next++; t < config.trials; t = next++) {
        try {
          trials[t] = simulate_trial(config, topology, algorithm, t);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    };
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
    }
    if (failure) std::rethrow_exception(failure);

    // Reduce in trial-index order.
    AlgorithmResult r;
    r.algorithm = algorithm;
    std::vector<TrialCurve> curves;
    std::vector<WeightTrace> traces;
    std::vector<Eigen::MatrixXd> finals;
    for (auto& t : trials) {
      curves.push_back(std::move(t.curve));
      if (curves.back().diverged) {
        r.diagnostics.push_back(std::move(t.diagnostic));
        continue;
      }
      traces.push_back(std::move(t.trace));
      finals.push_back(std::move(t.final_weights));
    }
    try {
      r.curve = average_curves(curves, std::string(algorithm_name(algorithm)));
      r.trials_used = r.curve->trials_used;
      r.diverged_trials = r.curve->diverged_trials;
      r.trace = average_traces(traces);
      r.final_weights = average_weights(finals);
      if (!is_centralized(algorithm)) {
        r.node_msd_db.assign(config.num_nodes, std::vector<double>(config.iterations, 0.0));
        for (std::size_t k = 0; k < config.num_nodes; ++k) {
          auto& row = r.node_msd_db[k];
          for (const auto& t : trials) {
            if (t.node_squared_deviation.empty() || t.curve.diverged) continue;
            for (std::size_t i = 0; i < config.iterations; ++i) row[i] += t.node_squared_deviation[k][i];
          }
          for (auto& x : row) x = power_to_db(x / static_cast<double>(r.trials_used));
        }
      }
    } catch (const Error& e) {
      r.diverged_trials = config.trials;
      r.error = e.what();
    }
    r.wall_seconds = seconds_since(alg_start);
    result.algorithms.push_back(std::move(r));
  }
  result.wall_seconds = seconds_since(start);
  return result;
}

}  // namespace wdlmp
