#include "wdlmp/noise.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wdlmp/errors.hpp"

namespace wdlmp {
namespace {

void require_positive(const std::vector<double>& v, const char* what) {
  if (v.empty()) throw Error(std::string(what) + " must not be empty");
  for (double x : v) {
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

NoiseModel::NoiseModel(GaussianNoise g) : params_(std::move(g)) {
  require_positive(std::get<GaussianNoise>(params_).stds, "noise stds");
}

NoiseModel::NoiseModel(AlphaStableNoise s) : params_(std::move(s)) {
  const auto& p = std::get<AlphaStableNoise>(params_);
  if (!(p.alpha > 0.0 && p.alpha <= 2.0)) throw Error("alpha must lie in (0, 2]");
  require_positive(p.dispersions, "noise dispersions");
}

std::size_t NoiseModel::num_nodes() const noexcept { return scales().size(); }

const std::vector<double>& NoiseModel::scales() const noexcept {
  if (const auto* g = std::get_if<GaussianNoise>(&params_)) return g->stds;
  return std::get<AlphaStableNoise>(params_).dispersions;
}

double sample_symmetric_stable(double alpha, double dispersion, Rng& rng) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  std::uniform_real_distribution<double> angle(-half_pi, half_pi);
  std::exponential_distribution<double> expo(1.0);

  double v = angle(rng);
  while (v == -half_pi) v = angle(rng);
  const double scale = std::pow(dispersion, 1.0 / alpha);

  if (alpha == 1.0) return scale * std::tan(v);

  double w = expo(rng);
  while (w == 0.0) w = expo(rng);
  const double x = std::sin(alpha * v) / std::pow(std::cos(v), 1.0 / alpha) *
                   std::pow(std::cos(v - alpha * v) / w, (1.0 - alpha) / alpha);
  return scale * x;
}

double sample_noise(const NoiseModel& model, std::size_t node, Rng& rng) {
  return std::visit(
      [&](const auto& p) -> double {
        using T = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<T, GaussianNoise>) {
          std::normal_distribution<double> normal(0.0, p.stds.at(node));
          return normal(rng);
        } else {
          return sample_symmetric_stable(p.alpha, p.dispersions.at(node), rng);
        }
      },
      model.params());
}

double empirical_char_function(std::span<const double> samples, double t) {
  if (samples.empty()) throw Error("empirical characteristic function needs samples");
  double acc = 0.0;
  for (double v : samples) acc += std::cos(t * v);
  return acc / static_cast<double>(samples.size());
}

}  // namespace wdlmp
