#include "wdlmp/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "wdlmp/errors.hpp"

namespace wdlmp {
namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& where, std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool ok = false;
    for (auto a : allowed) ok = ok || key == a;
    if (!ok) throw ConfigError(where.empty() ? key : where + "." + key, "unknown key");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& field) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ConfigError(field, "missing");
  return *it;
}

double get_number(const json& v, const std::string& field) {
  if (!v.is_number()) throw ConfigError(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ConfigError(field, "must be finite");
  return x;
}

std::size_t get_count(const json& v, const std::string& field) {
  if (!v.is_number_integer()) throw ConfigError(field, "expected an integer");
  if (v.is_number_unsigned()) return v.get<std::size_t>();
  const auto x = v.get<std::int64_t>();
  if (x < 0) throw ConfigError(field, "must be non-negative");
  return static_cast<std::size_t>(x);
}

std::vector<double> get_number_list(const json& v, const std::string& field) {
  if (!v.is_array()) throw ConfigError(field, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(get_number(v[i], field + "[" + std::to_string(i) + "]"));
  return out;
}

NoiseModel parse_noise(const json& v) {
  if (!v.is_object()) throw ConfigError("noise", "expected an object");
  const auto& type = require(v, "type", "noise.type");
  if (!type.is_string()) throw ConfigError("noise.type", "expected a string");
  const auto kind = type.get<std::string>();
  if (kind == "gaussian") {
    reject_unknown(v, "noise", {"type", "stds"});
    auto stds = get_number_list(require(v, "stds", "noise.stds"), "noise.stds");
    for (double s : stds) {
      if (!(s > 0.0)) throw ConfigError("noise.stds", "must be positive");
    }
    return NoiseModel(GaussianNoise{std::move(stds)});
  }
  if (kind == "alpha_stable") {
    reject_unknown(v, "noise", {"type", "alpha", "dispersions"});
    const double alpha = get_number(require(v, "alpha", "noise.alpha"), "noise.alpha");
    if (!(alpha > 0.0 && alpha <= 2.0)) throw ConfigError("noise.alpha", "out of range (0, 2]");
    auto disp = get_number_list(require(v, "dispersions", "noise.dispersions"), "noise.dispersions");
    for (double g : disp) {
      if (!(g > 0.0)) throw ConfigError("noise.dispersions", "must be positive");
    }
    return NoiseModel(AlphaStableNoise{alpha, std::move(disp)});
  }
  throw ConfigError("noise.type", "expected \"gaussian\" or \"alpha_stable\"");
}

}  // namespace

void ExperimentConfig::validate() const {
  if (num_nodes == 0) throw ConfigError("topology.num_nodes", "must be at least 1");
  try {
    (void)topology();
  } catch (const TopologyError& e) {
    throw ConfigError("topology", e.what());
  }
  if (dimension == 0) throw ConfigError("dimension", "must be at least 1");
  if (!(sigma_u > 0.0) || !std::isfinite(sigma_u)) throw ConfigError("sigma_u", "must be positive");
  if (noise.num_nodes() != num_nodes) {
    throw ConfigError(noise.is_gaussian() ? "noise.stds" : "noise.dispersions",
                      "expected " + std::to_string(num_nodes) + " entries");
  }
  if (algorithms.empty()) throw ConfigError("algorithms", "must name at least one algorithm");
  std::set<Algorithm> seen;
  for (auto a : algorithms) {
    if (!seen.insert(a).second) throw ConfigError("algorithms", "duplicate " + std::string(algorithm_name(a)));
  }
  if (!(lmp.p > 1.0 && lmp.p <= 2.0)) throw ConfigError("p", "p out of range (1, 2]");
  if (!(lmp.mu > 0.0) || !std::isfinite(lmp.mu)) throw ConfigError("mu", "must be positive");
  if (!(lmp.epsilon >= 0.0) || !std::isfinite(lmp.epsilon)) throw ConfigError("epsilon", "must be non-negative");
  if (!(mu_a_global > 0.0) || !std::isfinite(mu_a_global)) throw ConfigError("mu_a_global", "must be positive");
  if (!(mu_a_local > 0.0) || !std::isfinite(mu_a_local)) throw ConfigError("mu_a_local", "must be positive");
  if (iterations == 0) throw ConfigError("iterations", "must be at least 1");
  if (trials == 0) throw ConfigError("trials", "must be at least 1");
  if (snapshot_stride == 0) throw ConfigError("snapshot_stride", "must be at least 1");
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!doc.is_object()) throw ConfigError("<document>", "expected a JSON object");
  reject_unknown(doc, "",
                 {"topology", "dimension", "sigma_u", "noise", "algorithms", "p", "mu", "mu_a_global", "mu_a_local",
                  "epsilon", "iterations", "trials", "master_seed", "snapshot_stride"});

  ExperimentConfig c;

  const auto& topo = require(doc, "topology", "topology");
  if (!topo.is_object()) throw ConfigError("topology", "expected an object");
  reject_unknown(topo, "topology", {"num_nodes", "edges"});
  c.num_nodes = get_count(require(topo, "num_nodes", "topology.num_nodes"), "topology.num_nodes");
  const auto& edges = require(topo, "edges", "topology.edges");
  if (!edges.is_array()) throw ConfigError("topology.edges", "expected an array of [k, l] pairs");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto field = "topology.edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) throw ConfigError(field, "expected a [k, l] pair");
    const auto a = get_count(edges[i][0], field);
    const auto b = get_count(edges[i][1], field);
    if (a >= c.num_nodes || b >= c.num_nodes) throw ConfigError(field, "node index out of range");
    c.edges.emplace_back(a, b);
  }

  c.dimension = get_count(require(doc, "dimension", "dimension"), "dimension");
  if (doc.contains("sigma_u")) c.sigma_u = get_number(doc["sigma_u"], "sigma_u");
  c.noise = parse_noise(require(doc, "noise", "noise"));

  if (doc.contains("algorithms")) {
    const auto& algs = doc["algorithms"];
    if (!algs.is_array()) throw ConfigError("algorithms", "expected an array of names");
    c.algorithms.clear();
    for (const auto& name : algs) {
      if (!name.is_string()) throw ConfigError("algorithms", "expected an array of names");
      const auto parsed = parse_algorithm(name.get<std::string>());
      if (!parsed) throw ConfigError("algorithms", "unknown algorithm \"" + name.get<std::string>() + "\"");
      c.algorithms.push_back(*parsed);
    }
  }

  c.lmp.p = get_number(require(doc, "p", "p"), "p");
  c.lmp.mu = get_number(require(doc, "mu", "mu"), "mu");
  if (doc.contains("epsilon")) c.lmp.epsilon = get_number(doc["epsilon"], "epsilon");
  c.mu_a_global = get_number(require(doc, "mu_a_global", "mu_a_global"), "mu_a_global");
  c.mu_a_local = get_number(require(doc, "mu_a_local", "mu_a_local"), "mu_a_local");
  c.iterations = get_count(require(doc, "iterations", "iterations"), "iterations");
  c.trials = get_count(require(doc, "trials", "trials"), "trials");
  const auto& seed = require(doc, "master_seed", "master_seed");
  if (!seed.is_number_unsigned()) throw ConfigError("master_seed", "expected a non-negative 64-bit integer");
  c.master_seed = seed.get<std::uint64_t>();
  if (doc.contains("snapshot_stride")) c.snapshot_stride = get_count(doc["snapshot_stride"], "snapshot_stride");

  c.validate();
  return c;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& c) {
  json doc = json::object();
  json edges = json::array();
  for (const auto& [a, b] : c.edges) edges.push_back({a, b});
  doc["topology"] = {{"num_nodes", c.num_nodes}, {"edges", edges}};
  doc["dimension"] = c.dimension;
  doc["sigma_u"] = c.sigma_u;
  if (const auto* g = std::get_if<GaussianNoise>(&c.noise.params())) {
    doc["noise"] = {{"type", "gaussian"}, {"stds", g->stds}};
  } else {
    const auto& s = std::get<AlphaStableNoise>(c.noise.params());
    doc["noise"] = {{"type", "alpha_stable"}, {"alpha", s.alpha}, {"dispersions", s.dispersions}};
  }
  json algs = json::array();
  for (auto a : c.algorithms) algs.push_back(std::string(algorithm_name(a)));
  doc["algorithms"] = algs;
  doc["p"] = c.lmp.p;
  doc["mu"] = c.lmp.mu;
  doc["epsilon"] = c.lmp.epsilon;
  doc["mu_a_global"] = c.mu_a_global;
  doc["mu_a_local"] = c.mu_a_local;
  doc["iterations"] = c.iterations;
  doc["trials"] = c.trials;
  doc["master_seed"] = c.master_seed;
  doc["snapshot_stride"] = c.snapshot_stride;
  return doc.dump(2) + "\n";
}

}  // namespace wdlmp
