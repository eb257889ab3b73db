#include "wdlmp/export.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "wdlmp/errors.hpp"
#include "wdlmp/svg.hpp"

namespace wdlmp {
namespace {

namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& contents, std::vector<fs::path>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << contents;
  out.flush();
  if (!out) throw Error("failed writing " + path.string());
  written.push_back(path);
}

/// Appends "algorithm,iteration,node,neighbor,weight" rows for one weight matrix.
void weight_rows(std::ostringstream& csv, const std::string& prefix, const Eigen::MatrixXd& w,
                 const NetworkTopology& topology) {
  if (w.rows() == 1) {
    for (Eigen::Index k = 0; k < w.cols(); ++k) csv << prefix << k << ",," << format_double(w(0, k)) << '\n';
    return;
  }
  for (Eigen::Index k = 0; k < w.rows(); ++k) {
    for (auto l : topology.neighbors(static_cast<std::size_t>(k))) {
      csv << prefix << k << ',' << l << ',' << format_double(w(k, static_cast<Eigen::Index>(l))) << '\n';
    }
  }
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::vector<fs::path> export_results(const ExperimentResult& result, const fs::path& out_dir,
                                     const ExportOptions& options) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw Error("cannot create " + out_dir.string() + ": " + ec.message());

  const auto topology = result.config.topology();
  std::vector<fs::path> written;

  std::ostringstream msd;
  msd << "algorithm,iteration,msd_db\n";
  for (const auto& r : result.algorithms) {
    if (!r.curve) continue;
    const auto name = std::string(algorithm_name(r.algorithm));
    for (std::size_t i = 0; i < r.curve->msd_db.size(); ++i) {
      msd << name << ',' << i << ',' << format_double(r.curve->msd_db[i]) << '\n';
    }
  }
  write_file(out_dir / "msd_curves.csv", msd.str(), written);

  std::ostringstream per_node;
  per_node << "algorithm,iteration,node,msd_db\n";
  for (const auto& r : result.algorithms) {
    if (r.node_msd_db.empty()) continue;
    const auto name = std::string(algorithm_name(r.algorithm));
    const auto iterations = r.node_msd_db.front().size();
    for (std::size_t i = 0; i < iterations; ++i) {
      for (std::size_t k = 0; k < r.node_msd_db.size(); ++k) {
        per_node << name << ',' << i << ',' << k << ',' << format_double(r.node_msd_db[k][i]) << '\n';
      }
    }
  }
  write_file(out_dir / "per_node_msd.csv", per_node.str(), written);

  std::ostringstream finals;
  finals << "algorithm,node,neighbor,weight\n";
  for (const auto& r : result.algorithms) {
    if (r.final_weights.size() == 0) continue;
    weight_rows(finals, std::string(algorithm_name(r.algorithm)) + ",", r.final_weights, topology);
  }
  write_file(out_dir / "weights_final.csv", finals.str(), written);

  std::ostringstream trace;
  trace << "algorithm,iteration,node,neighbor,weight\n";
  for (const auto& r : result.algorithms) {
    const auto name = std::string(algorithm_name(r.algorithm));
    for (const auto& snap : r.trace.snapshots) {
      weight_rows(trace, name + "," + std::to_string(snap.iteration) + ",", snap.weights, topology);
    }
  }
  write_file(out_dir / "weights_trace.csv", trace.str(), written);

  write_file(out_dir / "config_echo.json", config_to_json(result.config), written);

  nlohmann::json summary;
  summary["wall_seconds"] = result.wall_seconds;
  summary["workers"] = result.workers;
  summary["algorithms"] = nlohmann::json::array();
  for (const auto& r : result.algorithms) {
    nlohmann::json a;
    a["algorithm"] = std::string(algorithm_name(r.algorithm));
    a["trials_used"] = r.trials_used;
    a["diverged_trials"] = r.diverged_trials;
    a["diagnostics"] = r.diagnostics;
    a["wall_seconds"] = r.wall_seconds;
    if (r.curve) {
      a["steady_state_msd_db"] = steady_state_msd_db(*r.curve);
      a["final_msd_db"] = r.curve->msd_db.back();
    }
    if (!r.error.empty()) a["error"] = r.error;
    summary["algorithms"].push_back(a);
  }
  write_file(out_dir / "run_summary.json", summary.dump(2) + "\n", written);

  if (options.plot) {
    for (const auto& r : result.algorithms) {
      if (!r.curve) continue;
      write_file(out_dir / ("learning_curve_" + std::string(algorithm_name(r.algorithm)) + ".svg"),
                 render_learning_curve_svg(*r.curve), written);
    }
  }
  return written;
}

}  // namespace wdlmp
