#include "lmpc/harness/report.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "lmpc/baselines/value_iteration.h"
#include "lmpc/harness/campaign.h"
#include "lmpc/harness/config.h"
#include "lmpc/io/number_format.h"
#include "lmpc/valuefn/learning_store.h"

namespace lmpc::harness {

namespace fs = std::filesystem;

namespace {

// Delimited table with a header row, addressed by column name.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const {
    for (size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    throw ConfigError("table has no column " + name);
  }
  double number(size_t row, const std::string& name) const {
    return io::parse_number(rows[row][column(name)]);
  }
};

Table read_table(const fs::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("cannot read " + path.string());
  Table t;
  std::string line;
  std::getline(f, line);
  t.header = io::split(line, ',');
  while (std::getline(f, line))
    if (!line.empty()) t.rows.push_back(io::split(line, ','));
  return t;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + path.string());
  f << text;
}

}  // namespace

std::vector<std::string> report_inputs() {
  return {"config.json", "expected/summary.csv", "ce/summary.csv", "vi/values.csv"};
}

std::vector<std::string> missing_report_inputs(const std::string& dir) {
  std::vector<std::string> missing;
  for (const auto& f : report_inputs())
    if (!fs::exists(fs::path(dir) / f)) missing.push_back(f);
  return missing;
}

std::vector<std::string> write_report(const std::string& dir) {
  const auto missing = missing_report_inputs(dir);
  if (!missing.empty()) {
    std::string msg = "report: missing inputs in " + dir + ":";
    for (const auto& m : missing) msg += " " + m;
    throw ConfigError(msg);
  }
  const fs::path root(dir);
  const ExperimentConfig config = load_config((root / "config.json").string());
  const geometry::Polytope W = config.W.completed();
  const Table expected = read_table(root / "expected/summary.csv");
  const Table ce = read_table(root / "ce/summary.csv");
  const baselines::GridValueFunction vi = baselines::import_table_file((root / "vi/values.csv").string());
  const double vi_start = baselines::interpolate(vi, W, config.start);

  fs::create_directories(root / "report");
  std::vector<std::string> written;
  using io::format_number;

  // Mean realized cost per episode and mode.
  std::map<int, std::pair<std::string, std::string>> by_episode_e, by_episode_c;
  for (size_t i = 0; i < expected.rows.size(); ++i)
    by_episode_e[std::stoi(expected.rows[i][0])] = {expected.rows[i][expected.column("mc_mean")],
                                                    expected.rows[i][expected.column("mc_std_error")]};
  for (size_t i = 0; i < ce.rows.size(); ++i)
    by_episode_c[std::stoi(ce.rows[i][0])] = {ce.rows[i][ce.column("mc_mean")],
                                              ce.rows[i][ce.column("mc_std_error")]};
  std::ostringstream cost;
  cost << "episode,expected_mean,expected_std_error,ce_mean,ce_std_error\n";
  for (const auto& [j, e] : by_episode_e) {
    cost << j << ',' << e.first << ',' << e.second << ',';
    const auto it = by_episode_c.find(j);
    if (it != by_episode_c.end()) cost << it->second.first << ',' << it->second.second;
    else cost << ',';
    cost << '\n';
  }
  write_text(root / "report/realized_cost.csv", cost.str());
  written.push_back((root / "report/realized_cost.csv").string());

  // Learned value at the start against the value-iteration baseline.
  std::ostringstream trend;
  trend << "episode,learned_value,vi_value,abs_gap,rel_gap\n";
  auto trend_row = [&](int j, double q) {
    trend << j << ',' << format_number(q) << ',' << format_number(vi_start) << ','
          << format_number(std::abs(q - vi_start)) << ','
          << format_number(std::abs(q - vi_start) / std::abs(vi_start)) << '\n';
  };
  if (!expected.rows.empty() && std::stoi(expected.rows[0][0]) == 1)
    trend_row(0, expected.number(0, "value_before"));
  for (size_t i = 0; i < expected.rows.size(); ++i)
    trend_row(std::stoi(expected.rows[i][0]), expected.number(i, "value_after"));
  write_text(root / "report/value_trend.csv", trend.str());
  written.push_back((root / "report/value_trend.csv").string());

  // Learned value on the value-iteration grid; points outside the safe set
  // are marked infeasible.
  const int last = expected.rows.empty() ? 0 : std::stoi(expected.rows.back()[0]);
  const std::string store_file = store_path((root / "expected").string(), last);
  const valuefn::LearningStore store = valuefn::load_columns_file(store_file, W);
  baselines::GridValueFunction learned = vi;
  for (int i = 0; i < vi.size(); ++i) learned.values(i) = valuefn::value(store, vi.points.col(i));
  baselines::export_table_file(learned, (root / "report/value_grid_learned.csv").string());
  written.push_back((root / "report/value_grid_learned.csv").string());
  baselines::export_table_file(vi, (root / "report/value_grid_vi.csv").string());
  written.push_back((root / "report/value_grid_vi.csv").string());
  return written;
}

}  // namespace lmpc::harness
