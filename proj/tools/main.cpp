#include <filesystem>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"loopmod: truncated Heisenberg and affine module constructions with exact checks"};
  std::string config_path;
  std::string out_dir;
  std::string format = "json";
  std::optional<std::uint64_t> seed;
  bool quiet = false;
  app.add_option("--config", config_path, "job config (JSON)")->required()->check(CLI::ExistingFile);
  app.add_option("--out", out_dir, "directory for report.json and tables; stdout when omitted");
  app.add_option("--format", format, "json or csv (csv adds the weight-dimension table)")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "overrides the config seed");
  app.add_flag("--quiet", quiet, "no summary on stderr");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : loopmod::cli::kUsage;
  }

  loopmod::json config;
  try {
    std::ifstream in(config_path);
    config = loopmod::json::parse(in);
  } catch (const std::exception& e) {
    std::cerr << "cannot read config: " << e.what() << '\n';
    return loopmod::cli::kUsage;
  }

  const auto res = loopmod::cli::run_job(config, seed);
  const std::string report = res.report.dump(2) + "\n";
  if (out_dir.empty()) {
    std::cout << report;
    if (format == "csv" && res.csv) std::cout << *res.csv;
  } else {
    std::filesystem::create_directories(out_dir);
    std::ofstream(std::filesystem::path(out_dir) / "report.json") << report;
    if (format == "csv" && res.csv) std::ofstream(std::filesystem::path(out_dir) / "weight_dimensions.csv") << *res.csv;
  }
  if (!quiet) {
    std::cerr << "status: " << res.report.value("status", std::string("?"));
    if (res.report.contains("error")) std::cerr << " (" << res.report["error"].get<std::string>() << ")";
    std::cerr << ", exit " << res.exit_code << '\n';
  }
  return res.exit_code;
}
