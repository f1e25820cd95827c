#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "ifns/runner.hpp"

namespace {

unsigned threads_from_env() {
  const char* raw = std::getenv("IFNS_THREADS");
  if (!raw || !*raw) return 1;
  try {
    const long n = std::stol(raw);
    if (n >= 1) return static_cast<unsigned>(n);
  } catch (const std::exception&) {
  }
  std::cerr << "ifns: ignoring IFNS_THREADS=" << raw << "\n";
  return 1;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intuitionistic fuzzy normed space toolkit"};
  app.set_version_flag("--version", std::string(ifns::kVersion));

  std::string task;
  std::string config_path;
  std::string out_path;
  std::optional<std::uint64_t> seed;
  unsigned threads = threads_from_env();

  app.add_option("task", task, "axioms | classify | orbit | scan | diameter | regularity | bounds | set-afpp")
      ->required();
  app.add_option("--config", config_path, "JSON config file")->required();
  app.add_option("--out", out_path, "write the report here instead of standard output");
  app.add_option("--seed", seed, "seed for sampled tasks (overrides the config)");
  app.add_option("--threads", threads, "worker threads (default: IFNS_THREADS or 1)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto cfg = ifns::load_config(config_path, ifns::task_from_name(task), seed);
    const auto result = ifns::run(cfg, ifns::Parallelism{threads});

    const std::string text = result.csv ? *result.csv : result.report.dump(2) + "\n";
    std::string target = out_path;
    if (target.empty() && cfg.output.path) target = cfg.output.path->string();
    if (target.empty()) {
      std::cout << text;
    } else if (!write_file(target, text)) {
      std::cerr << "ifns: cannot write " << target << "\n";
      return 2;
    }
    std::cerr << result.summary << "\n";
    return result.exit_code;
  } catch (const ifns::InputError& e) {
    std::cerr << "ifns: " << e.what() << "\n";
    return 2;
  } catch (const ifns::DomainError& e) {
    std::cerr << "ifns: " << e.what() << "\n";
    return 2;
  }
}
