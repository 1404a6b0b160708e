#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "chainlift/error.hpp"
#include "chainlift/session.hpp"

namespace {

int cmd_run(const std::string& file, const chainlift::RunOptions& options,
            bool json) {
  chainlift::SessionScript script;
  try {
    script = chainlift::parse_session_file(file);
  } catch (const chainlift::Error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  }
  std::vector<chainlift::Report> reports;
  try {
    reports = chainlift::run_session(script, options);
  } catch (const chainlift::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  if (json) {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& r : reports) out.push_back(chainlift::report_to_json(r));
    std::cout << out.dump(2) << '\n';
  } else {
    for (const auto& r : reports)
      std::cout << chainlift::report_human_line(r) << '\n';
  }
  return chainlift::all_passed(reports) ? 0 : 1;
}

int cmd_verify_cert(const std::string& file) {
  try {
    chainlift::ObstructionCertificate cert =
        chainlift::read_certificate_file(file);
    chainlift::CertificateCheck check = chainlift::verify_certificate(cert);
    if (check.ok) {
      std::cout << "ok: certificate identity replays to zero\n";
      return 0;
    }
    std::cout << "IdentityFails: difference " << check.difference.str()
              << '\n';
    return 1;
  } catch (const chainlift::Error& e) {
    if (e.kind() == chainlift::ErrorKind::ResolutionError) {
      std::cout << "IdentityFails: " << e.what() << '\n';
      return 1;
    }
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

int cmd_gb(const std::string& file, const std::string& ideal_name,
           const std::string& order_name) {
  try {
    chainlift::SessionScript script = chainlift::parse_session_file(file);
    auto it = script.ideals.find(ideal_name);
    if (it == script.ideals.end()) {
      std::cerr << "error: no ideal named " << ideal_name << '\n';
      return 2;
    }
    chainlift::MonomialOrder order = chainlift::MonomialOrder::grevlex();
    if (order_name == "lex")
      order = chainlift::MonomialOrder::lex();
    else if (order_name == "grlex")
      order = chainlift::MonomialOrder::grlex();
    else if (order_name != "grevlex") {
      std::cerr << "error: unknown order " << order_name << '\n';
      return 2;
    }
    const chainlift::GroebnerBasis& gb = it->second.groebner(order);
    for (const auto& b : gb.basis) std::cout << b.str() << '\n';
    return 0;
  } catch (const chainlift::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime-chain lifting toolkit for polynomial ideals"};
  app.require_subcommand(1);

  std::string file, task, cert_dir, ideal_name;
  std::string order_name = "grevlex";
  bool json = false, parallel = false;
  unsigned bound = 0;
  bool bound_set = false;

  CLI::App* run = app.add_subcommand("run", "run the tasks of a session file");
  run->add_option("file", file, "session file")->required();
  run->add_option("--task", task, "run a single named task");
  run->add_flag("--json", json, "machine-readable output");
  run->add_option("--bound", bound, "override every task's exponent bound")
      ->check(CLI::NonNegativeNumber)
      ->each([&](const std::string&) { bound_set = true; });
  run->add_flag("--parallel", parallel, "run independent tasks concurrently");
  run->add_option("--cert-dir", cert_dir,
                  "write obstruction certificates into this directory");

  CLI::App* verify =
      app.add_subcommand("verify-cert", "replay an obstruction certificate");
  verify->add_option("file", file, "certificate file")->required();

  CLI::App* gb = app.add_subcommand("gb", "print a reduced Groebner basis");
  gb->add_option("file", file, "session file")->required();
  gb->add_option("--ideal", ideal_name, "ideal name")->required();
  gb->add_option("--order", order_name, "lex|grlex|grevlex");

  CLI::App* version = app.add_subcommand("version", "print the tool version");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (version->parsed()) {
    std::cout << chainlift::kToolName << ' ' << chainlift::kToolVersion
              << '\n';
    return 0;
  }
  if (verify->parsed()) return cmd_verify_cert(file);
  if (gb->parsed()) return cmd_gb(file, ideal_name, order_name);

  chainlift::RunOptions options;
  if (!task.empty()) options.task_filter = task;
  if (bound_set) options.bound_override = bound;
  options.parallel = parallel;
  if (!cert_dir.empty()) options.cert_dir = cert_dir;
  return cmd_run(file, options, json);
}
