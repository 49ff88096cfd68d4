#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "gkmod/job.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Fundamental series k-types and genericity for reductive pairs"};
  app.require_subcommand(1, 1);

  std::string config;
  std::string cutoff;
  std::size_t max_weyl = 0;
  std::string emit = "human";
  app.add_option("--config", config, "job configuration file")->required()->check(CLI::ExistingFile);
  app.add_option("--cutoff", cutoff, "bound on ||delta + 2rho||^2 (integer or p/q)");
  app.add_option("--max-weyl", max_weyl, "cap on Weyl group orders")->check(CLI::PositiveNumber);
  app.add_option("--emit", emit, "output format")->check(CLI::IsMember({"human", "machine", "both"}));
  app.fallthrough();

  for (const auto& verb : gkmod::job_commands()) app.add_subcommand(verb);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return gkmod::exit_parse;
  }

  try {
    gkmod::JobSpec job = gkmod::load_job(config);
    const std::string verb = app.get_subcommands().front()->get_name();
    if (!job.command.empty() && job.command != verb)
      throw gkmod::ParseError("config command '" + job.command + "' conflicts with verb '" + verb + "'");
    job.command = verb;
    if (!cutoff.empty()) job.cutoff = gkmod::parse_rational(cutoff);
    if (max_weyl) job.max_weyl = max_weyl;

    gkmod::JobResult result = gkmod::run_job(job);
    if (emit == "human" || emit == "both") std::cout << result.human;
    if (emit == "both") std::cout << "---\n";
    if (emit == "machine" || emit == "both") std::cout << result.machine;
    return result.exit_code;
  } catch (const gkmod::Error& e) {
    std::cerr << "gkmod: " << e.what() << "\n";
    return gkmod::exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "gkmod: internal error: " << e.what() << "\n";
    return gkmod::exit_internal;
  }
}
