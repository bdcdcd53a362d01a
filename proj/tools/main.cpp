#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_commands.hpp"
#include "cli_config.hpp"
#include "monosys/errors.hpp"

namespace {

using namespace monosys;
using namespace monosys::cli;

struct CommonArgs {
  std::string config_path;
  RunOptions options;
};

void attach_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "path to the JSON run configuration")
      ->required();
  cmd->add_option("--seed", args.options.seed, "seed for every sampling routine");
  cmd->add_option("--out", args.options.out, "write the primary output stream to this file");
  cmd->add_option("--format", args.options.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));
}

int dispatch(const CommonArgs& args,
             int (*command)(const RunConfig&, const RunOptions&, std::ostream&,
                            std::ostream&)) {
  try {
    const RunConfig config = load_config_file(args.config_path);
    return command(config, args.options, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const InadmissibleLambdaError& e) {
    std::cerr << e.what() << "\n";
    return kExitInadmissible;
  } catch (const ConvergenceError& e) {
    std::cerr << e.what() << "\n";
    return kExitSolveFailure;
  } catch (const DivergenceError& e) {
    std::cerr << e.what() << "\n";
    return kExitSolveFailure;
  } catch (const StudyMemberError& e) {
    std::cerr << e.what() << "\n";
    return kExitSolveFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"solver and experiment driver for parametrized nonlinear systems"};
  app.require_subcommand(1);

  CommonArgs spectrum_args, solve_args, bvp_args, study_args, check_args;

  attach_common(app.add_subcommand("spectrum", "eigenvalues of the configured matrix"),
                spectrum_args);
  attach_common(app.add_subcommand("solve", "solve A x = lambda h(x,u) at one parameter"),
                solve_args);
  attach_common(app.add_subcommand("bvp", "solve the discrete Dirichlet problem"), bvp_args);
  attach_common(app.add_subcommand("study", "parameter-dependence study over a sequence"),
                study_args);
  attach_common(app.add_subcommand("check", "sampling falsifiers for A1-A4"), check_args);

  CLI11_PARSE(app, argc, argv);

  if (app.got_subcommand("spectrum")) return dispatch(spectrum_args, cmd_spectrum);
  if (app.got_subcommand("solve")) return dispatch(solve_args, cmd_solve);
  if (app.got_subcommand("bvp")) return dispatch(bvp_args, cmd_bvp);
  if (app.got_subcommand("study")) return dispatch(study_args, cmd_study);
  if (app.got_subcommand("check")) return dispatch(check_args, cmd_check);
  return kExitConfig;
}
