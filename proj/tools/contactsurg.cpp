// contactsurg: rational contact surgery diagrams to contact (+-1)-surgery
// presentations, with certificates.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "contactsurg/commands.hpp"

namespace cli = contactsurg::cli;

int main(int argc, char** argv) {
  CLI::App app{"Convert rational contact surgery diagrams into contact (+-1)-surgery presentations"};
  app.require_subcommand(1);

  bool json = false;
  std::string path;
  std::string coefficient;
  std::string front;
  cli::ConvertOptions convert_options;
  std::string policy;
  std::string out_dir;

  auto* invariants = app.add_subcommand("invariants", "Classical invariants of every component");
  invariants->add_option("path", path, "Diagram file ('-' for stdin)");
  invariants->add_option("--front", front, "Front word as a JSON array, e.g. '[\"L\",1,\"R\",1]'");
  invariants->add_flag("--json", json, "Machine-readable output");

  auto add_convert_flags = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "Diagram file ('-' for stdin)")->required();
    cmd->add_option("--policy", policy, "all-negative | all-positive | tuple=a,b,...");
    cmd->add_flag("--json", json, "Print result files instead of a table");
    cmd->add_option("--out", out_dir, "Write result files into this directory");
  };
  auto* convert = app.add_subcommand("convert", "Convert to a contact (+-1)-surgery presentation");
  add_convert_flags(convert);
  convert->add_flag("--enumerate", convert_options.enumerate, "Emit every stabilization choice");
  auto* enumerate = app.add_subcommand("enumerate", "Same as convert --enumerate");
  add_convert_flags(enumerate);

  auto add_coefficient = [&](CLI::App* cmd) {
    cmd->add_option("r", coefficient, "Coefficient p/q")->required();
    cmd->add_flag("--json", json, "Machine-readable output");
  };
  auto* cf = app.add_subcommand("cf", "Negative continued fraction of r < 0");
  add_coefficient(cf);
  auto* slope = app.add_subcommand("slope", "Boundary slope of the (-1)-chain for r < 0");
  add_coefficient(slope);
  auto* count = app.add_subcommand("count", "Number of tight fillings (choices) for contact r-surgery");
  add_coefficient(count);

  auto* homology = app.add_subcommand("homology", "First homology of the surgered manifold");
  homology->add_option("path", path, "Diagram file ('-' for stdin)")->required();
  homology->add_flag("--json", json, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Re-derive every certificate clause");
  verify->add_option("path", path, "Result file or diagram file ('-' for stdin)")->required();
  verify->add_flag("--json", json, "Machine-readable output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsage;
  }

  if (invariants->parsed()) {
    if (!front.empty()) return cli::cmd_front_invariants(front, json, std::cout, std::cerr);
    if (path.empty()) {
      std::cerr << "error: invariants needs a path or --front\n";
      return cli::kUsage;
    }
    return cli::cmd_invariants(path, json, std::cout, std::cerr);
  }
  if (convert->parsed() || enumerate->parsed()) {
    convert_options.json = json;
    convert_options.enumerate = convert_options.enumerate || enumerate->parsed();
    if (!policy.empty()) convert_options.policy = policy;
    if (!out_dir.empty()) convert_options.out_dir = out_dir;
    return cli::cmd_convert(path, convert_options, std::cout, std::cerr);
  }
  if (cf->parsed()) return cli::cmd_cf(coefficient, json, std::cout, std::cerr);
  if (slope->parsed()) return cli::cmd_slope(coefficient, json, std::cout, std::cerr);
  if (count->parsed()) return cli::cmd_count(coefficient, json, std::cout, std::cerr);
  if (homology->parsed()) return cli::cmd_homology(path, json, std::cout, std::cerr);
  if (verify->parsed()) return cli::cmd_verify(path, json, std::cout, std::cerr);
  return cli::kUsage;
}
