// orbitcover: enumerate, classify and transport orbit covers of scales.
//
// Exit status: 0 success, 1 internal error, 2 usage error, 3 parse error,
// 4 domain error (invalid values, non-units, size mismatches, elements
// outside a scale).

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orbitcover/cli/commands.hpp"
#include "orbitcover/errors.hpp"

namespace {

enum ExitCode : int { kOk = 0, kInternal = 1, kUsage = 2, kParse = 3, kDomain = 4 };

int output_width() {
  if (const char* env = std::getenv("ORBITCOVER_WIDTH")) {
    try {
      const int width = std::stoi(env);
      if (width > 0) return width;
    } catch (const std::exception&) {
    }
  }
  return 72;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace orbitcover;
  namespace cli = orbitcover::cli;

  CLI::App app{"Orbit covers of scales: classification, nerves, transport"};
  app.set_version_flag("--version", std::string("orbitcover ") + std::string(cli::version()));
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit the structured record instead of text");

  int n = 0;
  int k = 0;
  auto* classify = app.add_subcommand("classify", "Rotation classes and affine orbits of Sigma(n,k)");
  classify->add_option("n", n, "Scale size")->required();
  classify->add_option("k", k, "Chord size")->required();

  cli::NerveArgs nerve_args;
  auto* nerve = app.add_subcommand("nerve", "Nerve and homology of an orbit cover");
  nerve->add_option("scale", nerve_args.scale, "Scale as \"N: e1,e2,...\"")->required();
  nerve->add_option("sigma", nerve_args.sigma, "Interval composition \"(i1,...,ik)\"")->required();
  nerve->add_option("root,--root", nerve_args.root, "Root element (default: tonic of --mode-index)");
  nerve->add_option("--mode-index", nerve_args.mode_index, "Mode whose tonic is the default root");

  cli::TransportArgs transport_args;
  auto* transport = app.add_subcommand("transport", "Carry a cover along j -> u*j + v");
  transport->add_option("source", transport_args.source, "Source scale \"N: e1,...\"")->required();
  transport->add_option("sigma", transport_args.sigma, "Composition on the source")->required();
  transport->add_option("u", transport_args.u, "Unit multiplier")->required();
  transport->add_option("v", transport_args.v, "Degree offset")->required();
  transport->add_option("target", transport_args.target, "Target scale \"N: e1,...\"")->required();
  transport->add_option("sequence", transport_args.sequence_path,
                        "Event list: one pitch class per line, '#' comments");
  transport->add_option("--root", transport_args.root, "Source root (default: tonic of --mode-index)");
  transport->add_option("--target-root", transport_args.target_origin,
                        "Target degree origin (default: head of target normal order)");
  transport->add_option("--mode-index", transport_args.mode_index,
                        "Source mode whose tonic is the default root");

  std::string spec_a;
  std::string spec_b;
  auto* isocheck = app.add_subcommand("isocheck", "Compare two covers' nerves");
  isocheck->add_option("a", spec_a, "Cover \"[SCALE ;] SIGMA [; ROOT]\"")->required();
  isocheck->add_option("b", spec_b, "Cover \"[SCALE ;] SIGMA [; ROOT]\"")->required();
  for (auto* sub : {classify, nerve, transport, isocheck}) {
    sub->add_flag("--json", as_json, "Emit the structured record instead of text");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    cli::Report report;
    if (*classify) {
      report = cli::cmd_classify(n, k);
    } else if (*nerve) {
      report = cli::cmd_nerve(nerve_args);
    } else if (*transport) {
      report = cli::cmd_transport(transport_args);
    } else {
      report = cli::cmd_isocheck(spec_a, spec_b);
    }
    std::cout << cli::render(report, as_json ? cli::OutputFormat::kJson : cli::OutputFormat::kText,
                             output_width());
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const RangeError& e) {
    std::cerr << "range error: " << e.what() << '\n';
    return kDomain;
  } catch (const MembershipError& e) {
    std::cerr << "membership error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
