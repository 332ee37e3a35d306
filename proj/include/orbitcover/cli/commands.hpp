#ifndef ORBITCOVER_CLI_COMMANDS_HPP
#define ORBITCOVER_CLI_COMMANDS_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbitcover/io.hpp"

namespace orbitcover::cli {

std::string_view version();

/// Output of one subcommand. `results` and `lines` carry the same content,
/// structured and human-readable respectively.
struct Report {
  std::string command;  // echo of the invocation, e.g. "classify 7 3"
  Json parameters;
  Json results;
  std::vector<std::string> lines;
};

enum class OutputFormat { kText, kJson };

/// Text reports draw their rules `width` columns wide.
std::string render(const Report& report, OutputFormat format, int width = 72);

/// Largest n accepted by classify; nerve homology is computed per orbit.
inline constexpr int kMaxClassifyN = 16;

Report cmd_classify(int n, int k);

struct NerveArgs {
  std::string scale;  // "N: e1,..."
  std::string sigma;  // "(i1,...)"
  std::optional<int> root;
  int mode_index = 0;  // supplies the root when none is given
};
Report cmd_nerve(const NerveArgs& args);

struct TransportArgs {
  std::string source;
  std::string sigma;
  int u = 1;
  int v = 0;
  std::string target;
  std::optional<int> root;           // source root; defaults to tonic of mode_index
  std::optional<int> target_origin;  // defaults to head of the target's normal order
  int mode_index = 0;
  std::optional<std::string> sequence_path;
};
Report cmd_transport(const TransportArgs& args);

Report cmd_isocheck(const std::string& spec_a, const std::string& spec_b);

}  // namespace orbitcover::cli

#endif  // ORBITCOVER_CLI_COMMANDS_HPP
