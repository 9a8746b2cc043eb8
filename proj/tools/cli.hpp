#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace naples::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kDomain = 2;
inline constexpr int kVerifyFailed = 3;

/// Object representations accepted by `convert`, all routed through the
/// k-Dyck path of the preference.
const std::vector<std::string>& representations();

struct CommandPlan {
  std::string command;  // park | check | convert | count | render | verify

  std::string pref;
  int k = 0;

  // convert
  std::string from;
  std::string to;
  std::string value;  // "-" reads one line from stdin

  // count
  std::string table = "I";
  int n = 12;
  bool sequence = false;

  // render
  std::string path;
  std::string tree;
  bool svg = false;
  bool dot = false;

  // verify
  std::string theorem = "all";
  std::optional<int> n_max;
  std::optional<int> k_max;
  bool machine = false;
  bool list = false;

  bool json = false;
  std::string output_file;  // empty: stdout
};

/// Either a plan, or the exit code and text to print (help, usage errors).
struct ParseResult {
  std::optional<CommandPlan> plan;
  int exit_code = kOk;
  std::string out;
  std::string err;
};

/// Parses arguments after the program name.
ParseResult parse(const std::vector<std::string>& args);

/// Runs a plan; reports errors on `err` and returns the exit code.
int execute(const CommandPlan& plan, std::istream& in, std::ostream& out, std::ostream& err);

/// parse + execute.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace naples::cli
