#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchings/element.hpp"

namespace matchings::cli {

enum class Command { Binom, VerifyBinom, Props, IncExcDemo };
enum class Format { Paper, Json };

struct CliConfig {
  Command command = Command::Binom;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  std::size_t cases = 200;
  Format format = Format::Paper;
  std::size_t budget = 10'000'000;
  bool one_point = false;     // incexc-demo on a one-point poset
  bool inject_fault = false;  // props: corrupt one g entry per instance
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kMaxN = 10;

/// Parses and runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int cmd_binom(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify_binom(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_props(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmd_incexc_demo(const CliConfig& config, std::ostream& out, std::ostream& err);

/// Reads the paper-format output of `binom` back into (x, f(x)) rows.
std::vector<std::pair<Element, Element>> parse_paper_table(std::string_view text);

}  // namespace matchings::cli
