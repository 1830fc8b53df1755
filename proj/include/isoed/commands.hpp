#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "isoed/error.hpp"
#include "isoed/integer.hpp"
#include "isoed/oracle.hpp"

namespace isoed::cli {

/// Process exit codes; every command returns exactly one of these.
enum ExitCode : int {
  kSuccess = 0,
  kInvalidInput = 2,
  kCertificationRefused = 3,
  kSoundnessFailure = 4,
};

int exit_code_for(ErrorCode code);

struct BoundsOptions {
  bool json = false;
  bool require_lower = false;
};

struct GroupBoundArgs {
  std::string kind;  // rc | abelian | orbit | symalt | local | cy | todd
  std::optional<unsigned long> n;
  std::optional<unsigned long> p;
  std::optional<Integer> chi;
  bool json = false;
};

int cmd_kernel(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err);
int cmd_subvarieties(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err);
int cmd_bounds(const std::filesystem::path& file, const BoundsOptions& options, std::ostream& out, std::ostream& err);
/// Prints the exact value, or the bounds with exit code 3 when it cannot be certified.
int cmd_exact(const std::filesystem::path& file, bool json, std::ostream& out, std::ostream& err);
int cmd_groupbound(const GroupBoundArgs& args, std::ostream& out, std::ostream& err);
int cmd_verify_paper(std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleOptions& options, std::ostream& out, std::ostream& err);

}  // namespace isoed::cli
