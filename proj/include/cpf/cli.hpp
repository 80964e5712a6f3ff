#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cpf::cli {

// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;    // DomainError, ParseError, GuardExceeded
inline constexpr int kExitUsage = 2;     // unknown subcommand, bad flags
inline constexpr int kExitInternal = 3;  // InvariantViolation (a bug)

// Runs one command. args excludes the program name. Results go to out;
// diagnostics go to err as a JSON object {"error": kind, "message": text}.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cpf::cli
