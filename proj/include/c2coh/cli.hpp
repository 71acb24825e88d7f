#ifndef C2COH_CLI_HPP
#define C2COH_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "c2coh/algebra.hpp"
#include "c2coh/surface.hpp"

namespace c2coh {

enum ExitCode : int { kExitOk = 0, kExitVerificationFailed = 1, kExitUsage = 2 };

/// A word or a profile. Inputs starting with '{' are profile JSON.
struct ParsedInput {
    InvariantProfile profile;
    std::optional<SurgeryWord> word;
};

/// Throws ParseError, ValidationError or std::invalid_argument.
ParsedInput parse_input(const std::string& text);

/// Applies one "--inject" edit: drop:P,Q | add:P,Q (Sigma^{P,Q} M2) or
/// drop-a:P,N | add-a:P,N (Sigma^{P,0} A_N). Throws std::invalid_argument.
Decomposition apply_injection(const Decomposition& d, const std::string& spec);

/// Window from ESC_WINDOW if set, else the built-in default.
Window default_window();

/**
 * Entry point shared by the c2coh binary and the tests. `args` excludes the
 * program name. Data goes to `out`, diagnostics to `err`.
 *
 *   c2coh compute <input> [--reduced] [--grid] [--window W] [--format json|text]
 *   c2coh verify  <input> [--window W] [--inject SPEC]... [--format json|text]
 *   c2coh catalog <beta_max> [--format json|text]
 */
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace c2coh

#endif  // C2COH_CLI_HPP
