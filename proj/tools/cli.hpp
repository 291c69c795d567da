#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shadowcalc/verify.hpp"

namespace shadowcalc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInternal = 1,
  kExitInput = 2,
  kExitTolerance = 3,
};

/// Built-in bodies in R^dim:
///   cube           [0,1]^dim
///   simplex        conv{0, e_1, ..., e_dim}
///   cross          conv{+-e_i}
///   ball:<L>       vertices of ball_approx(dim, L)
///   random:<m>,<s> m points uniform in [-1,1]^dim from seed s
BodySpec builtin_body(std::string_view spec, int dim);

/// Seed precedence: explicit flag, then config, then SHADOWCALC_SEED.
std::optional<std::uint64_t> resolve_seed(std::optional<std::uint64_t> flag,
                                          std::optional<std::uint64_t> config);

/// Runs one command line (without the program name). Results and
/// {"error": code, "detail": ...} objects go to `out`; usage text for
/// malformed command lines goes to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace shadowcalc::cli
