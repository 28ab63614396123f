#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "circulant/spectral.hpp"

namespace circulant::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Runs one subcommand (spectrum, classify, census, fidelity, search, scan).
/// `args` excludes the program name. Data goes to `out` (or --out), every
/// diagnostic to `err`. Returns 0, 1 on computation errors, 2 on usage errors.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

/// Parses CIRCULANT_TOL: a bare number sets both tolerances, otherwise
/// comma-separated integrality=X / equality=Y. Throws Error{ParseError}.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

}  // namespace circulant::cli
