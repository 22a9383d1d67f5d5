#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rit/solver.hpp"

namespace rit::cli {

enum ExitCode : int { success = 0, usage_error = 1, verification_failed = 2 };

/// Runs one `rit` invocation. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

enum class PlayWinner { human, engine, none };

/// Terminal game between a human reading from `in` and the engine. Returns
/// `none` if input ends or the human quits before the game is over.
PlayWinner play(Partition start, Convention convention, bool engine_first, std::istream& in,
                std::ostream& out);

}  // namespace rit::cli
