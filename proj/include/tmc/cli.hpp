#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>

#include "tmc/board.hpp"

namespace tmc {

struct Scramble {
  BoardState state;
  MoveSequence moves;
};

// Seeded random walk from the solved board. Step k draws x from
// std::mt19937_64(seed) (the generator and its constants are fixed by the
// C++ standard) and takes generators(dims)[x % |generators|].
Scramble scramble(const BoardDims& dims, std::uint64_t seed, int count);

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kDomainError = 1;
inline constexpr int kBudgetRefused = 2;
inline constexpr int kUsage = 64;
}  // namespace exit_code

// Runs one CLI invocation; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tmc
