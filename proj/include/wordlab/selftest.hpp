#pragma once

#include <cstdint>

#include <json.hpp>

namespace wordlab {

// Runs the built-in invariant suite. Output is fully deterministic for a
// given seed (no timing, no addresses), so repeated runs are byte-identical.
nlohmann::json run_selftest(std::uint64_t seed);

}  // namespace wordlab
