#pragma once

#include <filesystem>
#include <ostream>
#include <string>

namespace tangle::cli {

// Runs the invariant suites and prints one JSON object per check followed
// by a verdict line. Returns true iff every check passed.
bool RunVerify(const std::string& level, const std::filesystem::path& cache_dir,
               std::ostream& os);

}  // namespace tangle::cli
