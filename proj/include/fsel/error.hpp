#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fsel {

/// Base error for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid or unreadable input data (CSV parsing, dataset invariants).
struct DataError : Error {
    using Error::Error;
};

/// Invalid experiment configuration; message names the offending field.
struct ConfigError : Error {
    using Error::Error;
};

/// Failure inside cross-validation or classifier training.
struct EvalError : Error {
    using Error::Error;
};

/// Step 1 removed every feature: the influence threshold left nothing to rank.
struct AllFeaturesRemovedError : Error {
    using Error::Error;
};

/// Step 2 kept no feature (no lifting coefficient was positive). Carries the
/// best cumulative prefix seen, so a caller can suggest it as a fallback.
struct EmptySelectionError : Error {
    EmptySelectionError(const std::string& msg, std::vector<int> prefix)
        : Error(msg), best_prefix(std::move(prefix)) {}
    std::vector<int> best_prefix;
};

}  // namespace fsel
