#pragma once

#include "vstab/stability.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace vstab {

/// Settings read from a key=value file. Unknown keys are errors; '#' starts a comment.
///
///   budget = 100000000      # search nodes per exact computation
///   threads = 4
///   batch = 256             # candidates per parallel batch
///   execution = parallel    # or serial
///   seed = 1                # random corpora in verify suites
struct Config {
    std::optional<std::uint64_t> budget;
    std::optional<int> threads;
    std::optional<int> batch;
    std::optional<Execution> execution;
    std::optional<std::uint64_t> seed;
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Config parse_config(std::string_view text);

/// Fields set in `over` win.
Config merge(const Config& base, const Config& over);

StabilityOptions stability_options(const Config& c);

} // namespace vstab
