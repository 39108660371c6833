#include "vstab/config.hpp"

#include <charconv>
#include <sstream>

namespace vstab {

namespace {

std::string_view trim(std::string_view s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(std::string_view value, int line, std::string_view key)
{
    T out{};
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("line " + std::to_string(line) + ": bad value for " + std::string(key));
    return out;
}

} // namespace

Config parse_config(std::string_view text)
{
    Config c;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string_view s = raw;
        if (const auto hash = s.find('#'); hash != std::string_view::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected key = value");
        const auto key = trim(s.substr(0, eq));
        const auto value = trim(s.substr(eq + 1));
        if (key == "budget") {
            c.budget = parse_number<std::uint64_t>(value, line, key);
        } else if (key == "threads") {
            c.threads = parse_number<int>(value, line, key);
            if (*c.threads < 1)
                throw ConfigError("line " + std::to_string(line) + ": threads must be positive");
        } else if (key == "batch") {
            c.batch = parse_number<int>(value, line, key);
            if (*c.batch < 1)
                throw ConfigError("line " + std::to_string(line) + ": batch must be positive");
        } else if (key == "execution") {
            if (value == "serial")
                c.execution = Execution::serial;
            else if (value == "parallel")
                c.execution = Execution::parallel;
            else
                throw ConfigError("line " + std::to_string(line) + ": execution is serial or parallel");
        } else if (key == "seed") {
            c.seed = parse_number<std::uint64_t>(value, line, key);
        } else {
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + std::string(key) + "'");
        }
    }
    return c;
}

Config merge(const Config& base, const Config& over)
{
    Config c = base;
    if (over.budget)
        c.budget = over.budget;
    if (over.threads)
        c.threads = over.threads;
    if (over.batch)
        c.batch = over.batch;
    if (over.execution)
        c.execution = over.execution;
    if (over.seed)
        c.seed = over.seed;
    return c;
}

StabilityOptions stability_options(const Config& c)
{
    StabilityOptions o;
    if (c.budget)
        o.node_budget = *c.budget;
    if (c.batch)
        o.batch = *c.batch;
    if (c.execution)
        o.execution = *c.execution;
    return o;
}

} // namespace vstab
