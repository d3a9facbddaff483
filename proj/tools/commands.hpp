#pragma once

#include <iosfwd>
#include <string>

#include "contmach/machines.hpp"

namespace contmach::cli {

enum class Format { json, text };

struct Invocation {
    std::string subcommand;
    std::string value;
    std::string eps;
    Effort max_effort = Effort{1} << 20;
    Schedule schedule = Schedule::powers_of_two;
    Format format = Format::json;
    std::string pipeline;
    std::string machine = "invert";
    std::string corpus;
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;
inline constexpr int undecided = 2;
inline constexpr int realizer_failure = 3;
} // namespace exit_code

/// Thrown for malformed flags or values; mapped to exit_code::usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Executes one subcommand and writes its document to `out`.
int run(const Invocation& invocation, std::ostream& out);

} // namespace contmach::cli
