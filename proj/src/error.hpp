#pragma once

#include <stdexcept>
#include <string>

namespace qroute {

enum class ErrorCode {
    invalid_argument = 1,
    parse = 2,
    io = 3,
    disconnected = 4,
    not_allowed = 5,
    unsupported = 6,
    no_solution = 7,
    internal = 8,
};

struct Error : std::runtime_error {
    ErrorCode code;

    Error(ErrorCode c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

} // namespace qroute
