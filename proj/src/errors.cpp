#include "streamnd/errors.hpp"

namespace streamnd {

ParseError::ParseError(const std::string &source, std::size_t line, const std::string &message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message), line_(line) {}

} // namespace streamnd
