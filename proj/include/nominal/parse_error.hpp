#pragma once

#include <stdexcept>
#include <string>

namespace nominal {

class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t offset)
        : std::runtime_error(std::move(message)), offset(offset) {}
    std::size_t offset;
};

}  // namespace nominal
