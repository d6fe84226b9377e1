#ifndef NIKISHIN_ERROR_HPP
#define NIKISHIN_ERROR_HPP

#include <stdexcept>
#include <string>

namespace nikishin {

struct error : std::runtime_error {
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

// Measure / chain constraints (supports overlap, sign violation, ...).
struct validation_error : error {
    using error::error;
};

// Evaluation at a mass point of the measure.
struct pole_error : error {
    explicit pole_error(const std::string& msg = "pole evaluation") : error(msg) {}
};

// Malformed configuration or input file; maps to CLI exit code 2.
struct config_error : error {
    using error::error;
};

} // namespace nikishin

#endif
