// errors.hpp: Exception types shared by the qbatt library and CLI

#pragma once

#include <stdexcept>
#include <string>

namespace qbatt {

// Base for every library-raised error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// An input object violates one of its invariants (e.g. a non-Hermitian density matrix).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Caller passed arguments that do not fit the operation (dimension mismatch, range).
class ArgumentError : public Error {
public:
    using Error::Error;
};

// Physically or numerically inadmissible configuration (e.g. Omega = 0 with d != 0).
class ConfigError : public Error {
public:
    using Error::Error;
};

// Config document could not be parsed; carries the offending key and 1-based line.
class ParseError : public Error {
public:
    ParseError(std::string key, int line, const std::string& what)
        : Error(format(key, line, what)), key_(std::move(key)), line_(line) {}

    const std::string& key() const noexcept { return key_; }
    int line() const noexcept { return line_; }

private:
    static std::string format(const std::string& key, int line, const std::string& what) {
        std::string msg = "config";
        if (line > 0) msg += ":" + std::to_string(line);
        if (!key.empty()) msg += ": key '" + key + "'";
        return msg + ": " + what;
    }

    std::string key_;
    int line_;
};

// Integrator could not meet its tolerance within the step budget.
class SolverError : public Error {
public:
    SolverError(const std::string& what, double last_good_time)
        : Error(what + " (last good t = " + std::to_string(last_good_time) + ")"),
          last_good_time_(last_good_time) {}

    double last_good_time() const noexcept { return last_good_time_; }

private:
    double last_good_time_;
};

}  // namespace qbatt
