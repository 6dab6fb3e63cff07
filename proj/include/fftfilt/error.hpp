#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fftfilt {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed argument: empty signal, bad length, out-of-range index, ...
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// No frequency-grid point falls inside the requested passband.
class EmptyBand : public Error {
public:
    using Error::Error;
};

/// A requested point frequency does not coincide with any bin frequency.
class OffGridFrequency : public Error {
public:
    using Error::Error;
};

/// A text file could not be parsed. line() is 1-based, 0 when not tied to a line.
class FormatError : public Error {
public:
    FormatError(const std::string& what, std::size_t line)
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace fftfilt
