#ifndef MULTIBAKER_ERRORS_HPP
#define MULTIBAKER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multibaker {

/// Invalid map parameters or experiment configuration.
class config_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A runtime invariant failed (norm drift, probability normalization, ...).
/// These are checked in production runs, not only in tests.
class invariant_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File I/O failure; the message carries the offending path.
class io_error : public std::runtime_error {
public:
  io_error(const std::string& path, const std::string& what)
      : std::runtime_error(what + ": " + path) {}
};

}  // namespace multibaker

#endif
