#ifndef VNLAB_ERRORS_HPP
#define VNLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace vnlab {

// Bad user input: malformed files, invalid parameters. CLI exit code 2.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: disconnected graph fed to a spectral routine,
// eigensolver non-convergence, diverging fit, infeasible construction.
// CLI exit code 1.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vnlab

#endif
