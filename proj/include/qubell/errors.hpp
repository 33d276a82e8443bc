#ifndef QUBELL_ERRORS_HPP
#define QUBELL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qubell {

/// Raised when a numerical routine fails to meet its accuracy contract
/// (quadrature non-convergence, eigensolver failure, out-of-tolerance
/// imaginary parts). Input validation uses std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qubell

#endif
