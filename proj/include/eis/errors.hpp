#pragma once

#include <complex>
#include <sstream>
#include <stdexcept>
#include <string>

namespace eis {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation point lies within the exclusion radius of a pole.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// A rational expression has a vanishing denominator.
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain where the operation is defined.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A numerical procedure failed to reach its tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

namespace detail {

inline std::string format_complex(std::complex<double> z) {
  std::ostringstream os;
  os.precision(10);
  os << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

inline void require_finite(std::complex<double> z, const char* what) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError(std::string(what) + ": non-finite value");
  }
}

}  // namespace detail
}  // namespace eis
