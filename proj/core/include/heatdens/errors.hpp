#pragma once

#include <stdexcept>
#include <string>

namespace heatdens {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Distribution or problem parameters rejected at construction.
class InvalidParameter : public Error {
 public:
  using Error::Error;
};

/// Argument outside the domain of a closed form (e.g. Gamma MGF at lambda >= rate).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A Fourier coefficient with zero KL eigenvalue: A_n is the constant 0.
class DegenerateCoefficient : public Error {
 public:
  using Error::Error;
};

class InvalidInterval : public Error {
 public:
  using Error::Error;
};

class OutOfDomain : public Error {
 public:
  using Error::Error;
};

/// Evaluation too close to a boundary where sin(pi y) vanishes.
class SingularPoint : public Error {
 public:
  using Error::Error;
};

class UnsupportedN : public Error {
 public:
  using Error::Error;
};

/// Density curve carries too little mass for moment extraction.
class MassDeficit : public Error {
 public:
  using Error::Error;
};

/// Too many empirical samples fall outside the analytic curve grid.
class RangeMismatch : public Error {
 public:
  using Error::Error;
};

/// Three-valued answer for sufficient (not necessary) conditions.
enum class Tri { Yes, No, Unknown };

inline const char* to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

}  // namespace heatdens
