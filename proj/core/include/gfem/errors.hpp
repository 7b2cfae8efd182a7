#ifndef GFEM_ERRORS_HPP
#define GFEM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace gfem {

/// Invalid problem data (incompatible obstacles, malformed example setup).
class data_error : public std::runtime_error {
 public:
  explicit data_error(const std::string& what) : std::runtime_error(what) {}
};

/// The discretization cannot represent the request (e.g. interpolating
/// nonzero data on the L-shaped element without second derivatives).
class capability_error : public std::runtime_error {
 public:
  explicit capability_error(const std::string& what) : std::runtime_error(what) {}
};

/// An iterative solver exhausted its budget without reaching its tolerance.
class nonconvergence_error : public std::runtime_error {
 public:
  explicit nonconvergence_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gfem

#endif
