#ifndef GFEM_WINDOW_HPP
#define GFEM_WINDOW_HPP

namespace gfem {

/// Overlap fractions delta_i = gamma_i / (h_i/2) of the flat-top windows.
struct FlatTopParams {
  double delta1 = 1.0 / 3.0;
  double delta2 = 1.0 / 3.0;
  void validate() const;  // throws std::invalid_argument unless both in (0,1)
};

/// The C^1 flat-top window psi_delta: identically 1 on [-1+delta, 1-delta],
/// identically 0 outside [-1-delta, 1+delta], cubic ramps in between built
/// from phiL(t) = (1+t)^2(1-2t) and phiR(t) = (1-t)^2(1+2t).
/// order selects the function value (0) or its first/second derivative.
double window_1d(double x, double delta, int order);

}  // namespace gfem

#endif
