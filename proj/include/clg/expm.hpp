#pragma once

#include "clg/matrix.hpp"

namespace clg {

// exp(A) together with the internal choices the kernel made, for diagnostics.
struct ExpmResult {
  Matrix value;
  int scaling_exponent = 0;
  int pade_order = 0;
};

// Matrix exponential by scaling-and-squaring with diagonal Pade approximants
// of orders {3,5,7,9,13} selected from the 1-norm. Rejects non-square or
// non-finite input, and ||A||_1 > 100 (a training-divergence signal).
ExpmResult expm(const Matrix& a);

// Frechet derivative L(A,E) = d/ds exp(A + sE) at s=0, via the exponential of
// the block matrix [[A,E],[0,A]] whose top-right block is L(A,E). E is
// rescaled to unit 1-norm first; L is linear in E so the result is exact.
Matrix expm_frechet(const Matrix& a, const Matrix& e);

// Reverse-mode adjoint: gradient of <exp(A), G>_F with respect to A,
// which equals L(A^T, G).
Matrix expm_vjp(const Matrix& a, const Matrix& g);

}  // namespace clg
