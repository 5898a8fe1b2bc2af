#include "clg/expm.hpp"

#include <cmath>

namespace clg {

namespace {

// U odd part, V even part of the degree-d diagonal Pade numerator/denominator:
// exp(A) ~ (V+U) (V-U)^-1 after exit.
void pade_uv(const Matrix& a, int order, Matrix& u, Matrix& v) {
  const std::size_t n = a.rows();
  const Matrix id = Matrix::identity(n);
  const Matrix a2 = matmul(a, a);
  switch (order) {
    case 3: {
      static const double b[] = {120.0, 60.0, 12.0, 1.0};
      Matrix t = scale(a2, b[3]);
      axpy(t, b[1], id);
      u = matmul(a, t);
      v = scale(a2, b[2]);
      axpy(v, b[0], id);
      return;
    }
    case 5: {
      static const double b[] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
      const Matrix a4 = matmul(a2, a2);
      Matrix t = scale(a4, b[5]);
      axpy(t, b[3], a2);
      axpy(t, b[1], id);
      u = matmul(a, t);
      v = scale(a4, b[4]);
      axpy(v, b[2], a2);
      axpy(v, b[0], id);
      return;
    }
    case 7: {
      static const double b[] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                 25200.0,    1512.0,    56.0,      1.0};
      const Matrix a4 = matmul(a2, a2);
      const Matrix a6 = matmul(a4, a2);
      Matrix t = scale(a6, b[7]);
      axpy(t, b[5], a4);
      axpy(t, b[3], a2);
      axpy(t, b[1], id);
      u = matmul(a, t);
      v = scale(a6, b[6]);
      axpy(v, b[4], a4);
      axpy(v, b[2], a2);
      axpy(v, b[0], id);
      return;
    }
    case 9: {
      static const double b[] = {17643225600.0, 8821612800.0, 2075673600.0, 302702400.0,
                                 30270240.0,    2162160.0,    110880.0,     3960.0,
                                 90.0,          1.0};
      const Matrix a4 = matmul(a2, a2);
      const Matrix a6 = matmul(a4, a2);
      const Matrix a8 = matmul(a6, a2);
      Matrix t = scale(a8, b[9]);
      axpy(t, b[7], a6);
      axpy(t, b[5], a4);
      axpy(t, b[3], a2);
      axpy(t, b[1], id);
      u = matmul(a, t);
      v = scale(a8, b[8]);
      axpy(v, b[6], a6);
      axpy(v, b[4], a4);
      axpy(v, b[2], a2);
      axpy(v, b[0], id);
      return;
    }
    case 13: {
      static const double b[] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                 1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,       1323241920.0,
                                 40840800.0,          960960.0,            16380.0,
                                 182.0,               1.0};
      const Matrix a4 = matmul(a2, a2);
      const Matrix a6 = matmul(a4, a2);
      Matrix t = scale(a6, b[13]);
      axpy(t, b[11], a4);
      axpy(t, b[9], a2);
      Matrix odd = matmul(a6, t);
      axpy(odd, b[7], a6);
      axpy(odd, b[5], a4);
      axpy(odd, b[3], a2);
      axpy(odd, b[1], id);
      u = matmul(a, odd);
      t = scale(a6, b[12]);
      axpy(t, b[10], a4);
      axpy(t, b[8], a2);
      v = matmul(a6, t);
      axpy(v, b[6], a6);
      axpy(v, b[4], a4);
      axpy(v, b[2], a2);
      axpy(v, b[0], id);
      return;
    }
  }
  fail("expm: unsupported pade order");
}

// 1-norm thresholds theta_d for choosing the Pade order (double precision).
constexpr double kTheta3 = 1.495585217958292e-2;
constexpr double kTheta5 = 2.539398330063230e-1;
constexpr double kTheta7 = 9.504178996162932e-1;
constexpr double kTheta9 = 2.097847961257068e0;
constexpr double kTheta13 = 5.371920351148152e0;

// Core kernel without the public-input norm guard; the Frechet path feeds it
// 2n x 2n block matrices whose norm can slightly exceed the guard.
ExpmResult expm_core(const Matrix& a) {
  require(a.rows() == a.cols(), "expm: matrix not square: " + a.shape_str());
  require(a.all_finite(), "expm: non-finite entries in input");

  const double l1 = norm1(a);
  int order = 13;
  int squarings = 0;
  if (l1 <= kTheta3)
    order = 3;
  else if (l1 <= kTheta5)
    order = 5;
  else if (l1 <= kTheta7)
    order = 7;
  else if (l1 <= kTheta9)
    order = 9;
  else if (l1 > kTheta13) {
    std::frexp(l1 / kTheta13, &squarings);
    if (squarings < 0) squarings = 0;
  }

  Matrix scaled = a;
  if (squarings > 0)
    for (double& v : scaled.vec()) v = std::ldexp(v, -squarings);

  Matrix u, v;
  pade_uv(scaled, order, u, v);
  const Matrix numer = add(v, u);
  const Matrix denom = sub(v, u);
  Matrix r = solve_lu(denom, numer);
  for (int s = 0; s < squarings; ++s) r = matmul(r, r);

  require(r.all_finite(), "expm: non-finite result");
  return ExpmResult{std::move(r), squarings, order};
}

constexpr double kNormGuard = 100.0;

}  // namespace

ExpmResult expm(const Matrix& a) {
  require(a.rows() == a.cols(), "expm: matrix not square: " + a.shape_str());
  require(a.all_finite(), "expm: non-finite entries in input");
  require(norm1(a) <= kNormGuard, "expm: ||A||_1 exceeds " + std::to_string(kNormGuard) +
                                      " (training divergence signal)");
  return expm_core(a);
}

Matrix expm_frechet(const Matrix& a, const Matrix& e) {
  require(a.rows() == a.cols(), "expm_frechet: A not square: " + a.shape_str());
  require(a.rows() == e.rows() && a.cols() == e.cols(),
          "expm_frechet: shape mismatch " + a.shape_str() + " vs " + e.shape_str());
  require(a.all_finite() && e.all_finite(), "expm_frechet: non-finite entries in input");
  require(norm1(a) <= kNormGuard, "expm_frechet: ||A||_1 exceeds " + std::to_string(kNormGuard));

  const std::size_t n = a.rows();
  const double e_norm = norm1(e);
  if (e_norm == 0.0) return Matrix(n, n);
  const double inv_scale = 1.0 / e_norm;

  Matrix block(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      block(i, j) = a(i, j);
      block(n + i, n + j) = a(i, j);
      block(i, n + j) = e(i, j) * inv_scale;
    }
  const Matrix big = expm_core(block).value;
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) l(i, j) = big(i, n + j) * e_norm;
  require(l.all_finite(), "expm_frechet: non-finite result");
  return l;
}

Matrix expm_vjp(const Matrix& a, const Matrix& g) {
  require(a.rows() == a.cols(), "expm_vjp: A not square: " + a.shape_str());
  require(a.rows() == g.rows() && a.cols() == g.cols(),
          "expm_vjp: shape mismatch " + a.shape_str() + " vs " + g.shape_str());
  return expm_frechet(transpose(a), g);
}

}  // namespace clg
