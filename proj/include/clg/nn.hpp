#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "clg/matrix.hpp"
#include "clg/rng.hpp"

namespace clg {

// One named parameter tensor with its gradient accumulator and Adam moments.
// All four buffers share the same flat length.
struct ParamEntry {
  std::string name;
  std::vector<std::size_t> dims;  // rank 1..3
  std::vector<double> value;
  std::vector<double> grad;
  std::vector<double> m1;
  std::vector<double> m2;

  std::size_t count() const {
    std::size_t c = 1;
    for (std::size_t d : dims) c *= d;
    return c;
  }
};

// Insertion-ordered parameter table. Single-writer: only the trainer thread
// mutates values; read-only snapshots may be shared.
class ParamStore {
 public:
  ParamEntry& add(const std::string& name, std::vector<std::size_t> dims);
  ParamEntry& at(const std::string& name);
  const ParamEntry& at(const std::string& name) const;
  bool has(const std::string& name) const { return index_.count(name) != 0; }

  std::vector<ParamEntry>& entries() { return entries_; }
  const std::vector<ParamEntry>& entries() const { return entries_; }

  void zero_grads();

  // Matrix copy of a rank-2 entry's value (rows = dims[0], cols = dims[1]).
  Matrix matrix(const std::string& name) const;

 private:
  std::vector<ParamEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Standard Adam with bias correction; `step` is 1-based. Gradients are
// zeroed afterwards. A non-finite gradient is a hard error naming the entry.
void adam_step(ParamStore& store, double lr, double beta1, double beta2, double eps,
               std::uint64_t step);

// y = x W^T + b, batched over rows of x. x: B x in, W: out x in, b: out.
Matrix dense_forward(const Matrix& x, const Matrix& w, const std::vector<double>& b);

struct DenseGrads {
  Matrix x;               // B x in
  Matrix w;               // out x in
  std::vector<double> b;  // out
};
DenseGrads dense_backward(const Matrix& x, const Matrix& w, const Matrix& gy);

Matrix relu(const Matrix& x);
// Upstream gradient masked by x > 0 (subgradient 0 at exactly 0).
Matrix relu_backward(const Matrix& x, const Matrix& gy);

// Per-sample diagonal Gaussians over the m Lie-algebra coordinates;
// one row per batch sample.
struct LatentGaussian {
  Matrix mu;       // B x m
  Matrix log_var;  // B x m
};

// t = mu + exp(log_var / 2) * eps, elementwise.
Matrix reparameterize(const LatentGaussian& g, const Matrix& eps);

struct ReparamGrads {
  Matrix mu;
  Matrix log_var;
};
ReparamGrads reparameterize_backward(const LatentGaussian& g, const Matrix& eps,
                                     const Matrix& gt);

// KL(q || N(0,I)) summed over coordinates, averaged over batch rows.
double kl_standard_normal(const LatentGaussian& g);
ReparamGrads kl_standard_normal_backward(const LatentGaussian& g, double upstream);

}  // namespace clg
