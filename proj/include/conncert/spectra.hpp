#pragma once

#include <span>
#include <vector>

#include "conncert/graph.hpp"

namespace conncert {

/// Dense real symmetric matrix, row-major. set() writes both triangles so the
/// stored entries are exactly symmetric.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(int n);

  int dim() const noexcept { return n_; }
  double operator()(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, double value);
  double frobenius_norm() const;
  std::span<const double> data() const { return data_; }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }

  int n_;
  std::vector<double> data_;
};

SymmetricMatrix adjacency(const Graph& g);
SymmetricMatrix laplacian(const Graph& g);
SymmetricMatrix signless_laplacian(const Graph& g);
/// a*D + b*A. Throws PencilDomain unless b > 0 and a >= -b.
SymmetricMatrix pencil(const Graph& g, double a, double b);

struct Spectrum {
  std::vector<double> values;  ///< descending
  double residual = 0.0;       ///< max_i ||M v_i - lambda_i v_i||_inf
  int sweeps = 0;
};

struct JacobiOptions {
  double relative_tolerance = 1e-12;  ///< off-diagonal Frobenius norm vs ||M||_F
  int max_sweeps = 100;
};

/// Eigenvalues by cyclic Jacobi rotations. Throws NoConvergence when the
/// sweep cap is hit, which indicates a solver defect rather than bad input.
Spectrum eigenvalues_sym(const SymmetricMatrix& m, const JacobiOptions& options = {});

struct EigenDecomposition {
  Spectrum spectrum;
  /// vectors[i] is a unit eigenvector for spectrum.values[i].
  std::vector<std::vector<double>> vectors;
};

EigenDecomposition eigen_decompose(const SymmetricMatrix& m, const JacobiOptions& options = {});

/// mu_{n-1}: second smallest Laplacian eigenvalue. Throws TooSmall for n < 2.
double algebraic_connectivity(const Graph& g);
/// mu_1: largest Laplacian eigenvalue.
double laplacian_radius(const Graph& g);
/// Second largest adjacency eigenvalue.
double lambda2(const Graph& g);
/// Second largest signless Laplacian eigenvalue.
double q2(const Graph& g);
/// Second largest eigenvalue of a*D + b*A.
double pencil_lambda2(const Graph& g, double a, double b);

/// Unit eigenvector of the Laplacian belonging to mu_{n-1}.
std::vector<double> fiedler_vector(const Graph& g);

/// n * sum_{ij in E} (x_i - x_j)^2 / sum_{i<j} (x_i - x_j)^2.
double fiedler_quotient(const Graph& g, std::span<const double> x);

/// n d(X) / (|X| |V \ X|), the +-1 test vector on the cut (X, V \ X).
double cut_quotient_bound(const Graph& g, const VertexSet& x);

/// n d(S) / (n (n - |S|) - (|X| - |Y|)^2) with Y = V \ (S u X), the (1, 0, -1)
/// test vector. X must be a union of components of G - S and Y nonempty.
double vertex_cut_quotient_bound(const Graph& g, const VertexSet& cut, const VertexSet& x);

}  // namespace conncert
