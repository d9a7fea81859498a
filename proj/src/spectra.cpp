#include "conncert/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "conncert/error.hpp"

namespace conncert {

SymmetricMatrix::SymmetricMatrix(int n) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0) {
  if (n < 1) throw Error(ErrorCode::TooSmall, "matrix dimension must be positive");
}

void SymmetricMatrix::set(int i, int j, double value) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw Error(ErrorCode::OutOfRange, "matrix index");
  data_[index(i, j)] = value;
  data_[index(j, i)] = value;
}

double SymmetricMatrix::frobenius_norm() const {
  return std::sqrt(std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0));
}

namespace {

SymmetricMatrix degree_adjacency_combination(const Graph& g, double a, double b) {
  SymmetricMatrix m(g.order());
  for (int v = 0; v < g.order(); ++v) m.set(v, v, a * g.degree(v));
  for (auto [u, v] : g.edges()) m.set(u, v, b);
  return m;
}

}  // namespace

SymmetricMatrix adjacency(const Graph& g) { return degree_adjacency_combination(g, 0.0, 1.0); }
SymmetricMatrix laplacian(const Graph& g) { return degree_adjacency_combination(g, 1.0, -1.0); }
SymmetricMatrix signless_laplacian(const Graph& g) { return degree_adjacency_combination(g, 1.0, 1.0); }

SymmetricMatrix pencil(const Graph& g, double a, double b) {
  if (!(b > 0.0) || !(a >= -b)) throw Error(ErrorCode::PencilDomain, "need b > 0 and a >= -b");
  return degree_adjacency_combination(g, a, b);
}

EigenDecomposition eigen_decompose(const SymmetricMatrix& m, const JacobiOptions& options) {
  const int n = m.dim();
  const auto un = static_cast<std::size_t>(n);
  std::vector<double> a(m.data().begin(), m.data().end());
  std::vector<double> v(un * un, 0.0);
  for (std::size_t i = 0; i < un; ++i) v[i * un + i] = 1.0;
  auto at = [un](std::vector<double>& x, int i, int j) -> double& {
    return x[static_cast<std::size_t>(i) * un + static_cast<std::size_t>(j)];
  };

  const double target = options.relative_tolerance * m.frobenius_norm();
  int sweeps = 0;
  for (;; ++sweeps) {
    double off = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2.0 * at(a, i, j) * at(a, i, j);
    if (std::sqrt(off) <= target) break;
    if (sweeps == options.max_sweeps)
      throw Error(ErrorCode::NoConvergence, "Jacobi did not converge in " + std::to_string(options.max_sweeps) + " sweeps");

    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<int> order(un);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return at(a, x, x) > at(a, y, y); });

  EigenDecomposition out;
  out.spectrum.sweeps = sweeps;
  out.spectrum.values.reserve(un);
  out.vectors.reserve(un);
  for (int col : order) {
    const double lambda = at(a, col, col);
    std::vector<double> vec(un);
    for (int k = 0; k < n; ++k) vec[static_cast<std::size_t>(k)] = at(v, k, col);
    double worst = 0.0;
    for (int r = 0; r < n; ++r) {
      double mv = 0.0;
      for (int k = 0; k < n; ++k) mv += m(r, k) * vec[static_cast<std::size_t>(k)];
      worst = std::max(worst, std::abs(mv - lambda * vec[static_cast<std::size_t>(r)]));
    }
    out.spectrum.residual = std::max(out.spectrum.residual, worst);
    out.spectrum.values.push_back(lambda);
    out.vectors.push_back(std::move(vec));
  }
  return out;
}

Spectrum eigenvalues_sym(const SymmetricMatrix& m, const JacobiOptions& options) {
  return eigen_decompose(m, options).spectrum;
}

namespace {

void require_two(const Graph& g) {
  if (g.order() < 2) throw Error(ErrorCode::TooSmall, "need at least two vertices");
}

}  // namespace

double algebraic_connectivity(const Graph& g) {
  require_two(g);
  const auto values = eigenvalues_sym(laplacian(g)).values;
  return values[values.size() - 2];
}

double laplacian_radius(const Graph& g) {
  require_two(g);
  return eigenvalues_sym(laplacian(g)).values.front();
}

double lambda2(const Graph& g) {
  require_two(g);
  return eigenvalues_sym(adjacency(g)).values[1];
}

double q2(const Graph& g) {
  require_two(g);
  return eigenvalues_sym(signless_laplacian(g)).values[1];
}

double pencil_lambda2(const Graph& g, double a, double b) {
  require_two(g);
  return eigenvalues_sym(pencil(g, a, b)).values[1];
}

std::vector<double> fiedler_vector(const Graph& g) {
  require_two(g);
  auto decomposition = eigen_decompose(laplacian(g));
  return std::move(decomposition.vectors[decomposition.vectors.size() - 2]);
}

double fiedler_quotient(const Graph& g, std::span<const double> x) {
  const int n = g.order();
  if (static_cast<int>(x.size()) != n) throw Error(ErrorCode::Domain, "vector length must equal the graph order");
  double numerator = 0.0;
  for (auto [u, v] : g.edges()) {
    const double d = x[static_cast<std::size_t>(u)] - x[static_cast<std::size_t>(v)];
    numerator += d * d;
  }
  double denominator = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) denominator += (x[i] - x[j]) * (x[i] - x[j]);
  if (denominator == 0.0) throw Error(ErrorCode::ConstantVector, "test vector must be non-constant");
  return n * numerator / denominator;
}

double cut_quotient_bound(const Graph& g, const VertexSet& x) {
  const auto cut = static_cast<double>(cut_degree(g, x));
  const double n = g.order();
  const double size = x.size();
  return n * cut / (size * (n - size));
}

double vertex_cut_quotient_bound(const Graph& g, const VertexSet& cut, const VertexSet& x) {
  const int n = g.order();
  if (cut.empty() || cut.size() >= n) throw Error(ErrorCode::NotACut, "S must be a nonempty proper subset");
  if (x.empty() || x.intersects(cut)) throw Error(ErrorCode::NotACut, "X must be nonempty and disjoint from S");
  const VertexSet y = (cut | x).complement();
  if (y.empty()) throw Error(ErrorCode::NotACut, "V \\ (S u X) is empty");
  for (int v : x.members())
    if (g.neighbor_set(v).intersects(y)) throw Error(ErrorCode::NotACut, "X is not a union of components of G - S");

  const auto ds = static_cast<double>(cut_degree(g, cut));
  const double diff = x.size() - y.size();
  const double denominator = static_cast<double>(n) * (n - cut.size()) - diff * diff;
  return n * ds / denominator;
}

}  // namespace conncert
