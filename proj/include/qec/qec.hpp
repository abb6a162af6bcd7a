#ifndef QEC_QEC_HPP
#define QEC_QEC_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "graph.hpp"
#include "linalg.hpp"

namespace qec {

enum class QecMethod {
  numeric_eigen,
  closed_form_path,
  closed_form_complete,
  closed_form_two_clique,
};

constexpr std::string_view to_string(QecMethod m) {
  switch (m) {
  case QecMethod::numeric_eigen:
    return "numeric-eigen";
  case QecMethod::closed_form_path:
    return "closed-form-path";
  case QecMethod::closed_form_complete:
    return "closed-form-complete";
  case QecMethod::closed_form_two_clique:
    return "closed-form-two-clique";
  }
  return "unknown";
}

/// Maximum of <f, D f> over unit f orthogonal to the all-ones vector.
///
/// `witness` attains the maximum; `residual` is the Euclidean norm of the
/// two constraint violations (<f,f> - 1, <1,f>).
struct QecResult {
  double value = 0.0;
  std::vector<double> witness;
  QecMethod method = QecMethod::numeric_eigen;
  double residual = 0.0;
};

struct DistanceSpectrum {
  std::vector<double> eigenvalues; // descending
  bool transmission_regular = false;

  double delta1() const { return eigenvalues.at(0); }
  double delta2() const { return eigenvalues.at(1); }
};

inline Matrix to_matrix(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = d(i, j);
  return m;
}

/// Orthonormal basis (n x (n-1)) of the mean-zero hyperplane.
///
/// Column k-1 (k = 1..n-1) has 1/sqrt(k(k+1)) in rows 0..k-1 and
/// -k/sqrt(k(k+1)) in row k.
inline Matrix helmert_basis(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("helmert_basis: n must be >= 2");
  Matrix q(n, n - 1);
  for (std::size_t k = 1; k < n; ++k) {
    const double kk = static_cast<double>(k);
    const double scale = 1.0 / std::sqrt(kk * (kk + 1.0));
    for (std::size_t i = 0; i < k; ++i)
      q(i, k - 1) = scale;
    q(k, k - 1) = -kk * scale;
  }
  return q;
}

inline double quadratic_form(const DistanceMatrix &d, std::span<const double> f) {
  double s = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j)
      s += f[i] * d(i, j) * f[j];
  return s;
}

inline double constraint_residual(std::span<const double> f) {
  const double norm_gap = dot(f, f) - 1.0;
  double sum = 0.0;
  for (double x : f)
    sum += x;
  return std::hypot(norm_gap, sum);
}

/// QEC by compressing D onto the mean-zero subspace and taking the top
/// eigenpair of QᵀDQ.
inline QecResult qec_numeric(const DistanceMatrix &d) {
  const std::size_t n = d.size();
  if (n < 2)
    throw std::invalid_argument("qec_numeric: QEC needs at least 2 vertices");
  const Matrix q = helmert_basis(n);
  const Matrix qt = q.transposed();
  Matrix b = qt * to_matrix(d) * q;
  // Round-off can leave b asymmetric in the last bits.
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = i + 1; j < b.cols(); ++j)
      b(i, j) = b(j, i) = 0.5 * (b(i, j) + b(j, i));
  const auto eig = symmetric_eigen(b);

  QecResult r;
  r.value = eig.values.front();
  r.witness = q * eig.vectors.column(0);
  r.method = QecMethod::numeric_eigen;
  r.residual = constraint_residual(r.witness);
  return r;
}

/// -1 / (1 + cos(pi/d)), the QEC of the path on d vertices.
inline double qec_path_closed_form(int d_vertices) {
  if (d_vertices < 2)
    throw std::invalid_argument("qec_path_closed_form: need at least 2 vertices");
  return -1.0 / (1.0 + std::cos(std::numbers::pi / d_vertices));
}

inline DistanceSpectrum distance_spectrum(const DistanceMatrix &d) {
  if (d.size() < 2)
    throw std::invalid_argument("distance_spectrum: need at least 2 vertices");
  DistanceSpectrum s;
  s.eigenvalues = symmetric_eigen(to_matrix(d)).values;
  s.transmission_regular = true;
  for (std::size_t x = 1; x < d.size(); ++x)
    if (d.row_sum(x) != d.row_sum(0))
      s.transmission_regular = false;
  return s;
}

inline constexpr double sandwich_tolerance = 1e-8;

/// delta2 - tol <= QEC < delta1.
inline bool check_sandwich(const DistanceSpectrum &s, double qec_value) {
  return s.delta2() - sandwich_tolerance <= qec_value && qec_value < s.delta1();
}

inline bool check_sandwich(const DistanceMatrix &d) {
  return check_sandwich(distance_spectrum(d), qec_numeric(d).value);
}

/// Norm of the Lagrange stationarity condition 2(D - λI)f - μ1 with
/// λ = result.value and μ = (2/n)<1, Df>.
inline double stationarity_residual(const DistanceMatrix &d, const QecResult &r) {
  const std::size_t n = d.size();
  const auto df = to_matrix(d) * std::span<const double>(r.witness);
  double mu = 0.0;
  for (double x : df)
    mu += x;
  mu *= 2.0 / static_cast<double>(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double g = 2.0 * (df[i] - r.value * r.witness[i]) - mu;
    s += g * g;
  }
  return std::sqrt(s);
}

} // namespace qec

#endif // QEC_QEC_HPP
