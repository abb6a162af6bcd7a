#ifndef QEC_TWO_CLIQUE_HPP
#define QEC_TWO_CLIQUE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "graph.hpp"

namespace qec {

/// K_m ∪_l K_n: cliques of sizes m and n sharing l vertices.
struct TwoCliqueParams {
  std::int64_t l = 1;
  std::int64_t m = 2;
  std::int64_t n = 2;

  bool valid() const { return l >= 1 && m > l && n > l; }

  void validate() const {
    if (!valid())
      throw std::invalid_argument("two-clique parameters need l >= 1, m > l, n > l (got l=" +
                                  std::to_string(l) + ", m=" + std::to_string(m) +
                                  ", n=" + std::to_string(n) + ")");
  }

  std::int64_t vertex_count() const { return m + n - l; }

  friend bool operator==(const TwoCliqueParams &, const TwoCliqueParams &) = default;
};

inline Graph make_two_clique(const TwoCliqueParams &p) {
  p.validate();
  return make_two_clique(static_cast<std::size_t>(p.l), static_cast<std::size_t>(p.m),
                         static_cast<std::size_t>(p.n));
}

namespace detail {

/// mn(m-l)(n-l) in exact integer arithmetic.
inline std::int64_t two_clique_discriminant(const TwoCliqueParams &p) {
  const std::int64_t a = p.m * p.n, b = (p.m - p.l) * (p.n - p.l);
  if (b != 0 && a > std::numeric_limits<std::int64_t>::max() / b)
    throw std::overflow_error("two-clique discriminant overflows 64 bits");
  return a * b;
}

inline double two_clique_root(const TwoCliqueParams &p, double sign) {
  const double private_product = static_cast<double>((p.m - p.l) * (p.n - p.l));
  const double root = std::sqrt(static_cast<double>(two_clique_discriminant(p)));
  return -1.0 + (-private_product + sign * root) / static_cast<double>(p.vertex_count());
}

} // namespace detail

/// QEC(K_m ∪_l K_n) = -1 + (-(m-l)(n-l) + sqrt(mn(m-l)(n-l))) / (m+n-l).
inline double qec_two_clique(const TwoCliqueParams &p) {
  p.validate();
  return detail::two_clique_root(p, +1.0);
}

/// The same constant written as QEC(K_{a+l} ∪_l K_{b+l}) with private part
/// sizes a = m-l, b = n-l: -1 + l / (1 + sqrt((1 + l/a)(1 + l/b))).
inline double qec_two_clique_private_form(const TwoCliqueParams &p) {
  p.validate();
  const double l = static_cast<double>(p.l);
  const double a = static_cast<double>(p.m - p.l), b = static_cast<double>(p.n - p.l);
  return -1.0 + l / (1.0 + std::sqrt((1.0 + l / a) * (1.0 + l / b)));
}

/// QEC(K_m * K_n) = (-mn + sqrt(mn(m-1)(n-1))) / (m+n-1).
inline double qec_star_product_pair(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("qec_star_product_pair: need m, n >= 2");
  const double mn = static_cast<double>(m * n);
  const double disc = static_cast<double>(m * n * (m - 1) * (n - 1));
  return (-mn + std::sqrt(disc)) / static_cast<double>(m + n - 1);
}

/// -(1 + sqrt((1 - 1/m)(1 - 1/n)))^{-1}, equal to qec_star_product_pair.
inline double qec_star_product_pair_reciprocal(std::int64_t m, std::int64_t n) {
  if (m < 2 || n < 2)
    throw std::invalid_argument("qec_star_product_pair: need m, n >= 2");
  const double md = static_cast<double>(m), nd = static_cast<double>(n);
  return -1.0 / (1.0 + std::sqrt((1.0 - 1.0 / md) * (1.0 - 1.0 / nd)));
}

enum class StationaryBranch {
  plus,       // Δ != 0, larger root of the quadratic in λ
  minus,      // Δ != 0, smaller root
  degenerate, // Δ = 0, only possible for m = n with λ = -1 - (m - l)
};

/// A Lagrange stationary point of <f,Df> on K_m ∪_l K_n, with f constant on the
/// shared part (xi), the first private part (eta) and the second (zeta).
struct StationaryPoint {
  double xi = 0.0, eta = 0.0, zeta = 0.0;
  double lambda = 0.0;
  double mu = 0.0;
  double delta = 0.0; // (λ+1)^2 - (m-l)(n-l)
  StationaryBranch branch = StationaryBranch::plus;
  /// λ > -1; only such points can realise the QEC of a non-complete graph.
  bool admissible = false;
};

/// Stationary points of the Lagrangian restricted to block-constant f.
///
/// For Δ != 0 the block values are the Cramer solution of
///   (λ+1)η - (n-l)ζ = -μ/2,  -(m-l)η + (λ+1)ζ = -μ/2,
/// i.e. η = -(μ/2)(λ+1+n-l)/Δ, ζ = -(μ/2)(λ+1+m-l)/Δ, with ξ = -(μ/2)/(λ+1).
/// Eliminating against the mean-zero constraint gives the quadratic
///   lΔ + (λ+1){(m-l)(λ+n+1-l) + (n-l)(λ+m+1-l)} = 0
/// with roots λ±. μ is then scaled so the unit-norm constraint holds.
/// When m = n the λ- root has Δ = 0; it is returned as the degenerate point
/// (ξ = 0, η = -ζ) rather than through the Cramer formulas.
inline std::vector<StationaryPoint> appendix_stationary_solve(const TwoCliqueParams &p) {
  p.validate();
  const double l = static_cast<double>(p.l);
  const double a = static_cast<double>(p.m - p.l); // first private part size
  const double b = static_cast<double>(p.n - p.l); // second private part size

  auto delta_at = [&](double lambda) { return (lambda + 1.0) * (lambda + 1.0) - a * b; };

  auto case_one = [&](double lambda, StationaryBranch branch) {
    const double delta = delta_at(lambda);
    // Block values for μ/2 = -1, then rescale.
    double xi = 1.0 / (lambda + 1.0);
    double eta = (lambda + 1.0 + b) / delta;
    double zeta = (lambda + 1.0 + a) / delta;
    const double scale = std::sqrt(l * xi * xi + a * eta * eta + b * zeta * zeta);
    StationaryPoint sp;
    sp.xi = xi / scale;
    sp.eta = eta / scale;
    sp.zeta = zeta / scale;
    sp.mu = -2.0 / scale;
    sp.lambda = lambda;
    sp.delta = delta;
    sp.branch = branch;
    sp.admissible = lambda > -1.0;
    return sp;
  };

  std::vector<StationaryPoint> out;
  out.push_back(case_one(detail::two_clique_root(p, +1.0), StationaryBranch::plus));
  if (p.m != p.n) {
    out.push_back(case_one(detail::two_clique_root(p, -1.0), StationaryBranch::minus));
  } else {
    StationaryPoint sp;
    sp.lambda = -1.0 - a;
    sp.delta = 0.0;
    sp.xi = 0.0;
    sp.eta = 1.0 / std::sqrt(2.0 * a);
    sp.zeta = -sp.eta;
    sp.mu = 0.0;
    sp.branch = StationaryBranch::degenerate;
    sp.admissible = false;
    out.push_back(sp);
  }
  return out;
}

/// Distance matrix of K_m ∪_l K_n from its block structure: 1 inside either
/// clique, 2 between the two private parts. Vertex labels follow make_two_clique.
inline DistanceMatrix two_clique_distance_blocks(const TwoCliqueParams &p) {
  p.validate();
  const auto total = static_cast<std::size_t>(p.vertex_count());
  const auto first_private_end = static_cast<std::size_t>(p.m - p.l);
  const auto shared_end = static_cast<std::size_t>(p.m);
  enum class Part { first_private, shared, second_private };
  auto part_of = [&](std::size_t v) {
    if (v < first_private_end)
      return Part::first_private;
    return v < shared_end ? Part::shared : Part::second_private;
  };
  std::vector<int> d(total * total, 0);
  for (std::size_t x = 0; x < total; ++x)
    for (std::size_t y = 0; y < total; ++y) {
      if (x == y)
        continue;
      const Part px = part_of(x), py = part_of(y);
      const bool across = (px == Part::first_private && py == Part::second_private) ||
                          (px == Part::second_private && py == Part::first_private);
      d[x * total + y] = across ? 2 : 1;
    }
  return DistanceMatrix::from_rows(total, std::move(d));
}

} // namespace qec

#endif // QEC_TWO_CLIQUE_HPP
