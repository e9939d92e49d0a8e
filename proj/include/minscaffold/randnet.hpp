#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "minscaffold/graph.hpp"

namespace minscaffold {

/// Counter-based generator: the i-th draw of a stream is a pure function of
/// (seed, stream, i), so independent instances never share state.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next();
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();
  /// Uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  double normal();

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Weighted Watts-Strogatz graph. Ring lattice with k/2 neighbours on each
/// side; each lattice edge is rewired with probability p to a uniform new
/// endpoint. Weight = 1 + circular distance between the endpoints on the
/// ring + a jitter in (0, 1e-6) on a 1e-12 grid, distinct across edges.
WeightedGraph gen_ws_weighted(std::size_t n, std::size_t k, double p, std::uint64_t seed);

/// Random geometric graph: n uniform points in [0,1]^d, an edge for every
/// pair at distance <= t weighted by that distance (rounded to 1e-12).
WeightedGraph gen_rgg(std::size_t n, double t, std::size_t d, std::uint64_t seed);

/// m distinct uniformly chosen vertex pairs with unit weight.
WeightedGraph gen_er_null(std::size_t n, std::size_t m, std::uint64_t seed);

/// Q C Q^T for a Haar-random orthogonal Q. Throws std::invalid_argument if
/// `corr` is not square, not symmetric (1e-12) or has an eigenvalue below -1e-9.
Eigen::MatrixXd spectral_rotation_null(const Eigen::MatrixXd& corr, std::uint64_t seed);

/// Haar-random orthogonal matrix from the QR factorization of a Gaussian
/// matrix with R's diagonal signs folded into Q.
Eigen::MatrixXd random_orthogonal(std::size_t n, CounterRng& rng);

/// Sample correlation matrix of `samples` draws from a Gaussian field over
/// n random points on a line with covariance exp(-|x_i - x_j| / scale).
/// Nearby points correlate strongly, so thresholded graphs are nearly
/// one-dimensional.
Eigen::MatrixXd gen_latent_correlation(std::size_t n, std::size_t samples, double scale,
                                       std::uint64_t seed);

/// Row-major copy, the layout affinity_to_graph expects.
std::vector<double> row_major(const Eigen::MatrixXd& m);

}  // namespace minscaffold
