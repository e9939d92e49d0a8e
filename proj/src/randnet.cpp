#include "minscaffold/randnet.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace minscaffold {

namespace {

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

}  // namespace

CounterRng::CounterRng(std::uint64_t seed, std::uint64_t stream)
    : key_(mix64(mix64(seed + kGolden) ^ (stream * 0xd1b54a32d192ed03ULL))) {}

std::uint64_t CounterRng::next() { return mix64(key_ + (++counter_) * kGolden); }

double CounterRng::uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

std::uint64_t CounterRng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("below(0)");
  const std::uint64_t limit = -n % n;  // 2^64 mod n: rejecting these keeps draws unbiased
  std::uint64_t x;
  do {
    x = next();
  } while (x < limit);
  return x % n;
}

double CounterRng::normal() {
  double u1;
  do {
    u1 = uniform01();
  } while (u1 == 0.0);
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

WeightedGraph gen_ws_weighted(std::size_t n, std::size_t k, double p, std::uint64_t seed) {
  if (k % 2 != 0 || k < 2 || k >= n) {
    throw std::invalid_argument("ws: need k even and 2 <= k < n");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("ws: p must lie in [0, 1]");
  constexpr std::uint64_t kJitterSlots = 999'999;  // jitter = slot * 1e-12, slot in [1, 999999]
  if (n * k / 2 > kJitterSlots) throw std::invalid_argument("ws: too many edges for distinct jitter");

  CounterRng rng(seed);
  std::vector<std::set<VertexId>> adj(n);
  auto link = [&](std::size_t a, std::size_t b) {
    adj[a].insert(static_cast<VertexId>(b));
    adj[b].insert(static_cast<VertexId>(a));
  };
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t j = 1; j <= k / 2; ++j) link(u, (u + j) % n);
  }
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      if (rng.uniform01() >= p) continue;
      const std::size_t v = (u + j) % n;
      if (!adj[u].contains(static_cast<VertexId>(v))) continue;  // already rewired away
      if (adj[u].size() >= n - 1) continue;
      std::size_t w;
      do {
        w = rng.below(n);
      } while (w == u || adj[u].contains(static_cast<VertexId>(w)));
      adj[u].erase(static_cast<VertexId>(v));
      adj[v].erase(static_cast<VertexId>(u));
      link(u, w);
    }
  }

  std::vector<Edge> edges;
  std::unordered_set<std::uint64_t> used;
  const Rational grid(1, 1'000'000'000'000LL);
  for (std::size_t u = 0; u < n; ++u) {
    for (VertexId v : adj[u]) {
      if (v <= u) continue;
      const std::size_t gap = v - u;
      const std::size_t ring = std::min(gap, n - gap);
      std::uint64_t slot;
      do {
        slot = 1 + rng.below(kJitterSlots);
      } while (!used.insert(slot).second);
      edges.push_back({static_cast<VertexId>(u), v,
                       Rational(1 + static_cast<long long>(ring)) + Rational(static_cast<long long>(slot)) * grid});
    }
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph gen_rgg(std::size_t n, double t, std::size_t d, std::uint64_t seed) {
  if (n < 1 || d < 1 || !(t > 0.0)) throw std::invalid_argument("rgg: need n >= 1, d >= 1, t > 0");
  CounterRng rng(seed);
  std::vector<double> points(n * d);
  for (double& x : points) x = rng.uniform01();
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      double sq = 0.0;
      for (std::size_t i = 0; i < d; ++i) {
        const double diff = points[a * d + i] - points[b * d + i];
        sq += diff * diff;
      }
      const double dist = std::sqrt(sq);
      if (dist <= t) {
        edges.push_back({static_cast<VertexId>(a), static_cast<VertexId>(b), quantize_decimal(dist, 12)});
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

WeightedGraph gen_er_null(std::size_t n, std::size_t m, std::uint64_t seed) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) throw std::invalid_argument("er: m exceeds n(n-1)/2");
  CounterRng rng(seed);
  // Floyd's sampling of m distinct pair indices.
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = pairs - m; j < pairs; ++j) {
    const std::uint64_t r = rng.below(j + 1);
    if (!chosen.insert(r).second) chosen.insert(j);
  }
  std::vector<Edge> edges;
  edges.reserve(m);
  auto it = chosen.begin();
  std::uint64_t index = 0;
  for (std::size_t u = 0; u < n && it != chosen.end(); ++u) {
    for (std::size_t v = u + 1; v < n && it != chosen.end(); ++v, ++index) {
      if (*it == index) {
        edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), Rational(1)});
        ++it;
      }
    }
  }
  return WeightedGraph(n, std::move(edges));
}

Eigen::MatrixXd random_orthogonal(std::size_t n, CounterRng& rng) {
  const auto size = static_cast<Eigen::Index>(n);
  Eigen::MatrixXd g(size, size);
  for (Eigen::Index j = 0; j < size; ++j) {
    for (Eigen::Index i = 0; i < size; ++i) g(i, j) = rng.normal();
  }
  const Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd& r = qr.matrixQR();
  for (Eigen::Index j = 0; j < size; ++j) {
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  }
  return q;
}

Eigen::MatrixXd spectral_rotation_null(const Eigen::MatrixXd& corr, std::uint64_t seed) {
  if (corr.rows() != corr.cols()) throw std::invalid_argument("spectral null: matrix is not square");
  if ((corr - corr.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw std::invalid_argument("spectral null: matrix is not symmetric");
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(corr, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -1e-9) {
    throw std::invalid_argument("spectral null: matrix is not positive semidefinite");
  }
  CounterRng rng(seed);
  const Eigen::MatrixXd q = random_orthogonal(static_cast<std::size_t>(corr.rows()), rng);
  const Eigen::MatrixXd rotated = q * corr * q.transpose();
  return (rotated + rotated.transpose()) / 2.0;
}

Eigen::MatrixXd gen_latent_correlation(std::size_t n, std::size_t samples, double scale,
                                       std::uint64_t seed) {
  if (n < 2 || samples < 2 || !(scale > 0.0)) {
    throw std::invalid_argument("latent correlation: need n >= 2, samples >= 2, scale > 0");
  }
  CounterRng rng(seed);
  const auto size = static_cast<Eigen::Index>(n);
  std::vector<double> position(n);
  for (double& x : position) x = rng.uniform01();
  Eigen::MatrixXd cov(size, size);
  for (Eigen::Index i = 0; i < size; ++i) {
    for (Eigen::Index j = 0; j < size; ++j) {
      cov(i, j) = std::exp(-std::abs(position[i] - position[j]) / scale);
    }
  }
  // A jitter on the diagonal keeps the factorization stable for close points.
  cov.diagonal().array() += 1e-9;
  const Eigen::MatrixXd factor = Eigen::LLT<Eigen::MatrixXd>(cov).matrixL();

  Eigen::MatrixXd data(static_cast<Eigen::Index>(samples), size);
  Eigen::VectorXd z(size);
  for (Eigen::Index s = 0; s < data.rows(); ++s) {
    for (Eigen::Index i = 0; i < size; ++i) z(i) = rng.normal();
    data.row(s) = (factor * z).transpose();
  }
  const Eigen::MatrixXd centered = data.rowwise() - data.colwise().mean();
  const Eigen::MatrixXd sample_cov = centered.transpose() * centered;
  const Eigen::VectorXd inv_sd = sample_cov.diagonal().cwiseSqrt().cwiseInverse();
  Eigen::MatrixXd corr = inv_sd.asDiagonal() * sample_cov * inv_sd.asDiagonal();
  corr = (corr + corr.transpose()) / 2.0;
  corr.diagonal().setOnes();
  return corr;
}

std::vector<double> row_major(const Eigen::MatrixXd& m) {
  std::vector<double> out(static_cast<std::size_t>(m.size()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
  }
  return out;
}

}  // namespace minscaffold
