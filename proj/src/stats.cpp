#include "minscaffold/stats.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace minscaffold {

namespace {

struct Arc {
  VertexId to;
  Rational length;
};

std::vector<std::vector<Arc>> path_graph(const WeightedGraph& g, PathLength lengths) {
  std::vector<std::vector<Arc>> arcs(g.n_vertices());
  for (const Edge& e : g.edges()) {
    Rational len;
    if (lengths == PathLength::inverse_weight) {
      if (e.w == 0) continue;
      len = 1 / e.w;
    } else {
      len = e.w;
    }
    arcs[e.u].push_back({e.v, len});
    arcs[e.v].push_back({e.u, len});
  }
  return arcs;
}

struct QueueItem {
  Rational dist;
  VertexId v;
  bool operator>(const QueueItem& o) const { return dist != o.dist ? dist > o.dist : v > o.v; }
};

// Brandes accumulation and closeness from one Dijkstra sweep per source.
void path_metrics(const WeightedGraph& g, PathLength lengths, MetricReport& r) {
  const std::size_t n = g.n_vertices();
  const auto arcs = path_graph(g, lengths);
  r.betweenness.assign(n, 0.0);
  r.closeness.assign(n, 0.0);

  std::vector<Rational> dist(n);
  std::vector<bool> seen(n), done(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<std::vector<VertexId>> preds(n);
  std::vector<VertexId> order;
  for (VertexId s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), false);
    std::fill(done.begin(), done.end(), false);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    for (auto& p : preds) p.clear();
    order.clear();

    std::priority_queue<QueueItem, std::vector<QueueItem>, std::greater<>> heap;
    dist[s] = 0;
    seen[s] = true;
    sigma[s] = 1.0;
    heap.push({Rational(0), s});
    while (!heap.empty()) {
      const QueueItem top = heap.top();
      heap.pop();
      const VertexId u = top.v;
      if (done[u] || top.dist != dist[u]) continue;
      done[u] = true;
      order.push_back(u);
      for (const Arc& a : arcs[u]) {
        if (done[a.to]) continue;
        Rational nd = dist[u] + a.length;
        if (!seen[a.to] || nd < dist[a.to]) {
          seen[a.to] = true;
          dist[a.to] = nd;
          sigma[a.to] = sigma[u];
          preds[a.to].assign(1, u);
          heap.push({std::move(nd), a.to});
        } else if (nd == dist[a.to]) {
          sigma[a.to] += sigma[u];
          preds[a.to].push_back(u);
        }
      }
    }

    Rational total = 0;
    for (VertexId v : order) total += dist[v];
    if (order.size() > 1 && total > 0) {
      r.closeness[s] = static_cast<double>(order.size() - 1) / to_double(total);
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      const VertexId w = *it;
      for (VertexId v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) r.betweenness[w] += delta[w];
    }
  }
  for (double& b : r.betweenness) b /= 2.0;  // each pair was seen from both ends
}

std::vector<double> eigenvector_centrality(const WeightedGraph& g) {
  const std::size_t n = g.n_vertices();
  if (n == 0) return {};
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n))), y(n);
  std::vector<double> w;
  w.reserve(g.n_edges());
  for (const Edge& e : g.edges()) w.push_back(to_double(e.w));
  // Power iteration on A + I: same principal eigenvector as A, and the
  // shift avoids oscillation on bipartite graphs.
  for (int iter = 0; iter < 1'000'000; ++iter) {
    y = x;
    for (std::size_t i = 0; i < g.n_edges(); ++i) {
      const Edge& e = g.edge(i);
      y[e.u] += w[i] * x[e.v];
      y[e.v] += w[i] * x[e.u];
    }
    double norm = 0.0;
    for (double v : y) norm += v * v;
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
      y[v] /= norm;
      change = std::max(change, std::abs(y[v] - x[v]));
    }
    x.swap(y);
    if (change < 1e-10) break;
  }
  for (double& v : x) v = std::abs(v);
  return x;
}

std::vector<double> onnela_clustering(const WeightedGraph& g) {
  const std::size_t n = g.n_vertices();
  std::vector<double> c(n, 0.0);
  if (g.n_edges() == 0) return c;
  const double top = to_double(g.max_weight());
  std::vector<std::vector<std::pair<VertexId, double>>> adj(n);
  for (const Edge& e : g.edges()) {
    const double w = top > 0 ? to_double(e.w) / top : 0.0;
    adj[e.u].push_back({e.v, w});
    adj[e.v].push_back({e.u, w});
  }
  for (auto& list : adj) std::sort(list.begin(), list.end());
  auto weight = [&](VertexId a, VertexId b) {
    const auto& list = adj[a];
    const auto it = std::lower_bound(list.begin(), list.end(), std::pair<VertexId, double>{b, -1.0});
    return (it != list.end() && it->first == b) ? it->second : 0.0;
  };
  for (VertexId i = 0; i < n; ++i) {
    const std::size_t k = adj[i].size();
    if (k < 2) continue;
    double sum = 0.0;
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const double wjk = weight(adj[i][p].first, adj[i][q].first);
        if (wjk > 0) sum += 2.0 * std::cbrt(adj[i][p].second * adj[i][q].second * wjk);
      }
    }
    c[i] = sum / static_cast<double>(k * (k - 1));
  }
  return c;
}

}  // namespace

MetricReport graph_metrics(const WeightedGraph& g, PathLength lengths) {
  MetricReport r;
  const std::size_t n = g.n_vertices();
  r.degree.assign(n, 0.0);
  std::vector<Rational> strength(n, Rational(0));
  for (const Edge& e : g.edges()) {
    r.degree[e.u] += 1;
    r.degree[e.v] += 1;
    strength[e.u] += e.w;
    strength[e.v] += e.w;
    r.edge_weights.push_back(to_double(e.w));
  }
  for (const Rational& s : strength) r.strength.push_back(to_double(s));
  path_metrics(g, lengths, r);
  r.eigenvector = eigenvector_centrality(g);
  r.clustering = onnela_clustering(g);
  return r;
}

MetricReport graph_metrics(const Scaffold& s, PathLength lengths) {
  return graph_metrics(as_graph(s), lengths);
}

std::optional<double> pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n != y.size() || n < 2) return std::nullopt;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx, dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

std::vector<double> mid_ranks(std::span<const double> x) {
  std::vector<std::size_t> idx(x.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return x[a] < x[b]; });
  std::vector<double> rank(x.size());
  for (std::size_t i = 0; i < idx.size();) {
    std::size_t j = i;
    while (j + 1 < idx.size() && x[idx[j + 1]] == x[idx[i]]) ++j;
    const double r = (static_cast<double>(i + j) / 2.0) + 1.0;
    for (std::size_t q = i; q <= j; ++q) rank[idx[q]] = r;
    i = j + 1;
  }
  return rank;
}

std::optional<double> spearman(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) return std::nullopt;
  const std::vector<double> rx = mid_ranks(x), ry = mid_ranks(y);
  return pearson(rx, ry);
}

double kolmogorov_survival(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // Jacobi-transformed series, fast for small lambda.
    const double pi2 = std::numbers::pi * std::numbers::pi;
    double cdf = 0.0;
    for (int j = 1; j <= 50; ++j) {
      const double k = 2.0 * j - 1.0;
      cdf += std::exp(-k * k * pi2 / (8.0 * lambda * lambda));
    }
    cdf *= std::sqrt(2.0 * std::numbers::pi) / lambda;
    return std::clamp(1.0 - cdf, 0.0, 1.0);
  }
  double sum = 0.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += (j % 2 ? term : -term);
    if (term < 1e-300) break;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

KsResult ks_two_sample(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) throw std::invalid_argument("ks: empty sample");
  std::vector<double> a(x.begin(), x.end()), b(y.begin(), y.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size()), nb = static_cast<double>(b.size());
  std::size_t i = 0, j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double v = std::min(a[i], b[j]);
    while (i < a.size() && a[i] == v) ++i;
    while (j < b.size() && b[j] == v) ++j;
    d = std::max(d, std::abs(static_cast<double>(i) / na - static_cast<double>(j) / nb));
  }
  KsResult r;
  r.statistic = d;
  const double n_eff = na * nb / (na + nb);
  r.p_value = d == 0.0 ? 1.0 : kolmogorov_survival(std::sqrt(n_eff) * d);
  return r;
}

std::string_view to_string(Metric m) {
  switch (m) {
    case Metric::degree: return "degree";
    case Metric::strength: return "strength";
    case Metric::betweenness: return "betweenness";
    case Metric::closeness: return "closeness";
    case Metric::eigenvector: return "eigenvector";
    case Metric::clustering: return "clustering";
    case Metric::edge_weight: return "edge_weight";
  }
  return "unknown";
}

const std::vector<double>& metric_values(const MetricReport& r, Metric m) {
  switch (m) {
    case Metric::degree: return r.degree;
    case Metric::strength: return r.strength;
    case Metric::betweenness: return r.betweenness;
    case Metric::closeness: return r.closeness;
    case Metric::eigenvector: return r.eigenvector;
    case Metric::clustering: return r.clustering;
    case Metric::edge_weight: return r.edge_weights;
  }
  throw std::invalid_argument("unknown metric");
}

const MetricComparison& ComparisonReport::at(Metric m) const {
  for (const MetricComparison& c : metrics) {
    if (c.metric == m) return c;
  }
  throw std::out_of_range("metric not in report");
}

namespace {

Correlations correlate(std::span<const double> x, std::span<const double> y) {
  return {pearson(x, y), spearman(x, y)};
}

enum class Support { intersection, union_with_zeros };

std::pair<std::vector<double>, std::vector<double>> aligned_weights(const WeightedGraph& a,
                                                                    const WeightedGraph& b,
                                                                    Support support) {
  std::vector<double> x, y;
  std::size_t i = 0, j = 0;
  const auto& ea = a.edges();
  const auto& eb = b.edges();
  auto key = [](const Edge& e) { return std::pair{e.u, e.v}; };
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && key(ea[i]) < key(eb[j]))) {
      if (support == Support::union_with_zeros) {
        x.push_back(to_double(ea[i].w));
        y.push_back(0.0);
      }
      ++i;
    } else if (i == ea.size() || key(eb[j]) < key(ea[i])) {
      if (support == Support::union_with_zeros) {
        x.push_back(0.0);
        y.push_back(to_double(eb[j].w));
      }
      ++j;
    } else {
      x.push_back(to_double(ea[i].w));
      y.push_back(to_double(eb[j].w));
      ++i;
      ++j;
    }
  }
  return {std::move(x), std::move(y)};
}

Correlations correlate_edges(const WeightedGraph& a, const WeightedGraph& b, Support support) {
  const auto [x, y] = aligned_weights(a, b, support);
  return correlate(x, y);
}

KsResult ks_or_trivial(std::span<const double> x, std::span<const double> y) {
  if (x.empty() || y.empty()) return {x.empty() == y.empty() ? 0.0 : 1.0, x.empty() == y.empty() ? 1.0 : 0.0};
  return ks_two_sample(x, y);
}

}  // namespace

ComparisonReport compare_scaffolds(const WeightedGraph& a, const WeightedGraph& b,
                                   const WeightedGraph& null_a, const WeightedGraph& null_b,
                                   PathLength lengths) {
  const std::size_t n = a.n_vertices();
  if (b.n_vertices() != n || null_a.n_vertices() != n || null_b.n_vertices() != n) {
    throw std::invalid_argument("compare: graphs have different vertex sets");
  }
  const MetricReport ma = graph_metrics(a, lengths), mb = graph_metrics(b, lengths);
  const MetricReport na = graph_metrics(null_a, lengths), nb = graph_metrics(null_b, lengths);

  ComparisonReport report;
  for (Metric m : kAllMetrics) {
    MetricComparison c;
    c.metric = m;
    const auto& va = metric_values(ma, m);
    const auto& vb = metric_values(mb, m);
    if (m == Metric::edge_weight) {
      c.direct = correlate_edges(a, b, Support::intersection);
      c.a_vs_null_b = correlate_edges(a, null_b, Support::intersection);
      c.b_vs_null_a = correlate_edges(b, null_a, Support::intersection);
      c.edge_union = correlate_edges(a, b, Support::union_with_zeros);
    } else {
      c.direct = correlate(va, vb);
      c.a_vs_null_b = correlate(va, metric_values(nb, m));
      c.b_vs_null_a = correlate(vb, metric_values(na, m));
    }
    c.ks = ks_or_trivial(va, vb);
    c.ks_null = ks_or_trivial(va, metric_values(nb, m));
    report.metrics.push_back(std::move(c));
  }
  return report;
}

std::optional<double> mean_defined(std::span<const std::optional<double>> values) {
  double sum = 0.0;
  std::size_t count = 0;
  for (const auto& v : values) {
    if (v) {
      sum += *v;
      ++count;
    }
  }
  if (count == 0) return std::nullopt;
  return sum / static_cast<double>(count);
}

std::vector<MetricAggregate> aggregate_comparisons(std::span<const ComparisonReport> reports) {
  std::vector<MetricAggregate> out;
  for (Metric m : kAllMetrics) {
    MetricAggregate agg;
    agg.metric = m;
    agg.instances = reports.size();
    std::vector<std::optional<double>> p, s, np, ns;
    std::size_t inconclusive = 0, null_inconclusive = 0;
    for (const ComparisonReport& r : reports) {
      const MetricComparison& c = r.at(m);
      p.push_back(c.direct.pearson);
      s.push_back(c.direct.spearman);
      np.push_back(c.a_vs_null_b.pearson);
      np.push_back(c.b_vs_null_a.pearson);
      ns.push_back(c.a_vs_null_b.spearman);
      ns.push_back(c.b_vs_null_a.spearman);
      inconclusive += c.ks.inconclusive();
      null_inconclusive += c.ks_null.inconclusive();
    }
    agg.pearson = mean_defined(p);
    agg.spearman = mean_defined(s);
    agg.null_pearson = mean_defined(np);
    agg.null_spearman = mean_defined(ns);
    if (!reports.empty()) {
      agg.ks_inconclusive_fraction = static_cast<double>(inconclusive) / static_cast<double>(reports.size());
      agg.null_ks_inconclusive_fraction =
          static_cast<double>(null_inconclusive) / static_cast<double>(reports.size());
    }
    out.push_back(agg);
  }
  return out;
}

}  // namespace minscaffold
