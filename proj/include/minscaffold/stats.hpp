#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "minscaffold/graph.hpp"
#include "minscaffold/scaffold.hpp"

namespace minscaffold {

/// How edge weights become path lengths for betweenness and closeness.
enum class PathLength {
  inverse_weight,  // length = 1 / w, heavier edges are closer
  weight,          // length = w
};

struct MetricReport {
  std::vector<double> degree;
  std::vector<double> strength;
  std::vector<double> betweenness;  // unnormalized, each unordered pair counted once
  std::vector<double> closeness;
  std::vector<double> eigenvector;
  std::vector<double> clustering;
  std::vector<double> edge_weights;  // canonical edge order
};

/// Zero-weight edges take part in degree and clustering but carry no path
/// under PathLength::inverse_weight.
MetricReport graph_metrics(const WeightedGraph& g, PathLength lengths = PathLength::inverse_weight);
MetricReport graph_metrics(const Scaffold& s, PathLength lengths = PathLength::inverse_weight);

/// nullopt when the sizes differ, fewer than 2 points, or either side is constant.
std::optional<double> pearson(std::span<const double> x, std::span<const double> y);
/// Pearson correlation of mid-ranks.
std::optional<double> spearman(std::span<const double> x, std::span<const double> y);

/// Mid-ranks starting at 1; tied values share their average rank.
std::vector<double> mid_ranks(std::span<const double> x);

struct KsResult {
  double statistic = 0.0;
  double p_value = 1.0;
  bool inconclusive() const { return p_value > 0.05; }
};

/// Two-sample Kolmogorov-Smirnov test with the asymptotic p-value at
/// n_eff = nx ny / (nx + ny). Throws std::invalid_argument on an empty sample.
KsResult ks_two_sample(std::span<const double> x, std::span<const double> y);

/// P(K > lambda) for the Kolmogorov distribution.
double kolmogorov_survival(double lambda);

enum class Metric { degree, strength, betweenness, closeness, eigenvector, clustering, edge_weight };
inline constexpr std::array<Metric, 7> kAllMetrics{Metric::degree,      Metric::strength,
                                                   Metric::betweenness, Metric::closeness,
                                                   Metric::eigenvector, Metric::clustering,
                                                   Metric::edge_weight};
std::string_view to_string(Metric m);
const std::vector<double>& metric_values(const MetricReport& r, Metric m);

struct Correlations {
  std::optional<double> pearson;
  std::optional<double> spearman;
};

struct MetricComparison {
  Metric metric = Metric::degree;
  Correlations direct;          // a vs b
  Correlations a_vs_null_b;     // crossed baselines
  Correlations b_vs_null_a;
  KsResult ks;                  // distributions of a and b
  KsResult ks_null;             // a vs null_b
  Correlations edge_union;      // edge_weight only: union of supports, absent = 0
};

struct ComparisonReport {
  std::vector<MetricComparison> metrics;  // in kAllMetrics order
  const MetricComparison& at(Metric m) const;
};

/// Compares two scaffolds on the same vertex set against crossed nulls
/// (`null_a` models `a`, `null_b` models `b`). Edge weights are correlated
/// over edges present in both graphs. Throws std::invalid_argument when the
/// vertex counts differ.
ComparisonReport compare_scaffolds(const WeightedGraph& a, const WeightedGraph& b,
                                   const WeightedGraph& null_a, const WeightedGraph& null_b,
                                   PathLength lengths = PathLength::inverse_weight);

/// Sample-level summary of one metric over many comparison reports.
struct MetricAggregate {
  Metric metric = Metric::degree;
  std::size_t instances = 0;
  std::optional<double> pearson;        // mean over instances of a vs b
  std::optional<double> spearman;
  std::optional<double> null_pearson;   // mean over instances and both crossed baselines
  std::optional<double> null_spearman;
  double ks_inconclusive_fraction = 0.0;
  double null_ks_inconclusive_fraction = 0.0;
};

std::vector<MetricAggregate> aggregate_comparisons(std::span<const ComparisonReport> reports);

/// Mean of the defined values; nullopt when none is defined.
std::optional<double> mean_defined(std::span<const std::optional<double>> values);

}  // namespace minscaffold
