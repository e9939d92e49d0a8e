#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "minscaffold/complex.hpp"
#include "minscaffold/minbasis.hpp"
#include "minscaffold/persistence.hpp"
#include "minscaffold/scaffold.hpp"
#include "minscaffold/stats.hpp"

namespace minscaffold {

using Json = nlohmann::ordered_json;

/// `u,v,weight_decimal,weight_num,weight_den`, preceded by a `#` line that
/// records provenance, vertex count and pathology events.
std::string scaffold_to_csv(const Scaffold& s);
/// Reads scaffold_to_csv output; the exact weight comes from num/den.
Scaffold parse_scaffold_csv(std::string_view text);

/// `dim,birth,death` with `inf` for essential bars.
std::string barcode_to_csv(const Barcode& b);
Barcode parse_barcode_csv(std::string_view text);
/// Bars with generator edges as vertex pairs of the final complex.
Json barcode_to_json(const Barcode& b, const FlagComplex2& final_complex);

std::string ranking_to_csv(const std::vector<RankedNode>& ranking, const WeightedGraph& g);
std::vector<RankedNode> parse_ranking_csv(std::string_view text);

Json complex_to_json(const FlagComplex2& cx);
Json minbasis_to_json(const MinimalBasisWithDraws& basis, const FlagComplex2& cx);

/// Per-step beta_1 profile, variant set size histogram and pathology count.
Json scaffold_report_json(const Filtration& f, const MinimalScaffolds& minimal);

Json comparison_to_json(const ComparisonReport& r);

/// One row per metric: `instance,metric,pearson,spearman,null_pearson,
/// null_spearman,ks_statistic,ks_p_value,ks_inconclusive,null_ks_inconclusive`.
/// Undefined correlations are written as `nan`.
std::string boxplot_header();
std::string boxplot_rows(std::size_t instance, const ComparisonReport& r);

struct TimingRow {
  std::string model;
  std::size_t n = 0;
  std::size_t k = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  double loose_ms = 0.0;
  double minimal_ms = 0.0;
};

std::string timing_header();
std::string timing_row(const TimingRow& row);
std::vector<TimingRow> parse_timing_csv(std::string_view text);

}  // namespace minscaffold
