#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genealogy/graph.hpp"

namespace genealogy {

struct PairCounts {
    std::size_t direct = 0;            // advisor edges with laureates at both ends
    std::size_t direct_same_field = 0; // ... sharing at least one prize field
    std::size_t transitive = 0;        // ordered laureate pairs (ancestor, descendant)
    std::size_t transitive_same_field = 0;
};

PairCounts laureate_pair_counts(const GenealogyGraph& g);

enum class TableKind { Proximate, Distal };

/// Field-by-field pair table. Rows are advisor/ancestor fields, columns
/// student/descendant fields; cells count ordered laureate pairs, with
/// dual-field winners contributing once per field pairing. `any`/`none`
/// count distinct laureates per row field with >= 1 / 0 laureate students
/// (Proximate) or descendants (Distal), so any[f] + none[f] equals the
/// number of laureates holding a prize in f.
struct CrossTable {
    TableKind kind = TableKind::Proximate;
    std::array<std::array<std::size_t, kFieldCount>, kFieldCount> cells{};
    std::array<std::size_t, kFieldCount> any{};
    std::array<std::size_t, kFieldCount> none{};
};

CrossTable cross_table(const GenealogyGraph& g, TableKind kind);

/// Distal field-by-field pair matrix computed either descendant-first (BFS
/// down from each laureate) or ancestor-first (BFS up). Both routes must
/// agree exactly; cross_table() uses the ancestor-first route.
std::array<std::array<std::size_t, kFieldCount>, kFieldCount>
distal_pair_matrix(const GenealogyGraph& g, bool descendant_first);

struct MeanSe {
    double mean = 0;
    double se = 0; // sample standard deviation / sqrt(group size); 0 for n == 1
};

/// Scope order: index 0 = all laureates, then PrizeField values 1..4.
/// Own-field and fraction statistics are absent for the "any" scope;
/// fraction rows are absent when no laureate in the scope has a counted
/// relative. Fractions average per-laureate shares over laureates with at
/// least one counted relative.
struct AncestrySummary {
    static constexpr std::size_t kScopes = kFieldCount + 1;
    std::array<std::size_t, kScopes> group_size{};
    std::array<std::optional<MeanSe>, kScopes> ancestors;
    std::array<std::optional<MeanSe>, kScopes> ancestors_own_field;
    std::array<std::optional<MeanSe>, kScopes> frac_ancestors_other_field;
    std::array<std::optional<MeanSe>, kScopes> descendants;
    std::array<std::optional<MeanSe>, kScopes> descendants_own_field;
    std::array<std::optional<MeanSe>, kScopes> frac_descendants_other_field;
};

/// Throws NoLaureatesError on a graph without laureates.
AncestrySummary ancestry_summary(const GenealogyGraph& g);

struct WelchResult {
    double t = 0;
    double dof = 0; // Welch–Satterthwaite degrees of freedom
};

/// Welch's unequal-variance t statistic. Requires both groups of size >= 2
/// and nonzero variance in at least one; throws DegenerateGroupError.
WelchResult welch_t(std::span<const double> group_a, std::span<const double> group_b);

enum class TieClass { NoTies, PeersOnly, HasLaureateAncestor, Unconnected };

std::string_view tie_class_name(TieClass c);

/// Classifies every laureate: HasLaureateAncestor when some ancestor holds a
/// prize; else PeersOnly when some other laureate shares an advisor
/// (H(i,j)(1) > 0); else Unconnected when the weak component holds no other
/// laureate; else NoTies.
std::map<std::string, TieClass> tie_classification(const GenealogyGraph& g);

enum class CohortMetric {
    AncPerLaureate,
    DescPerLaureate,
    FracAncOtherField,
    FracDescOtherField,
    FracNoAncestry,
    FracNoTies,
};

std::string_view cohort_metric_name(CohortMetric m);
std::optional<CohortMetric> cohort_metric_from_name(std::string_view name);

struct CohortPoint {
    int year = 0;
    double value = 0;
    std::size_t cohort_size = 0;
};

struct CohortSeries {
    CohortMetric metric = CohortMetric::AncPerLaureate;
    bool prior_only = false;
    std::vector<CohortPoint> points; // ascending by year
    double trend_slope = 0;          // unweighted OLS of value on year; 0 for < 2 points
};

/// Groups laureates into award-year cohorts (one membership per prize
/// record) and evaluates the metric per year:
///   AncPerLaureate / DescPerLaureate: laureate relatives per cohort member;
///   FracAncOtherField / FracDescOtherField: share of counted relatives not
///     holding a prize in the membership's field (years whose members have
///     no counted relatives are omitted);
///   FracNoAncestry: share of members without laureate ancestors;
///   FracNoTies: share with neither laureate ancestors nor laureate peers.
/// With prior_only, a relative or peer counts only when its earliest award
/// year strictly precedes the cohort year.
CohortSeries cohort_series(const GenealogyGraph& g, CohortMetric metric, bool prior_only);

/// Unweighted least-squares slope of y on x; 0 when fewer than two points
/// or when all x coincide.
double ols_slope(std::span<const double> x, std::span<const double> y);

} // namespace genealogy
