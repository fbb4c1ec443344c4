#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "genealogy/graph.hpp"

namespace genealogy {

/// Parameters of the Hölder (power) mean over distances to the subset J.
///
/// The mean distance of node i is  D_i(h) = ((1/|J'|) * sum_{j in J'} D^h)^(1/h)
/// with J' = subset minus i when exclude_self. Exponent h = -1 (harmonic
/// mean) is the default: it stays bounded on unconnected graphs because an
/// unreachable j contributes 1/inf = 0. Under h > 0 a single unreachable j
/// makes the mean infinite. h = 0 (the geometric-mean limit) is rejected.
struct HolderParams {
    double h = -1.0;
    std::set<std::string> subset;
    bool exclude_self = true;
};

enum class ClosenessDirection { Out, In };

/// Hölder-mean distance of node id to the subset, along ancestor distances
/// (Out: D_{j,i}, j upstream of i) or descendant distances (In: D_{i,j}).
/// Returns +infinity when nothing in J' is reachable (h < 0) or when any
/// member is unreachable (h > 0). Throws UnknownIdError, EmptySubsetError,
/// InvalidArgumentError (h == 0).
double holder_mean_distance(const GenealogyGraph& g, std::string_view id,
                            const HolderParams& params, ClosenessDirection direction);

/// Horizontal (kinship) distance at generation n:
///
///   H_{i,j}(n) = |A_n(i) ∩ A_n(j)| / max(|A_n(i)|, |A_n(j)|)
///
/// where A_n is the generation-n ancestor set (shortest distance exactly n).
/// Zero when either set is empty or nothing is shared. Symmetric, in [0,1];
/// H(1) = 1 for full siblings, 0.5 for half-siblings, H(2) = 0.5 for first
/// cousins, H(3) = 0.25 for second cousins on a clean two-advisor pedigree.
double horizontal_distance(const GenealogyGraph& g, std::string_view i, std::string_view j,
                           int n);

/// Scalar pairwise distance derived from the horizontal measure:
///
///   d(i,j) = min over n in [1, max_n] with H_{i,j}(n) > 0 of  n / H_{i,j}(n)
///
/// +infinity when no generation shares ancestors. The rule penalizes both
/// generational depth and dilution: full siblings 1, half-siblings 2,
/// two-advisor first cousins 4.
double pairwise_cross_distance(const GenealogyGraph& g, std::string_view i, std::string_view j,
                               int max_n);

/// Inverse Hölder mean (exponent params.h) of pairwise_cross_distance(i, j)
/// over j in J'. Unreachable pairs contribute 0 under h < 0; 0 when every
/// pair is unreachable. max_n <= 0 means "graph depth".
double crosscloseness(const GenealogyGraph& g, std::string_view id, const HolderParams& params,
                      int max_n = 0);

struct ClosenessRow {
    std::string id;
    double out_distance = 0, in_distance = 0, cross_distance = 0;
    double out_closeness = 0, in_closeness = 0, cross_closeness = 0;
    double total_closeness = 0;
};

struct ClosenessReport {
    HolderParams params;
    int max_n = 0;                  // generation cap used for the cross column
    std::vector<ClosenessRow> rows; // ordered by id
};

struct ReportOptions {
    /// Restrict rows to these ids (default: every node).
    std::optional<std::vector<std::string>> ids;
    /// Generation cap for cross distances; <= 0 means graph depth.
    int max_n = 0;
    /// Worker threads; 0 means hardware concurrency. Output is bit-identical
    /// for any value.
    unsigned threads = 0;
};

/// Out/in/cross closeness for every requested node. closeness = 1/distance
/// for finite positive distances and 0 for infinite ones;
/// total = out + in + cross. Rows are ordered by id and the computation is
/// deterministic regardless of thread count.
///
/// A node whose exclusion empties J' (the only member of a one-laureate
/// subset) is reported as unreachable rather than failing the whole report;
/// an empty params.subset still throws EmptySubsetError.
ClosenessReport closeness_report(const GenealogyGraph& g, const HolderParams& params,
                                 const ReportOptions& options = {});

struct KinshipEntry {
    std::string id;
    int n = 0;      // smallest generation with shared ancestors
    double h = 0.0; // H value at that generation
};

/// Every node j != id with H(id,j)(n) > 0 for some n <= max_n, tagged with
/// the smallest qualifying n. With laureate_lineage_only, keeps only nodes
/// that either hold a prize or have a prize-holding descendant. Sorted by
/// (n asc, H desc, id asc).
std::vector<KinshipEntry> kinship_neighborhood(const GenealogyGraph& g, std::string_view id,
                                               int max_n, bool laureate_lineage_only = false);

} // namespace genealogy
