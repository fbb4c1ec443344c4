#include "genealogy/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace genealogy {

namespace {

/// Laureate-to-laureate closure lists, positions aligned with g.laureates().
struct Relatives {
    std::vector<std::vector<std::uint32_t>> ancestors;   // positions of laureate ancestors
    std::vector<std::vector<std::uint32_t>> descendants; // positions of laureate descendants
};

Relatives collect_relatives(const GenealogyGraph& g) {
    const auto& laureates = g.laureates();
    Relatives r;
    r.ancestors.resize(laureates.size());
    r.descendants.resize(laureates.size());
    for (std::uint32_t p = 0; p < laureates.size(); ++p) {
        const auto dist = g.bfs_distances(laureates[p], Direction::FromAncestors);
        for (std::uint32_t q = 0; q < laureates.size(); ++q) {
            if (q == p) continue;
            if (dist[laureates[q]] != kNoPath) {
                r.ancestors[p].push_back(q);
                r.descendants[q].push_back(p);
            }
        }
    }
    return r;
}

MeanSe mean_se(const std::vector<double>& values) {
    MeanSe out;
    const std::size_t n = values.size();
    out.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    if (n >= 2) {
        double ss = 0;
        for (const double v : values) ss += (v - out.mean) * (v - out.mean);
        out.se = std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
    }
    return out;
}

/// Laureate positions grouped by advisor node; basis of the "peer" relation
/// (H(i,j)(1) > 0 means a shared advisor).
std::vector<std::vector<std::uint32_t>> peers_of(const GenealogyGraph& g) {
    const auto& laureates = g.laureates();
    std::map<NodeIndex, std::vector<std::uint32_t>> by_advisor;
    for (std::uint32_t p = 0; p < laureates.size(); ++p)
        for (const NodeIndex a : g.advisors_of(laureates[p])) by_advisor[a].push_back(p);
    std::vector<std::vector<std::uint32_t>> peers(laureates.size());
    for (const auto& [advisor, students] : by_advisor) {
        if (students.size() < 2) continue;
        for (const std::uint32_t p : students)
            for (const std::uint32_t q : students)
                if (q != p) peers[p].push_back(q);
    }
    for (auto& list : peers) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return peers;
}

} // namespace

PairCounts laureate_pair_counts(const GenealogyGraph& g) {
    PairCounts out;
    const auto& laureates = g.laureates();
    for (const NodeIndex a : laureates)
        for (const NodeIndex s : g.students_of(a))
            if (g.is_laureate(s)) {
                ++out.direct;
                if (g.field_mask(a) & g.field_mask(s)) ++out.direct_same_field;
            }
    const Relatives rel = collect_relatives(g);
    for (std::uint32_t p = 0; p < laureates.size(); ++p)
        for (const std::uint32_t q : rel.ancestors[p]) {
            ++out.transitive;
            if (g.field_mask(laureates[p]) & g.field_mask(laureates[q])) ++out.transitive_same_field;
        }
    return out;
}

CrossTable cross_table(const GenealogyGraph& g, TableKind kind) {
    CrossTable table;
    table.kind = kind;
    const auto& laureates = g.laureates();
    std::vector<char> has_junior(laureates.size(), 0); // laureate student/descendant exists

    auto add_pair = [&](NodeIndex senior, NodeIndex junior) {
        for (int fa = 0; fa < kFieldCount; ++fa) {
            if (!(g.field_mask(senior) >> fa & 1)) continue;
            for (int fs = 0; fs < kFieldCount; ++fs)
                if (g.field_mask(junior) >> fs & 1) ++table.cells[fa][fs];
        }
    };

    if (kind == TableKind::Proximate) {
        for (std::uint32_t p = 0; p < laureates.size(); ++p)
            for (const NodeIndex s : g.students_of(laureates[p]))
                if (g.is_laureate(s)) {
                    add_pair(laureates[p], s);
                    has_junior[p] = 1;
                }
    } else {
        // ancestor-first route: walk up from every laureate
        const Relatives rel = collect_relatives(g);
        for (std::uint32_t p = 0; p < laureates.size(); ++p)
            for (const std::uint32_t q : rel.ancestors[p]) {
                add_pair(laureates[q], laureates[p]);
                has_junior[q] = 1;
            }
    }

    for (std::uint32_t p = 0; p < laureates.size(); ++p)
        for (int f = 0; f < kFieldCount; ++f)
            if (g.field_mask(laureates[p]) >> f & 1) {
                if (has_junior[p])
                    ++table.any[f];
                else
                    ++table.none[f];
            }
    return table;
}

std::array<std::array<std::size_t, kFieldCount>, kFieldCount>
distal_pair_matrix(const GenealogyGraph& g, bool descendant_first) {
    std::array<std::array<std::size_t, kFieldCount>, kFieldCount> cells{};
    const auto& laureates = g.laureates();
    auto add_pair = [&](NodeIndex senior, NodeIndex junior) {
        for (int fa = 0; fa < kFieldCount; ++fa) {
            if (!(g.field_mask(senior) >> fa & 1)) continue;
            for (int fs = 0; fs < kFieldCount; ++fs)
                if (g.field_mask(junior) >> fs & 1) ++cells[fa][fs];
        }
    };
    for (const NodeIndex l : laureates) {
        const auto dist = g.bfs_distances(
            l, descendant_first ? Direction::ToDescendants : Direction::FromAncestors);
        for (const NodeIndex other : laureates) {
            if (other == l || dist[other] == kNoPath) continue;
            if (descendant_first)
                add_pair(l, other); // `other` descends from l
            else
                add_pair(other, l); // `other` is an ancestor of l
        }
    }
    return cells;
}

AncestrySummary ancestry_summary(const GenealogyGraph& g) {
    const auto& laureates = g.laureates();
    if (laureates.empty()) throw NoLaureatesError();
    const Relatives rel = collect_relatives(g);

    // per laureate: relative counts, and counts holding a prize in each field
    const std::size_t n = laureates.size();
    std::vector<double> anc_total(n, 0), desc_total(n, 0);
    std::vector<std::array<double, kFieldCount>> anc_field(n), desc_field(n);
    for (auto& a : anc_field) a.fill(0);
    for (auto& a : desc_field) a.fill(0);
    for (std::size_t p = 0; p < n; ++p) {
        anc_total[p] = static_cast<double>(rel.ancestors[p].size());
        desc_total[p] = static_cast<double>(rel.descendants[p].size());
        for (const std::uint32_t q : rel.ancestors[p])
            for (int f = 0; f < kFieldCount; ++f)
                if (g.field_mask(laureates[q]) >> f & 1) anc_field[p][f] += 1;
        for (const std::uint32_t q : rel.descendants[p])
            for (int f = 0; f < kFieldCount; ++f)
                if (g.field_mask(laureates[q]) >> f & 1) desc_field[p][f] += 1;
    }

    AncestrySummary summary;
    for (std::size_t scope = 0; scope < AncestrySummary::kScopes; ++scope) {
        const int f = static_cast<int>(scope) - 1; // -1 == "any"
        std::vector<double> totals_a, totals_d, own_a, own_d, frac_a, frac_d;
        std::size_t group = 0;
        for (std::size_t p = 0; p < n; ++p) {
            if (f >= 0 && !(g.field_mask(laureates[p]) >> f & 1)) continue;
            ++group;
            totals_a.push_back(anc_total[p]);
            totals_d.push_back(desc_total[p]);
            if (f >= 0) {
                own_a.push_back(anc_field[p][f]);
                own_d.push_back(desc_field[p][f]);
                if (anc_total[p] > 0) frac_a.push_back((anc_total[p] - anc_field[p][f]) / anc_total[p]);
                if (desc_total[p] > 0)
                    frac_d.push_back((desc_total[p] - desc_field[p][f]) / desc_total[p]);
            }
        }
        summary.group_size[scope] = group;
        if (group == 0) continue;
        summary.ancestors[scope] = mean_se(totals_a);
        summary.descendants[scope] = mean_se(totals_d);
        if (f >= 0) {
            summary.ancestors_own_field[scope] = mean_se(own_a);
            summary.descendants_own_field[scope] = mean_se(own_d);
            if (!frac_a.empty()) summary.frac_ancestors_other_field[scope] = mean_se(frac_a);
            if (!frac_d.empty()) summary.frac_descendants_other_field[scope] = mean_se(frac_d);
        }
    }
    return summary;
}

WelchResult welch_t(std::span<const double> group_a, std::span<const double> group_b) {
    if (group_a.size() < 2 || group_b.size() < 2)
        throw DegenerateGroupError("welch_t requires both groups of size >= 2");
    auto variance = [](std::span<const double> xs, double mean) {
        double ss = 0;
        for (const double x : xs) ss += (x - mean) * (x - mean);
        return ss / static_cast<double>(xs.size() - 1);
    };
    const double na = static_cast<double>(group_a.size());
    const double nb = static_cast<double>(group_b.size());
    const double ma = std::accumulate(group_a.begin(), group_a.end(), 0.0) / na;
    const double mb = std::accumulate(group_b.begin(), group_b.end(), 0.0) / nb;
    const double va = variance(group_a, ma);
    const double vb = variance(group_b, mb);
    if (va == 0 && vb == 0) throw DegenerateGroupError("welch_t requires nonzero variance in at least one group");
    const double sa = va / na;
    const double sb = vb / nb;
    WelchResult out;
    out.t = (ma - mb) / std::sqrt(sa + sb);
    out.dof = (sa + sb) * (sa + sb) / (sa * sa / (na - 1) + sb * sb / (nb - 1));
    return out;
}

std::string_view tie_class_name(TieClass c) {
    switch (c) {
    case TieClass::NoTies: return "no_ties";
    case TieClass::PeersOnly: return "peers_only";
    case TieClass::HasLaureateAncestor: return "has_laureate_ancestor";
    case TieClass::Unconnected: return "unconnected";
    }
    return "";
}

std::map<std::string, TieClass> tie_classification(const GenealogyGraph& g) {
    const auto& laureates = g.laureates();
    const Relatives rel = collect_relatives(g);
    const auto peers = peers_of(g);

    std::vector<std::size_t> comp_laureates(g.component_count(), 0);
    for (const NodeIndex l : laureates) ++comp_laureates[g.component_of(l)];

    std::map<std::string, TieClass> out;
    for (std::uint32_t p = 0; p < laureates.size(); ++p) {
        TieClass cls;
        if (!rel.ancestors[p].empty())
            cls = TieClass::HasLaureateAncestor;
        else if (!peers[p].empty())
            cls = TieClass::PeersOnly;
        else if (comp_laureates[g.component_of(laureates[p])] <= 1)
            cls = TieClass::Unconnected;
        else
            cls = TieClass::NoTies;
        out.emplace(g.id_of(laureates[p]), cls);
    }
    return out;
}

std::string_view cohort_metric_name(CohortMetric m) {
    switch (m) {
    case CohortMetric::AncPerLaureate: return "anc_per_laureate";
    case CohortMetric::DescPerLaureate: return "desc_per_laureate";
    case CohortMetric::FracAncOtherField: return "frac_anc_other_field";
    case CohortMetric::FracDescOtherField: return "frac_desc_other_field";
    case CohortMetric::FracNoAncestry: return "frac_no_ancestry";
    case CohortMetric::FracNoTies: return "frac_no_ties";
    }
    return "";
}

std::optional<CohortMetric> cohort_metric_from_name(std::string_view name) {
    for (const CohortMetric m :
         {CohortMetric::AncPerLaureate, CohortMetric::DescPerLaureate,
          CohortMetric::FracAncOtherField, CohortMetric::FracDescOtherField,
          CohortMetric::FracNoAncestry, CohortMetric::FracNoTies})
        if (name == cohort_metric_name(m)) return m;
    return std::nullopt;
}

double ols_slope(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2) return 0.0;
    const double n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double num = 0, den = 0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        num += (x[k] - mx) * (y[k] - my);
        den += (x[k] - mx) * (x[k] - mx);
    }
    return den == 0 ? 0.0 : num / den;
}

CohortSeries cohort_series(const GenealogyGraph& g, CohortMetric metric, bool prior_only) {
    const auto& laureates = g.laureates();
    const Relatives rel = collect_relatives(g);
    const auto peers = peers_of(g);

    struct Membership {
        std::uint32_t pos; // laureate position
        int field;
    };
    std::map<int, std::vector<Membership>> cohorts; // award year -> members
    for (std::uint32_t p = 0; p < laureates.size(); ++p)
        for (const Prize& prize : g.scholar_at(laureates[p]).prizes)
            cohorts[prize.year].push_back({p, static_cast<int>(prize.field)});

    const bool use_desc =
        metric == CohortMetric::DescPerLaureate || metric == CohortMetric::FracDescOtherField;

    CohortSeries series;
    series.metric = metric;
    series.prior_only = prior_only;
    for (const auto& [year, members] : cohorts) {
        const int y = year;
        auto counted = [&](std::uint32_t relative_pos) {
            return !prior_only || g.earliest_prize_year(laureates[relative_pos]) < y;
        };
        double value = 0;
        bool emit = true;
        switch (metric) {
        case CohortMetric::AncPerLaureate:
        case CohortMetric::DescPerLaureate: {
            std::size_t total = 0;
            for (const Membership& m : members)
                for (const std::uint32_t q : use_desc ? rel.descendants[m.pos] : rel.ancestors[m.pos])
                    if (counted(q)) ++total;
            value = static_cast<double>(total) / static_cast<double>(members.size());
            break;
        }
        case CohortMetric::FracAncOtherField:
        case CohortMetric::FracDescOtherField: {
            std::size_t total = 0, other = 0;
            for (const Membership& m : members)
                for (const std::uint32_t q : use_desc ? rel.descendants[m.pos] : rel.ancestors[m.pos]) {
                    if (!counted(q)) continue;
                    ++total;
                    if (!(g.field_mask(laureates[q]) >> m.field & 1)) ++other;
                }
            if (total == 0)
                emit = false; // no counted relatives this year, fraction undefined
            else
                value = static_cast<double>(other) / static_cast<double>(total);
            break;
        }
        case CohortMetric::FracNoAncestry: {
            std::size_t bare = 0;
            for (const Membership& m : members) {
                bool any = false;
                for (const std::uint32_t q : rel.ancestors[m.pos])
                    if (counted(q)) { any = true; break; }
                if (!any) ++bare;
            }
            value = static_cast<double>(bare) / static_cast<double>(members.size());
            break;
        }
        case CohortMetric::FracNoTies: {
            std::size_t bare = 0;
            for (const Membership& m : members) {
                bool any = false;
                for (const std::uint32_t q : rel.ancestors[m.pos])
                    if (counted(q)) { any = true; break; }
                if (!any)
                    for (const std::uint32_t q : peers[m.pos])
                        if (counted(q)) { any = true; break; }
                if (!any) ++bare;
            }
            value = static_cast<double>(bare) / static_cast<double>(members.size());
            break;
        }
        }
        if (emit) series.points.push_back({y, value, members.size()});
    }

    std::vector<double> xs, ys;
    for (const CohortPoint& p : series.points) {
        xs.push_back(static_cast<double>(p.year));
        ys.push_back(p.value);
    }
    series.trend_slope = ols_slope(xs, ys);
    return series;
}

} // namespace genealogy
