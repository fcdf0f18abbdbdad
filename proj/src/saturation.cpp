#include "saturation.hpp"

#include <stdexcept>
#include <string>

#include "errors.hpp"

namespace ksat {

namespace {

void check_parameters(const Graph& g, int r) {
    if (r < 2) throw std::invalid_argument("clique parameter r must be at least 2");
    if (g.order() < r + 1)
        throw std::invalid_argument("saturation needs n >= r+1, got n=" +
                                    std::to_string(g.order()) + " r=" + std::to_string(r));
}

}  // namespace

SaturationCertificate check_saturation(const Graph& g, int r) {
    check_parameters(g, r);
    SaturationCertificate cert;
    if (auto hit = find_clique(g, r + 1)) {
        cert.verdict = Verdict::NotFree;
        cert.clique = std::move(*hit);
        return cert;
    }
    const int n = g.order();
    for (int y = 1; y < n; ++y) {
        for (int x = 0; x < y; ++x) {
            if (g.has_edge(x, y)) continue;
            auto witness = find_clique_in(g, g.neighbors(x) & g.neighbors(y), r - 1);
            if (!witness) {
                cert.verdict = Verdict::NotMaximal;
                cert.non_edge = {x, y};
                cert.witnesses.clear();
                return cert;
            }
            cert.witnesses.push_back({x, y, std::move(*witness)});
        }
    }
    cert.verdict = Verdict::Saturated;
    return cert;
}

bool is_saturated(const Graph& g, int r) {
    check_parameters(g, r);
    if (contains_clique(g, r + 1)) return false;
    const int n = g.order();
    for (int y = 1; y < n; ++y)
        for (int x = 0; x < y; ++x)
            if (!g.has_edge(x, y) &&
                !contains_clique_in(g, g.row(x) & g.row(y), r - 1))
                return false;
    return true;
}

long apex_pair_count(const Graph& g, int v, int r) {
    if (r < 2) throw std::invalid_argument("clique parameter r must be at least 2");
    const std::uint64_t nbhd = g.neighbors(v);
    long count = 0;
    for_each_bit(nbhd, [&](int x) {
        for_each_bit(nbhd & ~(bit(x) | (bit(x) - 1)), [&](int y) {
            if (g.row(x) & bit(y)) return;
            if (contains_clique_in(g, g.row(x) & g.row(y) & nbhd, r - 2)) ++count;
        });
    });
    return count;
}

ApexSumReport apex_sum_check(const Graph& g, int r) {
    auto cert = check_saturation(g, r);
    if (cert.verdict != Verdict::Saturated)
        throw NotSaturatedError("apex sum bound is only defined for saturated graphs");

    ApexSumReport report;
    const int n = g.order();
    report.lhs = static_cast<long>(r - 1) * g.non_edge_count();
    for (int v = 0; v < n; ++v) report.rhs += apex_pair_count(g, v, r);

    bool first = true;
    for (auto [x, y] : g.non_edges()) {
        long apexes = 0;
        std::uint64_t common = g.row(x) & g.row(y);
        for_each_bit(common, [&](int v) {
            if (contains_clique_in(g, common & g.row(v), r - 2)) ++apexes;
        });
        report.per_non_edge.push_back({x, y, apexes});
        if (first || apexes < report.min_apexes) report.min_apexes = apexes;
        first = false;
    }
    report.holds = report.lhs <= report.rhs;
    return report;
}

ApexCapReport apex_cap_check(const Graph& g, int v, int r) {
    ApexCapReport report;
    report.count = apex_pair_count(g, v, r);
    report.cap = choose2(static_cast<long>(g.degree(v)) - r + 2);
    report.holds = report.count <= report.cap;
    return report;
}

NeighborhoodPairSplit neighborhood_pair_split(const Graph& g, int v, int r) {
    if (r < 2) throw std::invalid_argument("clique parameter r must be at least 2");
    NeighborhoodPairSplit split;
    split.v = v;
    const std::uint64_t nbhd = g.neighbors(v);
    if (popcount64(nbhd) < 2) return split;
    Graph local = g.induced(nbhd);
    const int k = local.order();
    for (int x = 0; x < k; ++x) {
        for (int y = x + 1; y < k; ++y) {
            if (local.has_edge(x, y)) {
                ++split.adjacent;
                continue;
            }
            Graph grown = local;
            grown.add_edge(x, y);
            if (contains_clique(grown, r))
                ++split.completable;
            else
                ++split.inert;
        }
    }
    return split;
}

}  // namespace ksat
