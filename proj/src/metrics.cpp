#include "overlapnet/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace overlapnet {

int HardLabeling::cluster_count() const {
    int k = 0;
    for (int l : labels) k = std::max(k, l + 1);
    return k;
}

ConfusionTable confusion(const HardLabeling& truth, const HardLabeling& found) {
    if (truth.labels.size() != found.labels.size())
        throw std::invalid_argument("confusion: node sets differ");
    const std::size_t n = truth.labels.size();
    const int k1 = truth.cluster_count();
    const int k2 = found.cluster_count();
    ConfusionTable t;
    t.counts.assign(k1, std::vector<std::size_t>(k2, 0));
    t.row_marginals.assign(k1, 0);
    t.col_marginals.assign(k2, 0);
    t.total = n;
    for (std::size_t i = 0; i < n; ++i) {
        const int a = truth.labels[i], b = found.labels[i];
        if (a < 0 || b < 0) throw std::invalid_argument("confusion: negative label");
        ++t.counts[a][b];
        ++t.row_marginals[a];
        ++t.col_marginals[b];
    }
    return t;
}

double nmi(const HardLabeling& truth, const HardLabeling& found) {
    const ConfusionTable t = confusion(truth, found);
    const double n = static_cast<double>(t.total);
    if (t.total == 0) throw std::invalid_argument("nmi: empty labelings");

    double hx = 0.0, hy = 0.0;
    for (std::size_t ni : t.row_marginals)
        if (ni > 0) hx -= ni / n * std::log(ni / n);
    for (std::size_t nj : t.col_marginals)
        if (nj > 0) hy -= nj / n * std::log(nj / n);

    if (hx <= 0.0 || hy <= 0.0) {
        // single-cluster degenerate case: 1 iff both are single clusters
        return (hx <= 0.0 && hy <= 0.0) ? 1.0 : 0.0;
    }

    double info = 0.0;
    for (std::size_t i = 0; i < t.row_marginals.size(); ++i)
        for (std::size_t j = 0; j < t.col_marginals.size(); ++j) {
            const std::size_t nij = t.counts[i][j];
            if (nij == 0) continue;
            info += nij / n *
                    std::log(nij * n /
                             (static_cast<double>(t.row_marginals[i]) * t.col_marginals[j]));
        }
    return info / std::sqrt(hx * hy);
}

namespace {

double plogp(double p) { return p > 0.0 ? -p * std::log(p) : 0.0; }

// Mean normalized conditional entropy of cover X given cover Y, communities
// as binary node-indicator variables.
double mean_normalized_conditional(const std::vector<std::vector<int>>& X,
                                   const std::vector<std::vector<int>>& Y,
                                   const std::vector<std::vector<std::size_t>>& inter,
                                   std::size_t n) {
    const double dn = static_cast<double>(n);
    double acc = 0.0;
    for (std::size_t k = 0; k < X.size(); ++k) {
        const double x = static_cast<double>(X[k].size());
        const double h_xk = plogp(x / dn) + plogp(1.0 - x / dn);
        double best = h_xk;
        for (std::size_t l = 0; l < Y.size(); ++l) {
            const double y = static_cast<double>(Y[l].size());
            const double d = static_cast<double>(inter[k][l]);
            const double c = x - d;
            const double b = y - d;
            const double a = dn - x - y + d;
            const double ha = plogp(a / dn), hb = plogp(b / dn);
            const double hc = plogp(c / dn), hd = plogp(d / dn);
            if (ha + hd >= hb + hc) {
                const double h_y = plogp(y / dn) + plogp(1.0 - y / dn);
                const double cond = ha + hb + hc + hd - h_y;
                best = std::min(best, cond);
            }
            // else: negatively correlated pair, excluded per the validity
            // constraint; the unconditional entropy stands in for it
        }
        acc += h_xk > 0.0 ? best / h_xk : 0.0;
    }
    return acc / static_cast<double>(X.size());
}

std::vector<std::vector<std::size_t>> intersections(const CommunityCover& A,
                                                    const CommunityCover& B) {
    std::vector<std::vector<int>> node_b(A.n);
    for (std::size_t l = 0; l < B.communities.size(); ++l)
        for (int v : B.communities[l]) node_b[v].push_back(static_cast<int>(l));
    std::vector<std::vector<std::size_t>> inter(A.communities.size(),
                                                std::vector<std::size_t>(B.communities.size(), 0));
    for (std::size_t k = 0; k < A.communities.size(); ++k)
        for (int v : A.communities[k])
            for (int l : node_b[v]) ++inter[k][l];
    return inter;
}

} // namespace

double gnmi(const CommunityCover& truth, const CommunityCover& found) {
    if (truth.n != found.n) throw std::invalid_argument("gnmi: node universes differ");
    if (truth.communities.empty() || found.communities.empty())
        throw std::invalid_argument("gnmi: empty cover");
    const auto inter = intersections(truth, found);
    std::vector<std::vector<std::size_t>> inter_t(found.communities.size(),
                                                  std::vector<std::size_t>(truth.communities.size()));
    for (std::size_t k = 0; k < inter.size(); ++k)
        for (std::size_t l = 0; l < inter[k].size(); ++l) inter_t[l][k] = inter[k][l];

    const double hxy = mean_normalized_conditional(truth.communities, found.communities, inter, truth.n);
    const double hyx = mean_normalized_conditional(found.communities, truth.communities, inter_t, truth.n);
    return 1.0 - 0.5 * (hxy + hyx);
}

CommunityCover cover_from_hard(const HardLabeling& labels) {
    CommunityCover cover;
    cover.n = labels.labels.size();
    cover.communities.assign(labels.cluster_count(), {});
    for (std::size_t i = 0; i < cover.n; ++i)
        cover.communities[labels.labels[i]].push_back(static_cast<int>(i));
    std::erase_if(cover.communities, [](const std::vector<int>& c) { return c.empty(); });
    return cover;
}

HardLabeling hard_from_cover(const CommunityCover& cover) {
    HardLabeling labels;
    labels.labels.assign(cover.n, -1);
    for (std::size_t t = 0; t < cover.communities.size(); ++t)
        for (int v : cover.communities[t]) {
            if (labels.labels[v] != -1)
                throw std::invalid_argument("hard_from_cover: overlapping cover");
            labels.labels[v] = static_cast<int>(t);
        }
    for (int l : labels.labels)
        if (l == -1) throw std::invalid_argument("hard_from_cover: cover has outliers");
    return labels;
}

HardLabeling harden(const CommunityCover& cover, const SoftMembership& soft) {
    if (cover.n != soft.node_count()) throw std::invalid_argument("harden: size mismatch");
    if (cover.communities.empty()) throw std::invalid_argument("harden: empty cover");

    auto column_of = [&](std::size_t t) -> std::size_t {
        if (!cover.source_columns.empty()) return static_cast<std::size_t>(cover.source_columns[t]);
        return t;
    };

    std::vector<std::vector<int>> memberships(cover.n);
    for (std::size_t t = 0; t < cover.communities.size(); ++t)
        for (int v : cover.communities[t]) memberships[v].push_back(static_cast<int>(t));

    HardLabeling labels;
    labels.labels.assign(cover.n, 0);
    for (std::size_t i = 0; i < cover.n; ++i) {
        int best = -1;
        double best_strength = -1.0;
        if (!memberships[i].empty()) {
            for (int t : memberships[i]) {
                const double s = soft.values(i, column_of(t));
                if (s > best_strength) {
                    best_strength = s;
                    best = t;
                }
            }
        } else {
            // outlier: strongest retained community
            for (std::size_t t = 0; t < cover.communities.size(); ++t) {
                const double s = soft.values(i, column_of(t));
                if (s > best_strength) {
                    best_strength = s;
                    best = static_cast<int>(t);
                }
            }
        }
        labels.labels[i] = best;
    }
    return labels;
}

} // namespace overlapnet
