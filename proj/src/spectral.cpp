#include "workbench/spectral.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <stdexcept>

#include "workbench/binomial.hpp"
#include "workbench/sunflower.hpp"

namespace workbench {

std::size_t VertexGraph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& nb : adj) twice += nb.size();
    return twice / 2;
}

int VertexGraph::regular_degree() const {
    if (adj.empty()) return -1;
    const std::size_t d = adj.front().size();
    for (const auto& nb : adj)
        if (nb.size() != d) return -1;
    return static_cast<int>(d);
}

bool VertexGraph::connected() const {
    const std::size_t n = vertex_count();
    if (n == 0) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == n;
}

VertexGraph johnson(int n, int m) {
    if (m < 1 || m > n || n > SetWord::max_ground) throw std::invalid_argument("johnson: need 1 <= m <= n <= 128");
    if (binom(n, m) > bigint(10000)) throw budget_error("johnson: more than 10^4 vertices");
    VertexGraph g;
    g.labels = subsets_of_size(SetWord::range(n), m);
    const std::size_t nv = g.labels.size();
    g.adj.assign(nv, {});
    for (std::size_t i = 0; i < nv; ++i)
        for (std::size_t j = i + 1; j < nv; ++j)
            if ((g.labels[i] & g.labels[j]).count() == m - 1) {
                g.adj[i].push_back(static_cast<int>(j));
                g.adj[j].push_back(static_cast<int>(i));
            }
    for (auto& nb : g.adj) std::sort(nb.begin(), nb.end());
    return g;
}

Lambda2Result lambda2(const VertexGraph& g) {
    const std::size_t nv = g.vertex_count();
    if (nv < 2) return {0.0, true};
    if (!g.connected()) return {0.0, false};
    Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(nv), static_cast<Eigen::Index>(nv));
    for (std::size_t v = 0; v < nv; ++v) {
        lap(static_cast<Eigen::Index>(v), static_cast<Eigen::Index>(v)) =
            static_cast<double>(g.adj[v].size());
        for (int u : g.adj[v]) lap(static_cast<Eigen::Index>(v), u) = -1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(lap, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw std::runtime_error("lambda2: eigensolve failed");
    return {solver.eigenvalues()(1), true};
}

std::int64_t boundary_edges(const VertexGraph& g, const std::vector<int>& s_vertices) {
    std::vector<char> in_s(g.vertex_count(), 0);
    for (int v : s_vertices) {
        if (v < 0 || v >= static_cast<int>(g.vertex_count()))
            throw std::invalid_argument("boundary_edges: vertex index out of range");
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    std::int64_t twice = 0;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        for (int u : g.adj[v])
            if (in_s[v] != in_s[static_cast<std::size_t>(u)]) ++twice;
    return twice / 2;
}

bool cheeger_check(const VertexGraph& g, const std::vector<int>& s_vertices) {
    std::vector<int> dedup = s_vertices;
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
    if (2 * dedup.size() > g.vertex_count())
        throw std::invalid_argument("cheeger_check: |S| must be at most |V|/2");
    const double lam = lambda2(g).lambda2;
    const double lhs = static_cast<double>(boundary_edges(g, dedup));
    const double rhs = lam * static_cast<double>(dedup.size()) / 2.0;
    return lhs >= rhs - 1e-9;
}

KruskalKatonaReport kk_report(const Family& f, int h) {
    KruskalKatonaReport rep;
    if (f.is_empty()) {
        rep.holds = true;
        return rep;
    }
    if (!f.uniformity()) throw std::invalid_argument("kk_check: family must be uniform");
    const int k = *f.uniformity();
    if (h < 1 || h > k) throw std::invalid_argument("kk_check: need 1 <= h <= k");
    const double size = static_cast<double>(f.size());

    double lo = k - 1;
    double hi = static_cast<double>(k + f.size());
    while (binom_real(hi, k) < size) hi *= 2;
    for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
        const double mid = (lo + hi) / 2;
        if (binom_real(mid, k) < size)
            lo = mid;
        else
            hi = mid;
    }
    rep.x = (lo + hi) / 2;
    rep.bound = binom_real(rep.x, h);
    rep.shadow_size = shadow(f, h).size();
    rep.holds = static_cast<double>(rep.shadow_size) >= rep.bound - 1e-6;
    return rep;
}

bool kk_check(const Family& f, int h) { return kk_report(f, h).holds; }

}  // namespace workbench
