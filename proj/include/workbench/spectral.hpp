#pragma once

#include <cstdint>
#include <vector>

#include "workbench/family.hpp"

namespace workbench {

/// An explicit vertex-labeled graph; for Johnson graphs the labels are the
/// underlying m-subsets. Adjacency lists sorted; immutable after build.
struct VertexGraph {
    std::vector<SetWord> labels;
    std::vector<std::vector<int>> adj;

    std::size_t vertex_count() const { return labels.size(); }
    std::size_t edge_count() const;
    /// Common degree, or -1 if not regular.
    int regular_degree() const;
    bool connected() const;
};

/// Johnson graph J(n,m): vertices C([n],m), edges between sets meeting in
/// m-1 elements; regular of degree m(n-m). Refuses more than 10^4 vertices.
VertexGraph johnson(int n, int m);

struct Lambda2Result {
    double lambda2 = 0.0;
    bool connected = false;
};

/// Second smallest Laplacian eigenvalue via a dense symmetric eigensolve.
/// Disconnected graphs report lambda2 = 0 with the flag cleared.
Lambda2Result lambda2(const VertexGraph& g);

/// |∂S|: edges with exactly one endpoint in S (S given as vertex indices).
std::int64_t boundary_edges(const VertexGraph& g, const std::vector<int>& s_vertices);

/// Checker for the isoperimetric inequality |∂S| >= lambda2 * |S| / 2,
/// valid for every S with |S| <= |V|/2; a false return signals a bug.
bool cheeger_check(const VertexGraph& g, const std::vector<int>& s_vertices);

struct KruskalKatonaReport {
    double x = 0.0;             // real solution of C(x,k) = |F|
    double bound = 0.0;         // C(x,h)
    std::uint64_t shadow_size = 0;
    bool holds = false;
};

/// Shadow bound checker: solves |F| = C(x,k) for real x >= k-1 by monotone
/// bisection and tests |∂_h F| >= C(x,h). Empty families hold vacuously.
KruskalKatonaReport kk_report(const Family& f, int h);
bool kk_check(const Family& f, int h);

}  // namespace workbench
