#pragma once

#include <cstdint>
#include <vector>

#include "workbench/family.hpp"
#include "workbench/sunflower.hpp"

namespace workbench {

struct Budget {
    std::uint64_t max_nodes = 100000000;
    double max_seconds = 600.0;
};

/// Exact maximization of |F| over k-uniform families on [universe_n] that are
/// admissible for (s, cc).
struct SearchProblem {
    int universe_n = 0;
    int uniformity_k = 0;
    int s = 0;
    CoreConstraint cc = CoreConstraint::any();
    Budget budget;
    bool isomorph_reject = true;  // disable only for cross-checking on tiny instances
    int threads = 0;              // 0 = hardware concurrency
};

struct SearchResult {
    enum class Status { proved, lower_bound_only };

    int best_size = 0;
    /// Pairwise non-isomorphic witnesses of best_size, canonical and sorted,
    /// at most 64; witness_total is the exact number of isomorphism classes
    /// (meaningful when the search ran with isomorph rejection and completed).
    std::vector<Family> witnesses;
    std::uint64_t witness_total = 0;
    Status status = Status::lower_bound_only;
    long long upper_bound = 0;
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    int universe_n = 0;  // universe of the final (deciding) run
};

struct GraphCaseResult {
    SearchResult result;
    /// Degree sequence over non-isolated vertices, ascending, one per witness.
    std::vector<std::vector<int>> degree_sequences;
};

/// Orderly generation over the fixed universe: members are added in
/// increasing bitmask order only, the admissibility of each extension is
/// checked incrementally (only sunflowers through the newest member), and a
/// node survives only if it is the lexicographically minimal representative
/// of its isomorphism class. Exhaustive unless the budget is hit.
SearchResult max_admissible(const SearchProblem& p);

/// Exact phi(s,t): maximum size of a t-uniform family with no s-sunflower
/// (any core). The universe is grown until the support bound t*(best+1)
/// certifies that no larger family exists on any ground set; status is
/// `proved` only when that certificate holds and the search completed.
SearchResult phi(int s, int t, const Budget& budget = {}, int threads = 0);

/// The t=2 case with witness degree sequences for comparison against the
/// known characterization of extremal graphs.
GraphCaseResult max_graph_case(int s, const Budget& budget = {}, int threads = 0);

/// Exact maximum of |F|, F ⊆ C([n],k), avoiding s-sunflowers with core of
/// size exactly t-1; witnesses up to the symmetric group action on [n].
SearchResult duke_erdos_oracle(int n, int k, int s, int t, const Budget& budget = {}, int threads = 0);

/// t!(s-1)^t, clamped to long long.
long long erdos_rado_upper(int s, int t);

/// Exact extremal edge count for graphs with no s-matching and no degree-s
/// vertex: s(s-1) for odd s, (s-1)^2+(s-2)/2 for even s.
long long abbott_hanson_sauer(int s);

}  // namespace workbench
