#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "workbench/binomial.hpp"
#include "workbench/family.hpp"
#include "workbench/search.hpp"
#include "workbench/sunflower.hpp"

namespace workbench {

/// A candidate for the low-dimensional problem: a mixed-uniformity family S
/// attached to parameters (s,t) and the proved value phi(s,t). The defining
/// properties are
///   1. S has no sunflower with s petals and core of size at most t-1;
///   2. every member has size in [t, T] and lies inside support(S^(t)),
///      where T = t*phi(s,t).
/// Construction does not enforce them (check_properties reports violations);
/// evaluation of the phi-tilde vector requires property 2.
struct LayeredCandidate {
    Family family;
    int s = 0;
    int t = 0;
    int phi_st = 0;

    LayeredCandidate(Family f, int s_, int t_, int phi_st_);

    int T() const { return t * phi_st; }

    /// Property-2 validation; writes the first offending member when given.
    bool property2_ok(SetWord* offender = nullptr) const;
};

/// Exact integer vector (phitilde_0,...,phitilde_{T-t}).
using PhiTildeVector = std::vector<bigint>;

/// phitilde_0 = |S^(t)|,
/// phitilde_i = |S^(t+i)| + sum_{j<i} |S^(t+j)| * C(T - |support S^(t)|, i-j),
/// with C(m,a) = 0 for m < a. Requires property 2.
PhiTildeVector phitilde(const LayeredCandidate& cand);

/// Independent enumeration count of { G in C([T], t+i) : G ∩ support S^(t) ∈ S }
/// after relabeling the support onto an initial segment of [T]. Equals
/// phitilde(cand)[i]; computed by explicit enumeration, not the formula.
bigint gis_count(const LayeredCandidate& cand, int i);

struct SStarResult {
    PhiTildeVector phi_tilde;
    std::vector<LayeredCandidate> optima;  // canonical, pairwise non-isomorphic
    std::uint64_t optima_total = 0;
    bool count_truncated = false;
    /// Cleared when the budget ran out mid-stage: the result is then only the
    /// best prefix completed, not a certified lexicographic maximum.
    bool optimal = true;
};

/// Stage-wise lexicographic maximization of the phi-tilde vector over
/// families satisfying properties 1-2. Stage 0 takes every isomorphism class
/// of t-layers attaining phi(s,t); stage i extends every retained class by a
/// maximum admissible set of (t+i)-subsets of its support, keeping all optima
/// since later stages may separate earlier ties. Requires phi(s,t) proved.
SStarResult solve_sstar(int s, int t, const Budget& budget = {}, int threads = 0,
                        const SearchResult* phi_precomputed = nullptr);

struct PropertyReport {
    bool property1 = false;
    std::optional<SunflowerCert> violation1;
    bool property2 = false;
    std::optional<SetWord> violation2;
    enum class P3 { consistent, inconsistent, not_checked };
    P3 property3 = P3::not_checked;
};

/// Per-property pass/fail with a violating certificate on failure. Property 3
/// is compared against a solved optimum vector when one is supplied.
PropertyReport check_properties(const LayeredCandidate& cand,
                                const PhiTildeVector* solved_optimum = nullptr);

}  // namespace workbench
