#pragma once

#include <vector>

#include "workbench/binomial.hpp"
#include "workbench/family.hpp"
#include "workbench/lowdim.hpp"

namespace workbench {

/// Exact count expressed as a sum of coefficient * C(n + n_offset, k + k_offset)
/// terms, evaluated with arbitrary-precision integers.
struct CountFormula {
    struct Term {
        bigint coefficient;
        int n_offset;
        int k_offset;
    };
    std::vector<Term> terms;

    bigint eval(int n, int k) const;
};

/// { F in C([n],k) : F ∩ support(T_fam) ∈ T_fam } for a t-uniform T_fam.
/// Members are enumerated as (intersection, free completion) pairs rather
/// than by filtering C(n,k).
Family build_basic(const Family& t_fam, int n, int k);

/// F_S = { F in C([n],k) : F ∩ support(S^(t)) ∈ S } for a mixed family S whose
/// base layer is t (defaults to the smallest member size).
Family build_fs(const Family& s_fam, int t, int n, int k);
Family build_fs(const LayeredCandidate& cand, int n, int k);

CountFormula count_formula_fs(const Family& s_fam, int t);

/// |F_S| from the layered counting formula sum_i |S^(t+i)| C(n-|supp|, k-t-i);
/// equals |build_fs(S,n,k)| exactly.
bigint count_fs(const Family& s_fam, int t, int n, int k);
bigint count_fs(const LayeredCandidate& cand, int n, int k);

/// The extremal family for odd s: with G = K_s ⊔ K_s placed on {0..2s-1},
/// all F in C([n],k) with |F ∩ V(G)| >= 2 and |F ∩ V(K_i)| != 1 for both
/// cliques. Even s is unsupported.
Family build_theorem13(int s, int n, int k);

struct StructuralReport {
    bool containment_ok = false;
    std::vector<SetWord> missing;  // basic-family members absent from F
    bool dichotomy_ok = false;
    std::vector<SetWord> violators;  // F-members failing the dichotomy
    bool pass() const { return containment_ok && dichotomy_ok; }
};

/// Verifies (a) build_basic(T_fam,n,k) ⊆ F and (b) every member of F either
/// contains some T ∈ T_fam or meets support(T_fam) in at least t+1 points.
StructuralReport check_structural(const Family& F, const Family& t_fam, int t);

}  // namespace workbench
