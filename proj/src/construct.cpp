#include "workbench/construct.hpp"

#include <algorithm>
#include <stdexcept>

namespace workbench {

bigint CountFormula::eval(int n, int k) const {
    bigint total = 0;
    for (const Term& t : terms)
        total += t.coefficient * binom(static_cast<long long>(n) + t.n_offset,
                                       static_cast<long long>(k) + t.k_offset);
    return total;
}

namespace {

void check_fs_args(const Family& s_fam, int t, int n, int k) {
    if (n < 0 || n > SetWord::max_ground) throw std::invalid_argument("build/count: n out of range");
    if (!support(s_fam).subset_of(SetWord::range(n)))
        throw std::invalid_argument("build/count: family support outside [n]");
    if (t < 0 || k < t) throw std::invalid_argument("build/count: need k >= t >= 0");
}

}  // namespace

Family build_fs(const Family& s_fam, int t, int n, int k) {
    check_fs_args(s_fam, t, n, k);
    const SetWord supp = support(s_fam.layer(t));
    const SetWord free_part = SetWord::range(n) - supp;
    std::vector<SetWord> out;
    for (const SetWord& q : s_fam.members()) {
        if (!q.subset_of(supp)) continue;  // cannot arise as F ∩ supp
        const int need = k - q.count();
        if (need < 0 || need > free_part.count()) continue;
        for_each_subset_of_size(free_part, need, [&](const SetWord& d) { out.push_back(q | d); });
    }
    return Family(n, std::move(out), k);
}

Family build_basic(const Family& t_fam, int n, int k) {
    if (!t_fam.is_empty() && !t_fam.uniformity())
        throw std::invalid_argument("build_basic: T must be uniform");
    const int t = t_fam.is_empty() ? 0 : *t_fam.uniformity();
    return build_fs(t_fam, t, n, k);
}

Family build_fs(const LayeredCandidate& cand, int n, int k) {
    return build_fs(cand.family, cand.t, n, k);
}

CountFormula count_formula_fs(const Family& s_fam, int t) {
    const SetWord supp = support(s_fam.layer(t));
    const int supp_size = supp.count();
    std::vector<bigint> by_size(static_cast<std::size_t>(SetWord::max_ground) + 1, 0);
    for (const SetWord& q : s_fam.members())
        if (q.subset_of(supp)) by_size[static_cast<std::size_t>(q.count())] += 1;
    CountFormula f;
    for (int q = 0; q <= SetWord::max_ground; ++q)
        if (by_size[static_cast<std::size_t>(q)] != 0)
            f.terms.push_back({by_size[static_cast<std::size_t>(q)], -supp_size, -q});
    return f;
}

bigint count_fs(const Family& s_fam, int t, int n, int k) {
    check_fs_args(s_fam, t, n, k);
    return count_formula_fs(s_fam, t).eval(n, k);
}

bigint count_fs(const LayeredCandidate& cand, int n, int k) {
    return count_fs(cand.family, cand.t, n, k);
}

Family build_theorem13(int s, int n, int k) {
    if (s % 2 == 0) throw std::invalid_argument("build_theorem13: even s unsupported (extremal graph not unique)");
    if (s < 3) throw std::invalid_argument("build_theorem13: need odd s >= 3");
    if (k < 5) throw std::invalid_argument("build_theorem13: need k >= 5");
    if (n < 2 * s || n > SetWord::max_ground) throw std::invalid_argument("build_theorem13: need 2s <= n <= 128");

    SetWord clique1, clique2;
    for (int v = 0; v < s; ++v) clique1.set(v);
    for (int v = s; v < 2 * s; ++v) clique2.set(v);
    const SetWord free_part = SetWord::range(n) - clique1 - clique2;

    std::vector<SetWord> out;
    for (int a1 = 0; a1 <= std::min(s, k); ++a1) {
        if (a1 == 1) continue;
        for (int a2 = 0; a2 <= std::min(s, k - a1); ++a2) {
            if (a2 == 1 || a1 + a2 < 2) continue;
            const int need = k - a1 - a2;
            if (need > free_part.count()) continue;
            for_each_subset_of_size(clique1, a1, [&](const SetWord& p1) {
                for_each_subset_of_size(clique2, a2, [&](const SetWord& p2) {
                    for_each_subset_of_size(free_part, need,
                                            [&](const SetWord& d) { out.push_back(p1 | p2 | d); });
                });
            });
        }
    }
    return Family(n, std::move(out), k);
}

StructuralReport check_structural(const Family& F, const Family& t_fam, int t) {
    StructuralReport rep;
    const int n = F.ground_n();
    const int k = F.uniformity() ? *F.uniformity() : F.max_member_size();
    const Family basic = build_basic(t_fam, n, k);
    for (const SetWord& b : basic.members())
        if (!F.contains(b)) rep.missing.push_back(b);
    rep.containment_ok = rep.missing.empty();

    const SetWord supp = support(t_fam);
    for (const SetWord& f : F.members()) {
        bool has_t = false;
        for (const SetWord& tm : t_fam.members())
            if (tm.subset_of(f)) {
                has_t = true;
                break;
            }
        if (!has_t && (f & supp).count() < t + 1) rep.violators.push_back(f);
    }
    rep.dichotomy_ok = rep.violators.empty();
    return rep;
}

}  // namespace workbench
