#include "workbench/lowdim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "workbench/canonical.hpp"

namespace workbench {

namespace {

constexpr std::size_t kOptimaCap = 64;
constexpr std::size_t kWorkingCap = 256;

/// Layer size |S^(t+i)| for i = 0..T-t.
std::vector<bigint> layer_counts(const LayeredCandidate& cand) {
    std::vector<bigint> counts(static_cast<std::size_t>(cand.T() - cand.t + 1), 0);
    for (const SetWord& w : cand.family.members()) {
        const int i = w.count() - cand.t;
        counts[static_cast<std::size_t>(i)] += 1;
    }
    return counts;
}

void require_property2(const LayeredCandidate& cand) {
    SetWord offender;
    if (!cand.property2_ok(&offender))
        throw std::invalid_argument("property-2 violation: member " + offender.to_string() +
                                    " is outside [t,T]-sized subsets of support(S^(t))");
}

}  // namespace

LayeredCandidate::LayeredCandidate(Family f, int s_, int t_, int phi_st_)
    : family(std::move(f)), s(s_), t(t_), phi_st(phi_st_) {
    if (s < 2 || t < 1 || phi_st < 1) throw std::invalid_argument("LayeredCandidate: need s>=2, t>=1, phi>=1");
}

bool LayeredCandidate::property2_ok(SetWord* offender) const {
    const SetWord supp = support(family.layer(t));
    for (const SetWord& w : family.members()) {
        const int c = w.count();
        if (c < t || c > T() || !w.subset_of(supp)) {
            if (offender) *offender = w;
            return false;
        }
    }
    return true;
}

PhiTildeVector phitilde(const LayeredCandidate& cand) {
    require_property2(cand);
    const std::vector<bigint> layers = layer_counts(cand);
    const int supp_size = support(cand.family.layer(cand.t)).count();
    const int slack = cand.T() - supp_size;
    PhiTildeVector out(layers.size());
    out[0] = layers[0];
    for (std::size_t i = 1; i < layers.size(); ++i) {
        bigint v = layers[i];
        for (std::size_t j = 0; j < i; ++j) v += layers[j] * binom(slack, static_cast<long long>(i - j));
        out[i] = v;
    }
    return out;
}

bigint gis_count(const LayeredCandidate& cand, int i) {
    require_property2(cand);
    if (i < 0 || i > cand.T() - cand.t) throw std::invalid_argument("gis_count: i outside [0, T-t]");
    const int T = cand.T();
    if (binom(T, cand.t + i) > bigint(50000000)) throw budget_error("gis_count: C(T,t+i) too large to enumerate");

    // relabel support(S^(t)) onto an initial segment of [T]
    const std::vector<int> verts = support(cand.family.layer(cand.t)).elements();
    std::vector<SetWord> members;
    for (const SetWord& w : cand.family.members()) {
        SetWord m;
        for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi)
            if (w.test(verts[static_cast<std::size_t>(vi)])) m.set(vi);
        members.push_back(m);
    }
    std::sort(members.begin(), members.end());
    SetWord supp = SetWord::range(static_cast<int>(verts.size()));

    bigint count = 0;
    for_each_subset_of_size(SetWord::range(T), cand.t + i, [&](const SetWord& g) {
        if (std::binary_search(members.begin(), members.end(), g & supp)) ++count;
    });
    return count;
}

namespace {

/// All maximum admissible extension sets Q ⊆ C(support, t+i) for a fixed
/// prefix, by exhaustive backtracking over candidates in ascending order.
struct ExtensionSearch {
    const LayeredCandidate* cand = nullptr;
    std::vector<SetWord> candidates;
    std::vector<SetWord> combined;  // prefix members + chosen Q
    int best = -1;
    std::vector<std::vector<SetWord>> optima;
    bool truncated = false;
    bool aborted = false;
    std::atomic<std::uint64_t>* nodes = nullptr;
    std::uint64_t max_nodes = 0;
    std::chrono::steady_clock::time_point deadline;

    void run() {
        combined = cand->family.members();
        std::vector<SetWord> chosen;
        rec(0, chosen);
    }

    void rec(std::size_t idx, std::vector<SetWord>& chosen) {
        if (nodes) {
            const std::uint64_t total = nodes->fetch_add(1, std::memory_order_relaxed) + 1;
            if (total > max_nodes || ((total & 0x3FF) == 0 && std::chrono::steady_clock::now() > deadline)) {
                aborted = true;
                return;
            }
        }
        const int size = static_cast<int>(chosen.size());
        if (size > best) {
            best = size;
            optima.clear();
        }
        if (size == best) {
            if (optima.size() < kWorkingCap)
                optima.push_back(chosen);
            else
                truncated = true;
        }
        for (std::size_t j = idx; j < candidates.size(); ++j) {
            if (size + static_cast<int>(candidates.size() - j) < best) break;
            const SetWord& q = candidates[j];
            if (creates_sunflower(combined, q, cand->s, CoreConstraint::at_most(cand->t - 1))) continue;
            chosen.push_back(q);
            combined.push_back(q);
            rec(j + 1, chosen);
            combined.pop_back();
            chosen.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

SStarResult solve_sstar(int s, int t, const Budget& budget, int threads,
                        const SearchResult* phi_precomputed) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto deadline = t0 + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(budget.max_seconds));
    SearchResult phi_res;
    if (phi_precomputed)
        phi_res = *phi_precomputed;
    else
        phi_res = phi(s, t, budget, threads);
    if (phi_res.status != SearchResult::Status::proved)
        throw budget_error("solve_sstar: phi(s,t) not proved within budget; refusing (T would be unverified)");
    std::atomic<std::uint64_t> stage_nodes{0};
    const std::uint64_t stage_node_limit =
        budget.max_nodes > phi_res.nodes ? budget.max_nodes - phi_res.nodes : 0;

    const int phi_st = phi_res.best_size;
    const int T = t * phi_st;

    SStarResult out;
    out.count_truncated = phi_res.witness_total > phi_res.witnesses.size();

    // stage 0: all isomorphism classes of extremal t-layers, re-grounded on [T]
    std::vector<LayeredCandidate> retained;
    for (const Family& w : phi_res.witnesses) {
        if (support(w).max_element() >= T)
            throw std::logic_error("solve_sstar: witness support exceeds T");
        retained.emplace_back(Family(T, w.members(), t), s, t, phi_st);
    }

    int nthreads = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;

    for (int i = 1; i <= T - t; ++i) {
        // extensions per retained prefix run in parallel; the merge below is a
        // stage barrier in prefix order, so the outcome is deterministic
        std::vector<ExtensionSearch> per_prefix(retained.size());
        {
            std::atomic<std::size_t> next_idx{0};
            auto worker = [&] {
                while (true) {
                    const std::size_t p = next_idx.fetch_add(1);
                    if (p >= retained.size()) break;
                    const LayeredCandidate& cand = retained[p];
                    const SetWord supp = support(cand.family.layer(t));
                    if (t + i > supp.count()) continue;  // no room: prefix passes through unchanged
                    per_prefix[p].cand = &cand;
                    per_prefix[p].candidates = subsets_of_size(supp, t + i);
                    per_prefix[p].nodes = &stage_nodes;
                    per_prefix[p].max_nodes = stage_node_limit;
                    per_prefix[p].deadline = deadline;
                    per_prefix[p].run();
                }
            };
            if (nthreads == 1 || retained.size() <= 1) {
                worker();
            } else {
                std::vector<std::thread> pool;
                for (int w = 0; w < std::min<int>(nthreads, static_cast<int>(retained.size())); ++w)
                    pool.emplace_back(worker);
                for (auto& th : pool) th.join();
            }
        }

        bool stage_aborted = false;
        for (const ExtensionSearch& ext : per_prefix) stage_aborted = stage_aborted || ext.aborted;
        if (stage_aborted) {
            out.optimal = false;
            out.count_truncated = true;
            break;  // keep the last fully optimized stage as the partial result
        }

        std::vector<LayeredCandidate> next;
        bigint best_i = -1;
        auto consider = [&](Family fam) {
            LayeredCandidate c(std::move(fam), s, t, phi_st);
            PhiTildeVector v = phitilde(c);
            const bigint& vi = v[static_cast<std::size_t>(i)];
            if (vi > best_i) {
                best_i = vi;
                next.clear();
            }
            if (vi == best_i) next.push_back(std::move(c));
        };
        for (std::size_t p = 0; p < retained.size(); ++p) {
            const ExtensionSearch& ext = per_prefix[p];
            if (ext.cand == nullptr) {
                consider(retained[p].family);
                continue;
            }
            if (ext.truncated) out.count_truncated = true;
            for (const auto& q : ext.optima) {
                std::vector<SetWord> members = retained[p].family.members();
                members.insert(members.end(), q.begin(), q.end());
                consider(Family(T, std::move(members)));
            }
        }
        // dedup up to isomorphism; canonical members keep comparisons cheap
        std::vector<std::pair<std::vector<SetWord>, std::size_t>> keyed;
        for (std::size_t c = 0; c < next.size(); ++c) keyed.emplace_back(min_image(next[c].family.members()), c);
        std::sort(keyed.begin(), keyed.end());
        retained.clear();
        for (std::size_t c = 0; c < keyed.size(); ++c) {
            if (c > 0 && keyed[c].first == keyed[c - 1].first) continue;
            if (retained.size() >= kWorkingCap) {
                out.count_truncated = true;
                break;
            }
            retained.emplace_back(Family(T, keyed[c].first), s, t, phi_st);
        }
    }

    if (retained.empty()) throw std::logic_error("solve_sstar: no candidates retained");
    out.phi_tilde = phitilde(retained.front());
    out.optima_total = retained.size();
    for (std::size_t c = 0; c < retained.size() && c < kOptimaCap; ++c) out.optima.push_back(retained[c]);
    return out;
}

PropertyReport check_properties(const LayeredCandidate& cand, const PhiTildeVector* solved_optimum) {
    PropertyReport rep;
    auto cert = find_sunflower(cand.family, cand.s, CoreConstraint::at_most(cand.t - 1));
    rep.property1 = !cert.has_value();
    rep.violation1 = cert;
    SetWord offender;
    rep.property2 = cand.property2_ok(&offender);
    if (!rep.property2) rep.violation2 = offender;
    if (solved_optimum && rep.property2) {
        rep.property3 = (phitilde(cand) == *solved_optimum) ? PropertyReport::P3::consistent
                                                            : PropertyReport::P3::inconsistent;
    }
    return rep;
}

}  // namespace workbench
