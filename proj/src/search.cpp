#include "workbench/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>

#include "workbench/binomial.hpp"
#include "workbench/canonical.hpp"

namespace workbench {

namespace {

constexpr std::size_t kWitnessCap = 64;
constexpr int kFrontierDepth = 3;

long long clamp_bigint(const bigint& v) {
    static const bigint cap = std::numeric_limits<long long>::max();
    return v > cap ? std::numeric_limits<long long>::max() : static_cast<long long>(v);
}

using Clock = std::chrono::steady_clock;

struct Shared {
    int n, k, s;
    CoreConstraint cc;
    bool reject;
    std::uint64_t total_candidates;  // C(n,k)
    std::atomic<int> incumbent{0};
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<bool> stop{false};
    std::uint64_t max_nodes;
    Clock::time_point deadline;
};

/// Witnesses found within one frontier branch; merged in branch order, so the
/// reported subset is deterministic regardless of thread scheduling.
struct Collector {
    int best = -1;
    std::uint64_t count = 0;
    std::vector<std::vector<SetWord>> wit;

    void offer(const std::vector<SetWord>& members, Shared& sh) {
        const int size = static_cast<int>(members.size());
        int inc = sh.incumbent.load(std::memory_order_relaxed);
        if (size < inc) return;
        while (size > inc && !sh.incumbent.compare_exchange_weak(inc, size)) {
        }
        if (size > best) {
            best = size;
            count = 0;
            wit.clear();
        }
        if (size == best) {
            ++count;
            if (wit.size() < kWitnessCap) wit.push_back(members);
        }
    }
};

/// Candidate members for extending a canonical family whose support is
/// [0, r): k-subsets whose elements >= r form a contiguous block starting at
/// r (any canonical child has that shape), ascending in bitmask order.
/// Without isomorph rejection all k-subsets of [0, n) are produced.
std::vector<SetWord> extension_candidates(const Shared& sh, int support_size, const SetWord& last,
                                          bool have_last) {
    std::vector<SetWord> out;
    const int r = sh.reject ? support_size : sh.n;
    const int max_fresh = sh.reject ? std::min(sh.k, sh.n - r) : 0;
    for (int f = 0; f <= max_fresh; ++f) {
        if (sh.k - f > r) continue;
        SetWord fresh;
        for (int j = 0; j < f; ++j) fresh.set(r + j);
        for_each_subset_of_size(SetWord::range(r), sh.k - f, [&](const SetWord& low) {
            SetWord m = low | fresh;
            if (!have_last || last < m) out.push_back(m);
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool budget_tick(Shared& sh, std::uint64_t& local_nodes) {
    ++local_nodes;
    if ((local_nodes & 0x3F) == 0) {
        const std::uint64_t total = sh.nodes.fetch_add(64, std::memory_order_relaxed) + 64;
        if (total > sh.max_nodes || Clock::now() > sh.deadline) sh.stop.store(true, std::memory_order_relaxed);
    }
    return sh.stop.load(std::memory_order_relaxed);
}

void dfs(Shared& sh, std::vector<SetWord>& members, SetWord support, Collector& col,
         std::uint64_t& local_nodes) {
    if (budget_tick(sh, local_nodes)) return;
    col.offer(members, sh);
    const bool have_last = !members.empty();
    const SetWord last = have_last ? members.back() : SetWord{};
    const int size = static_cast<int>(members.size());
    for (const SetWord& m : extension_candidates(sh, support.count(), last, have_last)) {
        // everything still addable after m sits above it in colex order
        const std::uint64_t rank = colex_rank(m);
        if (static_cast<std::uint64_t>(size) + (sh.total_candidates - rank) <
            static_cast<std::uint64_t>(sh.incumbent.load(std::memory_order_relaxed)))
            break;
        if (creates_sunflower(members, m, sh.s, sh.cc)) continue;
        members.push_back(m);
        if (!sh.reject || is_canonical(members)) dfs(sh, members, support | m, col, local_nodes);
        members.pop_back();
        if (sh.stop.load(std::memory_order_relaxed)) return;
    }
}

struct FrontierNode {
    std::vector<SetWord> members;
    SetWord support;
};

/// Walk the shallow part of the tree sequentially, recording its nodes and
/// cutting the tree at kFrontierDepth; the frontier subtrees are processed by
/// the worker pool.
void collect_frontier(Shared& sh, std::vector<SetWord>& members, SetWord support, Collector& col,
                      std::vector<FrontierNode>& frontier, std::uint64_t& local_nodes) {
    if (static_cast<int>(members.size()) == kFrontierDepth) {
        frontier.push_back({members, support});
        return;
    }
    if (budget_tick(sh, local_nodes)) return;
    col.offer(members, sh);
    const bool have_last = !members.empty();
    const SetWord last = have_last ? members.back() : SetWord{};
    for (const SetWord& m : extension_candidates(sh, support.count(), last, have_last)) {
        if (creates_sunflower(members, m, sh.s, sh.cc)) continue;
        members.push_back(m);
        if (!sh.reject || is_canonical(members))
            collect_frontier(sh, members, support | m, col, frontier, local_nodes);
        members.pop_back();
        if (sh.stop.load(std::memory_order_relaxed)) return;
    }
}

/// Greedy admissible family on [n] in ascending member order; used to seed
/// the incumbent with a verified lower bound.
std::vector<SetWord> greedy_seed(int n, int k, int s, CoreConstraint cc) {
    std::vector<SetWord> members;
    for_each_subset_of_size(SetWord::range(n), k, [&](const SetWord& m) {
        if (!creates_sunflower(members, m, s, cc)) members.push_back(m);
    });
    return members;
}

}  // namespace

long long erdos_rado_upper(int s, int t) {
    bigint v = 1;
    for (int i = 2; i <= t; ++i) v *= i;
    bigint p = 1;
    for (int i = 0; i < t; ++i) p *= (s - 1);
    return clamp_bigint(v * p);
}

long long abbott_hanson_sauer(int s) {
    if (s % 2 == 1) return static_cast<long long>(s) * (s - 1);
    return static_cast<long long>(s - 1) * (s - 1) + (s - 2) / 2;
}

SearchResult max_admissible(const SearchProblem& p) {
    if (p.s < 2) throw std::invalid_argument("search: s must be >= 2");
    if (p.uniformity_k < 1 || p.uniformity_k > p.universe_n || p.universe_n > 128)
        throw std::invalid_argument("search: need 1 <= k <= n <= 128");

    const auto t0 = Clock::now();
    Shared sh;
    sh.n = p.universe_n;
    sh.k = p.uniformity_k;
    sh.s = p.s;
    sh.cc = p.cc;
    sh.reject = p.isomorph_reject;
    sh.total_candidates = binom_u64(p.universe_n, p.uniformity_k);
    sh.max_nodes = p.budget.max_nodes;
    sh.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(p.budget.max_seconds));

    // verified greedy incumbent
    std::vector<SetWord> seed = greedy_seed(sh.n, sh.k, sh.s, sh.cc);
    {
        Family seed_fam(sh.n, seed, sh.k);
        if (!is_admissible(seed_fam, sh.s, sh.cc))
            throw std::logic_error("search: greedy seed failed admissibility re-check");
    }
    sh.incumbent.store(static_cast<int>(seed.size()));

    std::vector<FrontierNode> frontier;
    Collector root_col;
    std::uint64_t seq_nodes = 0;
    {
        std::vector<SetWord> members;
        collect_frontier(sh, members, SetWord::empty(), root_col, frontier, seq_nodes);
        sh.nodes.fetch_add(seq_nodes & 0x3F);
    }

    int nthreads = p.threads > 0 ? p.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (nthreads < 1) nthreads = 1;
    nthreads = std::min<int>(nthreads, std::max<std::size_t>(frontier.size(), 1));

    std::vector<Collector> cols(frontier.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        std::uint64_t local_nodes = 0;
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= frontier.size() || sh.stop.load(std::memory_order_relaxed)) break;
            std::vector<SetWord> members = frontier[i].members;
            dfs(sh, members, frontier[i].support, cols[i], local_nodes);
        }
        sh.nodes.fetch_add(local_nodes & 0x3F);
    };
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SearchResult res;
    res.universe_n = sh.n;
    res.nodes = sh.nodes.load();
    res.best_size = sh.incumbent.load();
    res.status = sh.stop.load() ? SearchResult::Status::lower_bound_only : SearchResult::Status::proved;

    // merge branch collectors in branch order (root collector first)
    std::vector<std::vector<SetWord>> merged;
    std::uint64_t total = 0;
    auto absorb = [&](const Collector& c) {
        if (c.best != res.best_size) return;
        total += c.count;
        for (const auto& w : c.wit)
            if (merged.size() < kWitnessCap) merged.push_back(w);
    };
    absorb(root_col);
    for (const Collector& c : cols) absorb(c);
    if (merged.empty() && static_cast<int>(seed.size()) == res.best_size) {
        merged.push_back(min_image(seed));
        total = std::max<std::uint64_t>(total, 1);
    }

    std::vector<std::vector<SetWord>> canon;
    canon.reserve(merged.size());
    for (const auto& w : merged) canon.push_back(sh.reject ? w : min_image(w));
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    for (const auto& w : canon) {
        Family fam(sh.n, w, sh.k);
        if (!is_admissible(fam, sh.s, sh.cc))
            throw std::logic_error("search: witness failed post-search admissibility re-check");
        res.witnesses.push_back(std::move(fam));
    }
    res.witness_total = std::max<std::uint64_t>(total, res.witnesses.size());
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

namespace {

Budget remaining_budget(const Budget& budget, const Clock::time_point& t0, std::uint64_t used_nodes) {
    Budget b = budget;
    const double used = std::chrono::duration<double>(Clock::now() - t0).count();
    b.max_seconds = std::max(0.0, budget.max_seconds - used);
    b.max_nodes = budget.max_nodes > used_nodes ? budget.max_nodes - used_nodes : 0;
    return b;
}

}  // namespace

SearchResult phi(int s, int t, const Budget& budget, int threads) {
    if (s < 2) throw std::invalid_argument("phi: s must be >= 2");
    if (t < 1) throw std::invalid_argument("phi: t must be >= 1");
    const auto t0 = Clock::now();

    long long upper = erdos_rado_upper(s, t);
    if (t == 2) upper = std::min(upper, abbott_hanson_sauer(s));
    if (t == 1) upper = s - 1;

    const int n_max = static_cast<int>(std::min<long long>(128, static_cast<long long>(t) * (upper + 1)));

    // cheap verified lower bound fixes the first universe guess
    std::vector<SetWord> seed = greedy_seed(n_max, t, s, CoreConstraint::any());
    const int g = static_cast<int>(seed.size());

    int n = static_cast<int>(std::min<long long>(n_max, static_cast<long long>(t) * (g + 1)));
    std::uint64_t used_nodes = 0;
    SearchResult res;
    while (true) {
        SearchProblem p;
        p.universe_n = n;
        p.uniformity_k = t;
        p.s = s;
        p.cc = CoreConstraint::any();
        p.budget = remaining_budget(budget, t0, used_nodes);
        p.threads = threads;
        res = max_admissible(p);
        used_nodes += res.nodes;
        if (res.status == SearchResult::Status::lower_bound_only) break;
        const long long needed = static_cast<long long>(t) * (res.best_size + 1);
        if (needed <= n) {
            res.status = SearchResult::Status::proved;
            res.upper_bound = res.best_size;
            break;
        }
        if (n >= 128) {
            res.status = SearchResult::Status::lower_bound_only;
            break;
        }
        n = static_cast<int>(std::min<long long>(128, needed));
    }
    if (res.status == SearchResult::Status::lower_bound_only) {
        res.best_size = std::max(res.best_size, g);
        res.upper_bound = upper;
    }
    res.nodes = used_nodes;
    res.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return res;
}

GraphCaseResult max_graph_case(int s, const Budget& budget, int threads) {
    GraphCaseResult out;
    out.result = phi(s, 2, budget, threads);
    for (const Family& w : out.result.witnesses) {
        int deg[SetWord::max_ground] = {0};
        for (const SetWord& e : w.members())
            for (int v : e.elements()) ++deg[v];
        std::vector<int> seq;
        for (int v : support(w).elements()) seq.push_back(deg[v]);
        std::sort(seq.begin(), seq.end());
        out.degree_sequences.push_back(std::move(seq));
    }
    return out;
}

SearchResult duke_erdos_oracle(int n, int k, int s, int t, const Budget& budget, int threads) {
    if (t < 1) throw std::invalid_argument("oracle: t must be >= 1");
    SearchProblem p;
    p.universe_n = n;
    p.uniformity_k = k;
    p.s = s;
    p.cc = CoreConstraint::exact(t - 1);
    p.budget = budget;
    p.threads = threads;
    SearchResult res = max_admissible(p);
    res.upper_bound = res.status == SearchResult::Status::proved
                          ? res.best_size
                          : clamp_bigint(binom(n, k));
    return res;
}

}  // namespace workbench
