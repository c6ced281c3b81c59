#include "workbench/sunflower.hpp"

#include <algorithm>
#include <unordered_set>

namespace workbench {

namespace {

constexpr std::size_t kPairBudget = 500000;

/// Exact search for `need` pairwise disjoint petals among `petals`, all
/// disjoint from `blocked`. Branches on the most contested element: either
/// some petal containing it is chosen or all of them are discarded. An empty
/// petal (possible when a member equals the core) is always safe to take.
bool pack_disjoint(const std::vector<std::pair<SetWord, int>>& petals, const SetWord& blocked, int need,
                   std::vector<int>& picked) {
    if (need == 0) return true;
    std::vector<std::pair<SetWord, int>> live;
    live.reserve(petals.size());
    for (const auto& p : petals)
        if (!p.first.intersects(blocked)) live.push_back(p);
    if (static_cast<int>(live.size()) < need) return false;

    // most contested element among live petals
    int counts[SetWord::max_ground] = {0};
    SetWord occupied;
    for (const auto& p : live) {
        occupied |= p.first;
        for (int e : p.first.elements()) ++counts[e];
    }
    int elem = occupied.min_element();
    if (elem < 0) {
        // all live petals empty; they are all equal, so at most one distinct —
        // need 1 suffices
        picked.push_back(live.front().second);
        if (need == 1) return true;
        picked.pop_back();
        return false;
    }
    for (int e : occupied.elements())
        if (counts[e] > counts[elem]) elem = e;

    std::vector<std::pair<SetWord, int>> without;
    without.reserve(live.size());
    for (const auto& p : live) {
        if (p.first.test(elem)) {
            picked.push_back(p.second);
            if (pack_disjoint(live, blocked | p.first, need - 1, picked)) return true;
            picked.pop_back();
        } else {
            without.push_back(p);
        }
    }
    return pack_disjoint(without, blocked, need, picked);
}

/// Greedy pass (smallest petals first); cheap shortcut before the exact
/// backtracking.
bool pack_greedy(std::vector<std::pair<SetWord, int>> petals, const SetWord& blocked, int need,
                 std::vector<int>& picked) {
    std::sort(petals.begin(), petals.end(), [](const auto& a, const auto& b) {
        int ca = a.first.count(), cb = b.first.count();
        return ca != cb ? ca < cb : a.first < b.first;
    });
    SetWord used = blocked;
    for (const auto& p : petals) {
        if (need == 0) break;
        if (!p.first.intersects(used)) {
            used |= p.first;
            picked.push_back(p.second);
            --need;
        }
    }
    if (need == 0) return true;
    picked.clear();
    return false;
}

/// Try to complete a sunflower with core `core`: pick `need` pairwise disjoint
/// petals among members of fam containing core (optionally forcing one petal).
bool pack_for_core(const std::vector<std::pair<SetWord, int>>& petals, const SetWord& forced_petal,
                   bool has_forced, int need, std::vector<int>& picked) {
    SetWord blocked = has_forced ? forced_petal : SetWord::empty();
    std::vector<int> tmp;
    if (pack_greedy(petals, blocked, need, tmp) || pack_disjoint(petals, blocked, need, tmp)) {
        picked = std::move(tmp);
        return true;
    }
    return false;
}

std::vector<SetWord> candidate_cores(const Family& fam, const CoreConstraint& cc) {
    std::unordered_set<SetWord, SetWordHash> seen;
    std::vector<SetWord> cores;
    auto push = [&](const SetWord& c) {
        if (cc.admits(c.count()) && seen.insert(c).second) cores.push_back(c);
    };
    push(SetWord::empty());
    const auto& m = fam.members();
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i + 1; j < m.size(); ++j) push(m[i] & m[j]);
    std::sort(cores.begin(), cores.end(), [](const SetWord& a, const SetWord& b) {
        int ca = a.count(), cb = b.count();
        return ca != cb ? ca < cb : a < b;
    });
    return cores;
}

}  // namespace

CoreConstraint CoreConstraint::from_kind_name(const std::string& name, int c) {
    if (name == "exact") return exact(c);
    if (name == "at_most") return at_most(c);
    if (name == "any") return any();
    throw std::invalid_argument("unknown core constraint kind: " + name);
}

std::optional<SetWord> is_sunflower(const std::vector<SetWord>& sets) {
    if (sets.empty()) throw std::invalid_argument("is_sunflower: empty list");
    {
        std::unordered_set<SetWord, SetWordHash> seen(sets.begin(), sets.end());
        if (seen.size() != sets.size()) throw std::invalid_argument("is_sunflower: duplicate sets");
    }
    SetWord core = sets.front();
    for (const SetWord& w : sets) core &= w;
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) != core) return std::nullopt;
    return core;
}

std::optional<SunflowerCert> find_sunflower(const Family& fam, int s, CoreConstraint cc) {
    if (s < 2) throw std::invalid_argument("find_sunflower: s must be >= 2");
    if (static_cast<int>(fam.size()) < s) return std::nullopt;
    if (fam.size() > 1000)
        throw budget_error("find_sunflower: " + std::to_string(fam.size() * (fam.size() - 1) / 2) +
                           " member pairs exceed the candidate-core budget");

    std::size_t pair_count = 0;
    for (const SetWord& core : candidate_cores(fam, cc)) {
        std::vector<std::pair<SetWord, int>> petals;
        for (std::size_t i = 0; i < fam.size(); ++i)
            if (core.subset_of(fam[i])) petals.emplace_back(fam[i] - core, static_cast<int>(i));
        pair_count += petals.size();
        if (pair_count > kPairBudget)
            throw budget_error("find_sunflower: candidate (core,link) pairs exceed 5e5");
        if (static_cast<int>(petals.size()) < s) continue;
        std::vector<int> picked;
        if (pack_for_core(petals, SetWord::empty(), false, s, picked)) {
            std::sort(picked.begin(), picked.end());
            return SunflowerCert{picked, core};
        }
    }
    return std::nullopt;
}

bool creates_sunflower(const std::vector<SetWord>& members, const SetWord& extra, int s,
                       CoreConstraint cc) {
    if (s < 2) throw std::invalid_argument("creates_sunflower: s must be >= 2");
    if (static_cast<int>(members.size()) + 1 < s) return false;
    // any sunflower through `extra` has core = extra ∩ (another member)
    std::vector<SetWord> seen;
    seen.reserve(members.size());
    for (const SetWord& m : members) {
        SetWord core = m & extra;
        if (!cc.admits(core.count())) continue;
        if (std::find(seen.begin(), seen.end(), core) != seen.end()) continue;
        seen.push_back(core);
        std::vector<std::pair<SetWord, int>> petals;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (core.subset_of(members[i])) petals.emplace_back(members[i] - core, static_cast<int>(i));
        std::vector<int> picked;
        if (pack_for_core(petals, extra - core, true, s - 1, picked)) return true;
    }
    return false;
}

bool creates_sunflower(const Family& fam, const SetWord& extra, int s, CoreConstraint cc) {
    return creates_sunflower(fam.members(), extra, s, cc);
}

bool verify_cert(const Family& fam, const SunflowerCert& cert, int s, CoreConstraint cc,
                 std::string* reason) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    if (static_cast<int>(cert.member_indices.size()) != s) return fail("certificate does not have s members");
    std::vector<SetWord> sets;
    std::unordered_set<int> seen;
    for (int idx : cert.member_indices) {
        if (idx < 0 || idx >= static_cast<int>(fam.size())) return fail("member index out of range");
        if (!seen.insert(idx).second) return fail("duplicate member index");
        sets.push_back(fam[static_cast<std::size_t>(idx)]);
    }
    SetWord total = sets.front();
    for (const SetWord& w : sets) total &= w;
    if (total != cert.core) return fail("core does not equal the total intersection");
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j)
            if ((sets[i] & sets[j]) != cert.core) return fail("a pairwise intersection differs from the core");
    if (!cc.admits(cert.core.count())) return fail("core size violates the constraint");
    if (reason) reason->clear();
    return true;
}

bool is_admissible(const Family& fam, int s, CoreConstraint cc) {
    return !find_sunflower(fam, s, cc).has_value();
}

}  // namespace workbench
