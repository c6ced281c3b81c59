#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "workbench/construct.hpp"
#include "workbench/sunflower.hpp"

using namespace workbench;

namespace {

Family fam_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<SetWord> members;
    for (const auto& s : sets) members.push_back(SetWord::of(s));
    return Family(n, std::move(members));
}

Family two_triangles() { return fam_of(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}}); }

/// Test-only oracle: scan every s-subset of the family.
bool naive_has_sunflower(const Family& fam, int s, CoreConstraint cc) {
    const int m = static_cast<int>(fam.size());
    if (m < s) return false;
    std::vector<int> idx(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        std::vector<SetWord> sets;
        for (int i : idx) sets.push_back(fam[static_cast<std::size_t>(i)]);
        if (auto core = is_sunflower(sets); core && cc.admits(core->count())) return true;
        int j = s - 1;
        while (j >= 0 && idx[static_cast<std::size_t>(j)] == m - s + j) --j;
        if (j < 0) return false;
        ++idx[static_cast<std::size_t>(j)];
        for (int i = j + 1; i < s; ++i) idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
}

}  // namespace

TEST_CASE("is_sunflower") {
    CHECK(is_sunflower({SetWord::of({0, 1}), SetWord::of({2, 3}), SetWord::of({4, 5})}) == SetWord::empty());
    CHECK(is_sunflower({SetWord::of({0, 1}), SetWord::of({0, 2}), SetWord::of({0, 3})}) == SetWord::of({0}));
    CHECK_FALSE(is_sunflower({SetWord::of({0, 1}), SetWord::of({0, 2}), SetWord::of({1, 2})}).has_value());
    CHECK(is_sunflower({SetWord::of({3, 7})}) == SetWord::of({3, 7}));  // 1-sunflower, core = itself
    CHECK_THROWS_AS(is_sunflower({SetWord::of({0}), SetWord::of({0})}), std::invalid_argument);
    CHECK_THROWS_AS(is_sunflower({}), std::invalid_argument);
}

TEST_CASE("find_sunflower: star") {
    Family star = fam_of(4, {{0, 1}, {0, 2}, {0, 3}});
    auto cert = find_sunflower(star, 3, CoreConstraint::exact(1));
    REQUIRE(cert.has_value());
    CHECK(cert->core == SetWord::of({0}));
    CHECK(verify_cert(star, *cert, 3, CoreConstraint::exact(1)));
}

TEST_CASE("find_sunflower: two disjoint triangles have no 3-sunflower") {
    CHECK_FALSE(find_sunflower(two_triangles(), 3, CoreConstraint::any()).has_value());
    CHECK(is_admissible(two_triangles(), 3, CoreConstraint::at_most(1)));
}

TEST_CASE("find_sunflower: all pairs of [6] contain 3 disjoint pairs") {
    Family pairs(6, subsets_of_size(SetWord::range(6), 2), 2);
    auto cert = find_sunflower(pairs, 3, CoreConstraint::exact(0));
    REQUIRE(cert.has_value());
    CHECK(cert->core.is_empty());
    CHECK(verify_cert(pairs, *cert, 3, CoreConstraint::exact(0)));
}

TEST_CASE("find_sunflower: s < 2 rejected") {
    CHECK_THROWS_AS(find_sunflower(two_triangles(), 1, CoreConstraint::any()), std::invalid_argument);
}

TEST_CASE("verify_cert diagnostics") {
    Family star = fam_of(4, {{0, 1}, {0, 2}, {0, 3}});
    SunflowerCert cert{{0, 1, 2}, SetWord::of({0})};
    std::string why;
    CHECK(verify_cert(star, cert, 3, CoreConstraint::exact(1), &why));

    SunflowerCert corrupted = cert;
    corrupted.core = SetWord::empty();
    CHECK_FALSE(verify_cert(star, corrupted, 3, CoreConstraint::exact(1), &why));
    CHECK(!why.empty());

    SunflowerCert short_cert{{0, 1}, SetWord::of({0})};
    CHECK_FALSE(verify_cert(star, short_cert, 3, CoreConstraint::exact(1)));

    SunflowerCert bad_index{{0, 1, 9}, SetWord::of({0})};
    CHECK_FALSE(verify_cert(star, bad_index, 3, CoreConstraint::exact(1), &why));
    CHECK(why == "member index out of range");
}

TEST_CASE("is_admissible examples") {
    Family pairs5(5, subsets_of_size(SetWord::range(5), 2), 2);
    CHECK_FALSE(is_admissible(pairs5, 3, CoreConstraint::at_most(1)));  // a degree-3 star exists

    CHECK(is_admissible(build_theorem13(3, 10, 5), 3, CoreConstraint::exact(1)));
}

TEST_CASE("agreement with the naive oracle on random mixed families") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> size_dist(1, 5);
    std::uniform_int_distribution<int> count_dist(1, 12);
    std::uniform_int_distribution<int> elem(0, 9);
    const std::vector<CoreConstraint> ccs{CoreConstraint::any(), CoreConstraint::exact(0),
                                          CoreConstraint::exact(1), CoreConstraint::at_most(1),
                                          CoreConstraint::at_most(2)};
    for (int rep = 0; rep < 120; ++rep) {
        std::vector<SetWord> members;
        const int m = count_dist(rng);
        for (int i = 0; i < m; ++i) {
            SetWord w;
            const int sz = size_dist(rng);
            while (w.count() < sz) w.set(elem(rng));
            members.push_back(w);
        }
        Family fam(10, std::move(members));
        const int s = 2 + rep % 3;
        for (const CoreConstraint& cc : ccs) {
            auto fast = find_sunflower(fam, s, cc);
            CHECK(fast.has_value() == naive_has_sunflower(fam, s, cc));
            if (fast) CHECK(verify_cert(fam, *fast, s, cc));
        }
    }
}

TEST_CASE("monotonicity: certificates survive in a superfamily") {
    std::mt19937 rng(123);
    std::uniform_int_distribution<int> elem(0, 8);
    for (int rep = 0; rep < 60; ++rep) {
        std::vector<SetWord> members;
        for (int i = 0; i < 10; ++i) {
            SetWord w;
            while (w.count() < 3) w.set(elem(rng));
            members.push_back(w);
        }
        Family fam(9, members);
        auto cert = find_sunflower(fam, 3, CoreConstraint::any());
        if (!cert) continue;
        // extend and remap indices through the member sets themselves
        members.push_back(SetWord::of({0, 1, 2, 3}));
        Family big(9, members);
        SunflowerCert remapped;
        remapped.core = cert->core;
        for (int idx : cert->member_indices) {
            const SetWord w = fam[static_cast<std::size_t>(idx)];
            const auto& mem = big.members();
            remapped.member_indices.push_back(
                static_cast<int>(std::lower_bound(mem.begin(), mem.end(), w) - mem.begin()));
        }
        CHECK(verify_cert(big, remapped, 3, CoreConstraint::any()));
    }
}

TEST_CASE("s=2: any two distinct members form a sunflower") {
    std::mt19937 rng(31);
    std::uniform_int_distribution<int> elem(0, 7);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<SetWord> members;
        for (int i = 0; i < 4; ++i) {
            SetWord w;
            while (w.count() < 3) w.set(elem(rng));
            members.push_back(w);
        }
        Family fam(8, std::move(members));
        if (fam.size() < 2) continue;
        CHECK(find_sunflower(fam, 2, CoreConstraint::at_most(2)).has_value());
    }
}

TEST_CASE("budget guard refuses oversized instances") {
    std::vector<SetWord> many;
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> elem(0, 39);
    while (many.size() < 1100) {
        SetWord w;
        while (w.count() < 5) w.set(elem(rng));
        many.push_back(w);
    }
    Family fam(40, std::move(many));
    if (fam.size() > 1000) CHECK_THROWS_AS(find_sunflower(fam, 3, CoreConstraint::any()), budget_error);
}
