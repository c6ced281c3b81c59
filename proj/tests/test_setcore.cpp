#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "workbench/family.hpp"
#include "workbench/io.hpp"

using namespace workbench;

namespace {

Family fam_of(int n, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<SetWord> members;
    for (const auto& s : sets) members.push_back(SetWord::of(s));
    return Family(n, std::move(members));
}

Family random_family(std::mt19937& rng, int n, int max_members, int max_size) {
    std::uniform_int_distribution<int> count_dist(0, max_members);
    std::uniform_int_distribution<int> size_dist(0, max_size);
    std::uniform_int_distribution<int> elem(0, n - 1);
    std::vector<SetWord> members;
    const int m = count_dist(rng);
    for (int i = 0; i < m; ++i) {
        SetWord w;
        const int sz = size_dist(rng);
        while (w.count() < sz) w.set(elem(rng));
        members.push_back(w);
    }
    return Family(n, std::move(members));
}

}  // namespace

TEST_CASE("SetWord order is colex on sets") {
    // a < b iff the largest element where they differ belongs to b
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> elem(0, 127);
    for (int rep = 0; rep < 2000; ++rep) {
        SetWord a, b;
        for (int i = 0; i < 6; ++i) {
            a.set(elem(rng));
            b.set(elem(rng));
        }
        if (a == b) continue;
        const SetWord diff = (a - b) | (b - a);
        const int top = diff.max_element();
        CHECK((a < b) == b.test(top));
    }
}

TEST_CASE("Family construction: dedup, sorting, validation") {
    Family f = fam_of(5, {{1, 2}, {0}, {1, 2}, {3}});
    CHECK(f.size() == 3);
    for (std::size_t i = 1; i < f.size(); ++i) CHECK(f[i - 1] < f[i]);
    CHECK_FALSE(f.uniformity().has_value());
    CHECK(fam_of(4, {{0, 1}, {2, 3}}).uniformity() == 2);
    CHECK_THROWS_AS(Family(3, {SetWord::of({5})}), std::invalid_argument);
    CHECK_THROWS_AS(Family(129, {}), std::invalid_argument);
    CHECK_THROWS_AS(Family(4, {SetWord::of({0, 1})}, 3), std::invalid_argument);
}

TEST_CASE("layer accessor") {
    Family f = fam_of(6, {{0, 1}, {1, 2}, {0, 1, 2}, {3}});
    CHECK(f.layer(2).size() == 2);
    CHECK(f.layer(3).size() == 1);
    CHECK(f.layer(5).is_empty());
    CHECK(f.layer_sizes() == std::vector<int>{1, 2, 3});
}

TEST_CASE("support") {
    CHECK(support(Family::empty(5)).is_empty());
    CHECK(support(fam_of(5, {{0, 1}, {1, 2}})) == SetWord::of({0, 1, 2}));
    // two disjoint triangles cover {0..5}
    Family g = fam_of(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
    CHECK(support(g) == SetWord::range(6));
}

TEST_CASE("shadow: examples") {
    Family f = fam_of(4, {{0, 1}, {1, 2}});
    CHECK(shadow(f, 1) == fam_of(4, {{0}, {1}, {2}}));
    CHECK(shadow(f, 2) == f);  // k-shadow of a k-uniform family is itself

    // 2-shadow of all triples of [4] is all 6 pairs, frozen from direct
    // enumeration of the pairs contained in some triple
    std::vector<SetWord> triples = subsets_of_size(SetWord::range(4), 3);
    Family all_triples(4, triples, 3);
    std::vector<SetWord> expected;
    for (const SetWord& p : subsets_of_size(SetWord::range(4), 2)) {
        bool inside = false;
        for (const SetWord& tr : triples) inside = inside || p.subset_of(tr);
        if (inside) expected.push_back(p);
    }
    CHECK(expected.size() == 6);
    CHECK(shadow(all_triples, 2) == Family(4, expected, 2));
}

TEST_CASE("shadow: degenerate layers flag") {
    Family f = fam_of(4, {{0, 1}});
    bool warn = false;
    CHECK(shadow(f, -1, &warn).is_empty());
    CHECK(warn);
    CHECK(shadow(f, 3, &warn).is_empty());
    CHECK(warn);
    CHECK(shadow(f, 0, &warn).size() == 1);  // the empty set
    CHECK_FALSE(warn);
    CHECK(shadow(Family::empty(4), 2, &warn).is_empty());
    CHECK_FALSE(warn);
}

TEST_CASE("shadow composition on uniform families") {
    std::mt19937 rng(7);
    for (int rep = 0; rep < 40; ++rep) {
        std::vector<SetWord> pool = subsets_of_size(SetWord::range(8), 4);
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(5);
        Family f(8, pool, 4);
        for (int h = 1; h <= 4; ++h)
            for (int g = 1; g <= h; ++g) CHECK(shadow(shadow(f, h), g) == shadow(f, g));
    }
}

TEST_CASE("support of shadow") {
    std::mt19937 rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        Family f = random_family(rng, 9, 6, 4);
        const int lo = f.min_member_size();
        for (int h = 1; h <= f.max_member_size(); ++h) {
            Family sh = shadow(f, h);
            CHECK(support(sh).subset_of(support(f)));
            if (h >= 1 && lo >= h) CHECK(support(sh) == support(f));
        }
    }
}

TEST_CASE("restrict: examples") {
    Family f = fam_of(5, {{0, 1, 2}, {0, 3, 4}, {1, 3, 4}});
    // members meeting {0,1} in exactly {0}: only {0,3,4}; minus B leaves {3,4}
    CHECK(restrict(f, SetWord::of({0}), SetWord::of({0, 1})) == fam_of(5, {{3, 4}}));
    CHECK(restrict(f, SetWord::empty(), SetWord::empty()) == f);

    Family pairs(4, subsets_of_size(SetWord::range(4), 2), 2);
    CHECK(restrict(pairs, SetWord::of({0}), SetWord::of({0})) == fam_of(4, {{1}, {2}, {3}}));

    CHECK_THROWS_AS(restrict(f, SetWord::of({0}), SetWord::of({1})), std::invalid_argument);
}

TEST_CASE("restrict partitions the family") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 50; ++rep) {
        Family f = random_family(rng, 8, 8, 4);
        SetWord b = SetWord::of({0, 2, 5});
        std::size_t total = 0;
        for (const SetWord& a : subsets_of_size(b, 0)) total += restrict(f, a, b).size();
        for (int h = 1; h <= 3; ++h)
            for (const SetWord& a : subsets_of_size(b, h)) total += restrict(f, a, b).size();
        CHECK(total == f.size());
    }
}

TEST_CASE("filter_superset") {
    Family pairs(4, subsets_of_size(SetWord::range(4), 2), 2);
    CHECK(filter_superset(pairs, fam_of(4, {{}})) == pairs);  // every set contains the empty set
    CHECK(filter_superset(pairs, fam_of(4, {{0}})).size() == 3);

    // frozen from the enumeration oracle: triples of [5] containing {0,1} or
    // {2,3} — 3 + 3 with empty overlap
    Family triples(5, subsets_of_size(SetWord::range(5), 3), 3);
    Family basis = fam_of(5, {{0, 1}, {2, 3}});
    std::size_t oracle = 0;
    for (const SetWord& w : triples.members())
        if (SetWord::of({0, 1}).subset_of(w) || SetWord::of({2, 3}).subset_of(w)) ++oracle;
    CHECK(oracle == 6);
    CHECK(filter_superset(triples, basis).size() == oracle);
}

TEST_CASE("join") {
    Family f1 = fam_of(4, {{0}});
    CHECK(join(f1, fam_of(4, {{}})) == f1);
    CHECK(join(fam_of(4, {{0}}), fam_of(4, {{1}, {2}})) == fam_of(4, {{0, 1}, {0, 2}}));
    CHECK(join(fam_of(4, {{0, 1}}), fam_of(4, {{1, 2}})) == fam_of(4, {{0, 1, 2}}));
}

TEST_CASE("text format round trip is byte identical") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 100; ++rep) {
        Family f = random_family(rng, 10, 8, 5);
        const std::string once = serialize_family(f);
        Family g = parse_family_string(once);
        CHECK(f == g);
        CHECK(serialize_family(g) == once);
    }
}

TEST_CASE("text format: comments, headers, errors") {
    Family f = parse_family_string("# leading comment\nn=6 k=-\n0 1 # trailing\n\n-\n2 3 4\n");
    CHECK(f.ground_n() == 6);
    CHECK(f.size() == 3);
    CHECK(f.contains(SetWord::empty()));
    CHECK_THROWS_AS(parse_family_string("0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_string("n=4 k=2\n0 9\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family_string("n=4\n0 1\n"), std::invalid_argument);
}

TEST_CASE("uniform header round trip") {
    Family f(5, subsets_of_size(SetWord::range(5), 2), 2);
    const std::string text = serialize_family(f);
    CHECK(text.rfind("n=5 k=2", 0) == 0);
    CHECK(parse_family_string(text).uniformity() == 2);
}

TEST_CASE("full 128-element ground set") {
    Family f(128, {SetWord::of({0, 127}), SetWord::of({63, 64}), SetWord::range(128)});
    CHECK(support(f) == SetWord::range(128));
    CHECK(f.max_member_size() == 128);
    Family g = parse_family_string(serialize_family(f));
    CHECK(f == g);
    CHECK(restrict(f, SetWord::of({127}), SetWord::of({126, 127})).size() == 1);
    CHECK(SetWord::range(128).count() == 128);
    CHECK(SetWord::of({127}) > SetWord::of({0, 1, 2, 63, 64, 126}));
}
