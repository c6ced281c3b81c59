#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "workbench/construct.hpp"
#include "workbench/lowdim.hpp"

using namespace workbench;

namespace {

Family two_triangles(int n) {
    std::vector<SetWord> edges;
    for (int block = 0; block < 2; ++block)
        for (int a = 0; a < 3; ++a)
            for (int b = a + 1; b < 3; ++b) edges.push_back(SetWord::of({3 * block + a, 3 * block + b}));
    return Family(n, std::move(edges));
}

LayeredCandidate random_candidate(std::mt19937& rng, int s, int t, int phi_st, int max_supp) {
    const int r = std::uniform_int_distribution<int>(t, max_supp)(rng);
    std::vector<SetWord> pool = subsets_of_size(SetWord::range(r), t);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<SetWord> members;
    const int target = std::uniform_int_distribution<int>(1, static_cast<int>(pool.size()))(rng);
    for (const SetWord& w : pool) {
        if (static_cast<int>(members.size()) >= target) break;
        if (!creates_sunflower(members, w, s, CoreConstraint::at_most(t - 1))) members.push_back(w);
    }
    SetWord supp;
    for (const SetWord& w : members) supp |= w;
    std::uniform_int_distribution<int> extra(0, 2);
    for (int q = t + 1; q <= supp.count(); ++q)
        for (int j = extra(rng); j > 0; --j) {
            std::vector<int> elems = supp.elements();
            std::shuffle(elems.begin(), elems.end(), rng);
            SetWord w;
            for (int i = 0; i < q; ++i) w.set(elems[static_cast<std::size_t>(i)]);
            if (std::find(members.begin(), members.end(), w) != members.end()) continue;
            if (!creates_sunflower(members, w, s, CoreConstraint::at_most(t - 1))) members.push_back(w);
        }
    return LayeredCandidate(Family(r, std::move(members)), s, t, phi_st);
}

}  // namespace

TEST_CASE("phitilde: frozen values for the two-triangle layer") {
    // hand evaluation: support 6, T = 12, slack C(6,.)
    LayeredCandidate edges(two_triangles(6), 3, 2, 6);
    PhiTildeVector v = phitilde(edges);
    REQUIRE(v.size() == 11);
    CHECK(v[0] == 6);
    CHECK(v[1] == 36);   // 0 + 6*C(6,1)
    CHECK(v[2] == 90);   // 0 + 6*C(6,2) + 0
    CHECK(v[0] == gis_count(edges, 0));
    CHECK(v[1] == gis_count(edges, 1));
    CHECK(v[2] == gis_count(edges, 2));
}

TEST_CASE("phitilde: adding the triangle tops") {
    std::vector<SetWord> members = two_triangles(6).members();
    members.push_back(SetWord::of({0, 1, 2}));
    members.push_back(SetWord::of({3, 4, 5}));
    LayeredCandidate cand(Family(6, std::move(members)), 3, 2, 6);
    PhiTildeVector v = phitilde(cand);
    CHECK(v[0] == 6);
    CHECK(v[1] == 38);  // 2 + 36
    CHECK(v[1] == gis_count(cand, 1));
}

TEST_CASE("phitilde: empty family is all zeros, property-2 violations throw") {
    LayeredCandidate empty(Family::empty(6), 3, 2, 6);
    PhiTildeVector v = phitilde(empty);
    for (const bigint& c : v) CHECK(c == 0);

    // nonempty family with an empty t-layer cannot satisfy property 2
    LayeredCandidate no_base(Family(6, {SetWord::of({0, 1, 2})}), 3, 2, 6);
    CHECK_THROWS_AS(phitilde(no_base), std::invalid_argument);
    CHECK_FALSE(no_base.property2_ok());

    // member outside the t-layer support
    std::vector<SetWord> members = two_triangles(6).members();
    LayeredCandidate stray(Family(7, [&] {
                               auto m = members;
                               m.push_back(SetWord::of({0, 1, 6}));
                               return m;
                           }()),
                           3, 2, 6);
    CHECK_THROWS_AS(phitilde(stray), std::invalid_argument);

    // member below size t
    LayeredCandidate low(Family(6, [&] {
                             auto m = members;
                             m.push_back(SetWord::of({0}));
                             return m;
                         }()),
                         3, 2, 6);
    CHECK_THROWS_AS(phitilde(low), std::invalid_argument);
}

TEST_CASE("gis_count bounds and base case") {
    LayeredCandidate edges(two_triangles(6), 3, 2, 6);
    CHECK(gis_count(edges, 0) == 6);
    CHECK_THROWS_AS(gis_count(edges, -1), std::invalid_argument);
    CHECK_THROWS_AS(gis_count(edges, 11), std::invalid_argument);
}

TEST_CASE("phitilde equals gis_count on random candidates") {
    std::mt19937 rng(555);
    for (int rep = 0; rep < 40; ++rep) {
        LayeredCandidate cand = random_candidate(rng, 3, 2, 6, 7);
        PhiTildeVector v = phitilde(cand);
        for (int i = 0; i <= cand.T() - cand.t; ++i) CHECK(v[static_cast<std::size_t>(i)] == gis_count(cand, i));
    }
}

TEST_CASE("phitilde is relabeling invariant") {
    std::mt19937 rng(556);
    for (int rep = 0; rep < 30; ++rep) {
        LayeredCandidate cand = random_candidate(rng, 3, 2, 6, 7);
        std::vector<int> perm(static_cast<std::size_t>(cand.family.ground_n()));
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<SetWord> relabeled;
        for (const SetWord& w : cand.family.members()) {
            SetWord m;
            for (int e : w.elements()) m.set(perm[static_cast<std::size_t>(e)]);
            relabeled.push_back(m);
        }
        LayeredCandidate other(Family(cand.family.ground_n(), std::move(relabeled)), cand.s, cand.t, cand.phi_st);
        CHECK(phitilde(cand) == phitilde(other));
    }
}

TEST_CASE("adding a (t+i)-member bumps exactly component i") {
    LayeredCandidate base(two_triangles(6), 3, 2, 6);
    std::vector<SetWord> members = base.family.members();
    members.push_back(SetWord::of({0, 1, 2}));  // layer t+1
    LayeredCandidate grown(Family(6, std::move(members)), 3, 2, 6);
    PhiTildeVector before = phitilde(base), after = phitilde(grown);
    CHECK(after[0] == before[0]);
    CHECK(after[1] == before[1] + 1);
    for (std::size_t i = 2; i < before.size(); ++i) CHECK(after[i] >= before[i]);
}

TEST_CASE("trace-count expansion: sum of gis counts times free completions") {
    // |F_S| = sum_i |G^i_S| * C(n-T, k-t-i), the normalized form of the
    // layered count; three routes must agree exactly
    std::mt19937 rng(808);
    for (int rep = 0; rep < 15; ++rep) {
        LayeredCandidate cand = random_candidate(rng, 3, 2, 6, 6);
        const int T = cand.T();
        const int n = std::uniform_int_distribution<int>(T, T + 3)(rng);
        const int k = std::uniform_int_distribution<int>(3, 5)(rng);
        bigint via_gis = 0;
        for (int i = 0; i <= T - cand.t; ++i)
            via_gis += gis_count(cand, i) * binom(n - T, k - cand.t - i);
        // the candidate's support must sit inside [n] before building
        std::vector<SetWord> relabeled;
        const std::vector<int> verts = support(cand.family.layer(cand.t)).elements();
        for (const SetWord& w : cand.family.members()) {
            SetWord m;
            for (int vi = 0; vi < static_cast<int>(verts.size()); ++vi)
                if (w.test(verts[static_cast<std::size_t>(vi)])) m.set(vi);
            relabeled.push_back(m);
        }
        LayeredCandidate grounded(Family(n, std::move(relabeled)), cand.s, cand.t, cand.phi_st);
        CHECK(via_gis == count_fs(grounded, n, k));
        CHECK(via_gis == bigint(build_fs(grounded, n, k).size()));
    }
}

TEST_CASE("solve_sstar: degenerate cases") {
    SStarResult r21 = solve_sstar(2, 1);
    CHECK(r21.phi_tilde == PhiTildeVector{1});
    REQUIRE(r21.optima.size() == 1);
    CHECK(r21.optima.front().family.members() == std::vector<SetWord>{SetWord::of({0})});

    // T - t = 0 here, so the vector has the single component phitilde_0
    SStarResult r22 = solve_sstar(2, 2);
    CHECK(r22.phi_tilde == PhiTildeVector{1});
    REQUIRE(r22.optima.size() == 1);
    CHECK(r22.optima.front().family.members() == std::vector<SetWord>{SetWord::of({0, 1})});
}

TEST_CASE("solve_sstar(3,2): the full layered optimum") {
    SStarResult r = solve_sstar(3, 2);
    CHECK(r.optima_total == 1);
    CHECK_FALSE(r.count_truncated);
    REQUIRE(r.phi_tilde.size() == 11);
    CHECK(r.phi_tilde[0] == 6);
    CHECK(r.phi_tilde[1] == 38);
    CHECK(r.phi_tilde[2] == 111);
    CHECK(r.phi_tilde[3] == 210);
    const LayeredCandidate& best = r.optima.front();
    CHECK(best.family.layer(2).size() == 6);
    CHECK(best.family.layer(3).size() == 2);
    CHECK(best.family.layer(4).size() == 9);
    CHECK(best.family.layer(5).size() == 6);
    CHECK(best.family.layer(6).size() == 1);
    for (int i = 0; i <= 10; ++i) CHECK(r.phi_tilde[static_cast<std::size_t>(i)] == gis_count(best, i));

    PropertyReport rep = check_properties(best, &r.phi_tilde);
    CHECK(rep.property1);
    CHECK(rep.property2);
    CHECK(rep.property3 == PropertyReport::P3::consistent);
}

TEST_CASE("solve_sstar refuses an unproved phi") {
    SearchResult weak;
    weak.best_size = 6;
    weak.status = SearchResult::Status::lower_bound_only;
    CHECK_THROWS_AS(solve_sstar(3, 2, {}, 0, &weak), budget_error);
}

TEST_CASE("solve_sstar: stage budget exhaustion yields a partial, non-optimal result") {
    SearchResult proved = phi(4, 2);
    Budget tiny{proved.nodes + 200, 600.0};
    SStarResult r = solve_sstar(4, 2, tiny, 0, &proved);
    CHECK_FALSE(r.optimal);
    CHECK(r.count_truncated);
    CHECK(r.phi_tilde[0] == 10);  // the completed stage 0 is still exact
}

TEST_CASE("check_properties: violations carry certificates") {
    // a cross edge between the triangles creates a 3-sunflower with small core
    std::vector<SetWord> members = two_triangles(6).members();
    members.push_back(SetWord::of({2, 3}));
    LayeredCandidate crossed(Family(6, std::move(members)), 3, 2, 6);
    PropertyReport rep = check_properties(crossed);
    CHECK_FALSE(rep.property1);
    REQUIRE(rep.violation1.has_value());
    CHECK(verify_cert(crossed.family, *rep.violation1, 3, CoreConstraint::at_most(1)));
    CHECK(rep.property2);

    std::vector<SetWord> with_small = two_triangles(6).members();
    with_small.push_back(SetWord::of({4}));
    PropertyReport rep2 = check_properties(LayeredCandidate(Family(6, std::move(with_small)), 3, 2, 6));
    CHECK_FALSE(rep2.property2);
    CHECK(rep2.violation2 == SetWord::of({4}));
    CHECK(rep2.property3 == PropertyReport::P3::not_checked);
}
