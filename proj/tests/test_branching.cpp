#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "lielevel/branching.hpp"
#include "lielevel/dimension.hpp"
#include "lielevel/weight.hpp"

using namespace lielevel;

namespace {

Int child_dim_sum(const GroupDesc& child, const RepSum& s) { return repsum_dim(child, s); }

RepSum make_repsum(std::vector<std::pair<std::vector<int>, long>> terms) {
    RepSum s;
    for (auto& [w, m] : terms) s.add(DominantWeight{w}, m);
    return s;
}

}  // namespace

TEST_CASE("interlacing branching fixtures") {
    RepSum s = branch_sl(3, DominantWeight{{2, 1, 0}});
    CHECK(s == make_repsum({{{2, 1}, 1}, {{2, 0}, 1}, {{1, 1}, 1}, {{1, 0}, 1}}));
    CHECK(child_dim_sum(GroupDesc::sl(2), s) == 8);

    RepSum t = branch_sl(4, DominantWeight{{1, 1, 0, 0}});
    CHECK(t == make_repsum({{{1, 1, 0}, 1}, {{1, 0, 0}, 1}}));
    CHECK(child_dim_sum(GroupDesc::sl(3), t) == 6);

    RepSum z = branch_sl(5, DominantWeight{{0, 0, 0, 0, 0}});
    CHECK(z.term_count() == 1);
    CHECK_THROWS_AS(branch_sl(1, DominantWeight{{1}}), DomainError);
}

TEST_CASE("double interlacing branching fixtures") {
    RepSum s = branch_sp(2, DominantWeight{{1, 1}});
    CHECK(s == make_repsum({{{1}, 2}, {{0}, 1}}));

    RepSum t = branch_sp(3, DominantWeight{{1, 1, 1}});
    CHECK(t == make_repsum({{{1, 1}, 2}, {{1, 0}, 1}}));

    for (int n = 2; n <= 5; ++n) {
        std::vector<int> std_weight(static_cast<size_t>(n), 0);
        std_weight[0] = 1;
        RepSum u = branch_sp(n, DominantWeight{std_weight});
        std::vector<int> child(static_cast<size_t>(n - 1), 0);
        child[0] = 1;
        CHECK(u.multiplicity_of(DominantWeight{child}) == 1);
        child[0] = 0;
        CHECK(u.multiplicity_of(DominantWeight{child}) == 2);
    }
}

TEST_CASE("multiplicity spaces") {
    auto d = sp_multiplicity_space(3, DominantWeight{{1, 1, 1}}, DominantWeight{{1, 1}});
    CHECK(d == std::vector<int>{0, 0, 1});
    auto e = sp_multiplicity_space(4, DominantWeight{{2, 0, 0, 0}}, DominantWeight{{0, 0, 0}});
    CHECK(e == std::vector<int>{2, 0, 0, 0});
    auto f = sp_multiplicity_space(3, DominantWeight{{2, 1, 0}}, DominantWeight{{2, 1}});
    long prod = 1;
    for (int x : f) prod *= x + 1;
    CHECK(prod == branch_sp(3, DominantWeight{{2, 1, 0}}).multiplicity_of(DominantWeight{{2, 1}}));
    CHECK_THROWS_AS(sp_multiplicity_space(3, DominantWeight{{1, 0, 0}}, DominantWeight{{1, 1}}),
                    DomainError);
}

TEST_CASE("symplectic product formula equals the multiplicity-space length product") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& lam : enumerate_dominant(GroupDesc::sp(n), 3)) {
            RepSum s = branch_sp(n, lam);
            for (const auto& [mu, m] : s.terms) {
                auto deg = sp_multiplicity_space(n, lam, mu);
                long prod = 1;
                for (int x : deg) prod *= x + 1;
                CHECK(prod == m);
            }
        }
    }
}

TEST_CASE("orthogonal branching fixtures") {
    CHECK(branch_so_odd(2, DominantWeight{{1, 0}}) == make_repsum({{{1, 0}, 1}, {{0, 0}, 1}}));
    CHECK(branch_so_odd(2, DominantWeight{{1, 1}}) ==
          make_repsum({{{1, 1}, 1}, {{1, 0}, 1}, {{1, -1}, 1}}));
    CHECK(branch_so_even(3, DominantWeight{{1, 1, 1}}) == make_repsum({{{1, 1}, 1}}));
    CHECK(branch_so_even(2, DominantWeight{{2, 2}}) == make_repsum({{{2}, 1}}));
    CHECK(branch_so_even(3, DominantWeight{{1, 0, 0}}) ==
          make_repsum({{{1, 0}, 1}, {{0, 0}, 1}}));
}

TEST_CASE("labeled orthogonal restriction") {
    RepSum s = restrict_o(5, DominantWeight{{1, 1}, OLabel::Plus});
    REQUIRE(s.term_count() == 2);
    CHECK(s.terms[0].first == DominantWeight{{1, 1}, OLabel::Empty});
    CHECK(s.terms[1].first == DominantWeight{{1, 0}, OLabel::Unknown});

    // the parity rule on the standard module
    RepSum t = restrict_o(8, DominantWeight{{1, 0, 0, 0}, OLabel::Plus});
    CHECK(t.multiplicity_of(DominantWeight{{1, 0, 0}, OLabel::Minus}) == 1);
    CHECK(t.multiplicity_of(DominantWeight{{0, 0, 0}, OLabel::Plus}) == 1);
    RepSum tm = restrict_o(8, DominantWeight{{1, 0, 0, 0}, OLabel::Minus});
    CHECK(tm.multiplicity_of(DominantWeight{{1, 0, 0}, OLabel::Plus}) == 1);
    CHECK(tm.multiplicity_of(DominantWeight{{0, 0, 0}, OLabel::Minus}) == 1);

    // trivial with its parity sign
    RepSum u = restrict_o(9, DominantWeight{{0, 0, 0, 0}, OLabel::Plus});
    REQUIRE(u.term_count() == 1);
    CHECK(u.terms[0].first.label == OLabel::Unknown);

    // induced weights split into both signs
    RepSum v = restrict_o(6, DominantWeight{{2, 2, 1}, OLabel::Empty});
    for (const auto& [w, m] : v.terms) CHECK(m == 1);
    CHECK(v.multiplicity_of(DominantWeight{{2, 2}, OLabel::Plus}) == 1);
    CHECK(v.multiplicity_of(DominantWeight{{2, 2}, OLabel::Minus}) == 1);
}

TEST_CASE("labeled restriction conserves dimension") {
    for (int N = 4; N <= 9; ++N) {
        GroupDesc g = GroupDesc::o(N);
        GroupDesc h = GroupDesc::o(N - 1);
        for (const auto& w : enumerate_dominant(g, 2)) {
            Int parent = irrep_dim(g, w);
            RepSum s = restrict_o(N, w);
            Int total = 0;
            for (const auto& [t, m] : s.terms) {
                DominantWeight x = t;
                if (x.label == OLabel::Unknown) x.label = OLabel::Plus;  // dimension ignores the sign
                total += m * irrep_dim(h, x);
            }
            CHECK(total == parent);
        }
    }
}

TEST_CASE("exceptional branching fixtures") {
    RepSum a = branch_g2_sl3(0, 1);
    CHECK(a == make_repsum({{{1, 1, 0}, 1}, {{1, 0, 0}, 1}, {{0, 0, 0}, 1}}));
    Int total = 0;
    for (const auto& [w, m] : a.terms) total += m * irrep_dim(GroupDesc::sl(3), w);
    CHECK(total == 7);

    RepSum b = branch_g2_sl3(0, 2);
    CHECK(b == make_repsum({{{2, 2, 0}, 1},
                            {{2, 1, 0}, 1},
                            {{2, 0, 0}, 1},
                            {{1, 1, 0}, 1},
                            {{1, 0, 0}, 1},
                            {{0, 0, 0}, 1}}));

    RepSum c = branch_g2_sl3(1, 0);
    CHECK(c == make_repsum({{{2, 1, 0}, 1}, {{1, 1, 0}, 1}, {{1, 0, 0}, 1}}));
    Int dim14 = 0;
    for (const auto& [w, m] : c.terms) dim14 += m * irrep_dim(GroupDesc::sl(3), w);
    CHECK(dim14 == 14);
}

TEST_CASE("branching conserves dimension across all families") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : enumerate_dominant(GroupDesc::sl(n + 1), 3))
            CHECK(child_dim_sum(GroupDesc::sl(n), branch_sl(n + 1, w)) ==
                  irrep_dim(GroupDesc::sl(n + 1), w));
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : enumerate_dominant(GroupDesc::sp(n), 3))
            CHECK(child_dim_sum(GroupDesc::sp(n - 1), branch_sp(n, w)) ==
                  irrep_dim(GroupDesc::sp(n), w));
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : enumerate_dominant(GroupDesc::so(2 * n + 1), 3))
            CHECK(child_dim_sum(GroupDesc::so(2 * n), branch_so_odd(n, w)) ==
                  irrep_dim(GroupDesc::so(2 * n + 1), w));
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : enumerate_dominant(GroupDesc::so(2 * n), 3))
            CHECK(child_dim_sum(GroupDesc::so(2 * n - 1), branch_so_even(n, w)) ==
                  irrep_dim(GroupDesc::so(2 * n), w));
    for (int m1 = 0; m1 <= 3; ++m1)
        for (int m2 = 0; m2 <= 3; ++m2) {
            Int total = 0;
            for (const auto& [w, m] : branch_g2_sl3(m1, m2).terms)
                total += m * irrep_dim(GroupDesc::sl(3), w);
            CHECK(total == irrep_dim(GroupDesc::g2(), DominantWeight{{m1, m2}}));
        }
}

TEST_CASE("multiplicity-free branchings stay multiplicity-free") {
    for (const auto& w : enumerate_dominant(GroupDesc::sl(4), 3))
        for (const auto& [t, m] : branch_sl(4, w).terms) CHECK(m == 1);
    for (const auto& w : enumerate_dominant(GroupDesc::so(9), 2))
        for (const auto& [t, m] : branch_so_odd(4, w).terms) CHECK(m == 1);
    for (const auto& w : enumerate_dominant(GroupDesc::so(8), 2))
        for (const auto& [t, m] : branch_so_even(4, w).terms) CHECK(m == 1);
}

TEST_CASE("linear filtrations: printed displays") {
    Filtration f = filtration_sl(4, DominantWeight{{3, 2, 1, 0}});
    REQUIRE(f.length() == 4);
    CHECK(f.level(1) == make_repsum({{{2, 1, 0}, 1}}));
    CHECK(f.level(2) == make_repsum({{{1, 0, 0}, 1}, {{2, 2, 0}, 1}, {{3, 1, 0}, 1}}));
    CHECK(f.level(3) == make_repsum({{{1, 1, 0}, 1}, {{2, 0, 0}, 1}, {{3, 2, 0}, 1}}));
    CHECK(f.level(4) == make_repsum({{{2, 1, 0}, 1}}));

    Filtration g = filtration_sl(4, DominantWeight{{3, 3, 0, 0}});
    REQUIRE(g.length() == 4);
    CHECK(g.level(1) == make_repsum({{{3, 0, 0}, 1}}));
    CHECK(g.level(2) == make_repsum({{{3, 1, 0}, 1}}));
    CHECK(g.level(3) == make_repsum({{{3, 2, 0}, 1}}));
    CHECK(g.level(4) == make_repsum({{{3, 3, 0}, 1}}));

    // the standard module: two levels, trivial then standard
    Filtration h = filtration_sl(5, DominantWeight{{1, 0, 0, 0, 0}});
    REQUIRE(h.length() == 2);
    CHECK(h.level(1) == make_repsum({{{0, 0, 0, 0}, 1}}));
    CHECK(h.level(2) == make_repsum({{{1, 0, 0, 0}, 1}}));
}

TEST_CASE("linear filtrations: first and last levels are irreducible") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& w : enumerate_dominant(GroupDesc::sl(n), 3)) {
            Filtration f = filtration_sl(n, w);
            CHECK(f.level(1).total_multiplicity() == 1);
            CHECK(f.level(f.length()).total_multiplicity() == 1);
            Int total = 0;
            for (const auto& lv : f.levels) total += child_dim_sum(f.levi, lv);
            CHECK(total == irrep_dim(GroupDesc::sl(n), w));
        }
}

TEST_CASE("symplectic filtrations: printed displays") {
    // the standard module
    Filtration s = filtration_sp(4, DominantWeight{{1, 0, 0, 0}});
    REQUIRE(s.max_index() == 1);
    CHECK(s.level(-1) == make_repsum({{{0, 0, 0}, 1}}));
    CHECK(s.level(0) == make_repsum({{{1, 0, 0}, 1}}));
    CHECK(s.level(1) == make_repsum({{{0, 0, 0}, 1}}));

    // the harmonic exterior square
    Filtration a = filtration_sp(4, DominantWeight{{1, 1, 0, 0}});
    REQUIRE(a.max_index() == 1);
    CHECK(a.level(-1) == make_repsum({{{1, 0, 0}, 1}}));
    CHECK(a.level(0) == make_repsum({{{1, 1, 0}, 1}, {{0, 0, 0}, 1}}));
    CHECK(a.level(1) == make_repsum({{{1, 0, 0}, 1}}));

    // the symmetric square
    Filtration b = filtration_sp(4, DominantWeight{{2, 0, 0, 0}});
    REQUIRE(b.max_index() == 2);
    CHECK(b.level(-2) == make_repsum({{{0, 0, 0}, 1}}));
    CHECK(b.level(-1) == make_repsum({{{1, 0, 0}, 1}}));
    CHECK(b.level(0) == make_repsum({{{2, 0, 0}, 1}, {{0, 0, 0}, 1}}));
}

TEST_CASE("symplectic filtrations: small-family tails") {
    // top-entry family
    Filtration c1 = filtration_sp(4, DominantWeight{{3, 0, 0, 0}});
    int k = c1.max_index();
    REQUIRE(k == 3);
    CHECK(c1.level(k) == make_repsum({{{0, 0, 0}, 1}}));
    CHECK(c1.level(k - 1) == make_repsum({{{1, 0, 0}, 1}}));
    CHECK(c1.level(k - 2) == make_repsum({{{2, 0, 0}, 1}, {{0, 0, 0}, 1}}));
    CHECK(c1.level(k - 3) == make_repsum({{{3, 0, 0}, 1}, {{1, 0, 0}, 1}}));

    Filtration c2 = filtration_sp(4, DominantWeight{{3, 1, 0, 0}});
    k = c2.max_index();
    CHECK(c2.level(k) == make_repsum({{{1, 0, 0}, 1}}));
    CHECK(c2.level(k - 1) == make_repsum({{{2, 0, 0}, 1}, {{1, 1, 0}, 1}, {{0, 0, 0}, 1}}));
    CHECK(c2.level(k - 2) ==
          make_repsum({{{3, 0, 0}, 1}, {{2, 1, 0}, 1}, {{1, 0, 0}, 2}}));

    // the depressed variant drops the top entry
    Filtration c2d = filtration_sp(4, DominantWeight{{2, 1, 0, 0}});
    k = c2d.max_index();
    CHECK(c2d.level(k - 2) == make_repsum({{{2, 1, 0}, 1}, {{1, 0, 0}, 2}}));

    Filtration c3 = filtration_sp(4, DominantWeight{{3, 2, 0, 0}});
    k = c3.max_index();
    CHECK(c3.level(k) == make_repsum({{{2, 0, 0}, 1}}));
    CHECK(c3.level(k - 1) == make_repsum({{{3, 0, 0}, 1}, {{2, 1, 0}, 1}, {{1, 0, 0}, 1}}));
    CHECK(c3.level(k - 2) == make_repsum({{{3, 1, 0}, 1},
                                          {{2, 2, 0}, 1},
                                          {{2, 0, 0}, 2},
                                          {{1, 1, 0}, 1},
                                          {{0, 0, 0}, 1}}));

    Filtration c3d = filtration_sp(4, DominantWeight{{2, 2, 0, 0}});
    k = c3d.max_index();
    CHECK(c3d.level(k - 2) == make_repsum({{{2, 2, 0}, 1},
                                           {{2, 0, 0}, 1},
                                           {{1, 1, 0}, 1},
                                           {{0, 0, 0}, 1}}));

    Filtration c4 = filtration_sp(5, DominantWeight{{3, 1, 1, 0, 0}});
    k = c4.max_index();
    CHECK(c4.level(k) == make_repsum({{{1, 1, 0, 0}, 1}}));
    CHECK(c4.level(k - 1) ==
          make_repsum({{{2, 1, 0, 0}, 1}, {{1, 1, 1, 0}, 1}, {{1, 0, 0, 0}, 1}}));
    CHECK(c4.level(k - 2) == make_repsum({{{3, 1, 0, 0}, 1},
                                          {{2, 1, 1, 0}, 1},
                                          {{2, 0, 0, 0}, 1},
                                          {{1, 1, 0, 0}, 2}}));

    Filtration c4d = filtration_sp(5, DominantWeight{{2, 1, 1, 0, 0}});
    k = c4d.max_index();
    CHECK(c4d.level(k - 2) == make_repsum({{{2, 1, 1, 0}, 1},
                                           {{2, 0, 0, 0}, 1},
                                           {{1, 1, 0, 0}, 2}}));

    // rank-four and rank-five exceptional families
    Filtration e1 = filtration_sp(4, DominantWeight{{2, 1, 1, 1}});
    k = e1.max_index();
    CHECK(e1.level(k) == make_repsum({{{1, 1, 1}, 1}}));
    CHECK(e1.level(k - 1) == make_repsum({{{2, 1, 1}, 1}, {{1, 1, 0}, 1}}));
    CHECK(e1.level(k - 2).multiplicity_of(DominantWeight{{2, 1, 0}}) == 1);
    CHECK(e1.level(k - 2).multiplicity_of(DominantWeight{{1, 1, 1}}) == 2);

    Filtration e2 = filtration_sp(5, DominantWeight{{2, 1, 1, 1, 1}});
    k = e2.max_index();
    CHECK(e2.level(k) == make_repsum({{{1, 1, 1, 1}, 1}}));
    CHECK(e2.level(k - 1) == make_repsum({{{2, 1, 1, 1}, 1}, {{1, 1, 1, 0}, 1}}));
    CHECK(e2.level(k - 2).multiplicity_of(DominantWeight{{2, 1, 1, 0}}) == 1);
    CHECK(e2.level(k - 2).multiplicity_of(DominantWeight{{1, 1, 1, 1}}) == 2);
}

TEST_CASE("symplectic filtrations: wedge shapes") {
    Filtration f = filtration_sp(4, DominantWeight{{1, 1, 1, 0}});
    REQUIRE(f.max_index() == 1);
    CHECK(f.level(-1) == make_repsum({{{1, 1, 0}, 1}}));
    CHECK(f.level(0) == make_repsum({{{1, 1, 1}, 1}, {{1, 0, 0}, 1}}));

    Filtration g = filtration_sp(5, DominantWeight{{1, 1, 1, 1, 1}});
    REQUIRE(g.max_index() == 1);
    CHECK(g.level(-1) == make_repsum({{{1, 1, 1, 1}, 1}}));
    CHECK(g.level(0) == make_repsum({{{1, 1, 1, 0}, 1}}));
}

TEST_CASE("symplectic filtrations are palindromic and flatten to the branching") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : enumerate_dominant(GroupDesc::sp(n), 3)) {
            Filtration f = filtration_sp(n, w);
            for (int i = 0; i <= f.max_index(); ++i) CHECK(f.level(i) == f.level(-i));
            CHECK(f.flattened() == branch_sp(n, w));
        }
}

TEST_CASE("emitted children satisfy their dominance invariants") {
    for (const auto& w : enumerate_dominant(GroupDesc::sp(4), 3))
        for (const auto& [t, m] : branch_sp(4, w).terms)
            CHECK_NOTHROW(validate_weight(GroupDesc::sp(3), t));
    for (const auto& w : enumerate_dominant(GroupDesc::so(9), 2))
        for (const auto& [t, m] : branch_so_odd(4, w).terms)
            CHECK_NOTHROW(validate_weight(GroupDesc::so(8), t));
}
