#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whc/collapse.hpp"
#include "whc/homology.hpp"

using namespace whc;

namespace {

SimplicialComplex cd(const std::vector<Face>& tops) {
    return SimplicialComplex::close_downward(tops);
}

SimplicialComplex sphere2() {
    return cd({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

// Classic six-vertex triangulation of the projective plane (antipodal
// icosahedron): ten triangles, every edge in exactly two of them.
SimplicialComplex projective_plane() {
    return cd({{1, 2, 3},
               {1, 3, 4},
               {1, 4, 5},
               {1, 5, 6},
               {1, 2, 6},
               {2, 3, 5},
               {3, 5, 6},
               {3, 4, 6},
               {2, 4, 6},
               {2, 4, 5}});
}

// Seven-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
SimplicialComplex torus7() {
    std::vector<Face> tops;
    for (int i = 0; i < 7; ++i) {
        Face a = {i, (i + 1) % 7, (i + 3) % 7};
        Face b = {i, (i + 2) % 7, (i + 3) % 7};
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        tops.push_back(a);
        tops.push_back(b);
    }
    return cd(tops);
}

bool equal_profiles(const HomologyProfile& a, const HomologyProfile& b) {
    return a.betti == b.betti && a.torsion == b.torsion;
}

}  // namespace

TEST_CASE("boundary matrices") {
    SUBCASE("edge") {
        auto mats = boundary_matrices(cd({{0, 1}}));
        REQUIRE(mats.size() == 1);
        const BoundaryMatrix& b = mats[0];
        CHECK(b.k == 1);
        CHECK(b.rows == std::vector<Face>{{0}, {1}});
        CHECK(b.cols == std::vector<Face>{{0, 1}});
        // d{0,1} = {1} - {0}: dropping position 0 gives +{1}.
        REQUIRE(b.entries[0].size() == 2);
        CHECK(b.entries[0][0] == std::pair<int, int>{1, 1});
        CHECK(b.entries[0][1] == std::pair<int, int>{0, -1});
    }
    SUBCASE("triangle") {
        auto mats = boundary_matrices(cd({{0, 1, 2}}));
        REQUIRE(mats.size() == 2);
        const BoundaryMatrix& b2 = mats[1];
        // d{0,1,2} = {1,2} - {0,2} + {0,1}; columns/rows in lex order.
        REQUIRE(b2.entries.size() == 1);
        CHECK(b2.rows == std::vector<Face>{{0, 1}, {0, 2}, {1, 2}});
        CHECK(b2.entries[0] ==
              std::vector<std::pair<int, int>>{{2, 1}, {1, -1}, {0, 1}});
    }
    SUBCASE("composition vanishes") {
        for (const auto& K : {cd({{0, 1, 2, 3}}), sphere2(), projective_plane(), torus7(),
                              cd({{0, 1, 2}, {2, 3}})}) {
            CHECK(boundaries_compose_to_zero(K));
        }
    }
    SUBCASE("vertex-only complex has no matrices") {
        CHECK(boundary_matrices(cd({{0}, {1}})).empty());
    }
}

TEST_CASE("smith normal form") {
    SUBCASE("identity") {
        auto s = smith_normal_form(SparseIntMatrix::from_dense({{1, 0}, {0, 1}}));
        CHECK(s.rank == 2);
        CHECK(s.invariant_factors == std::vector<mpz_class>{1, 1});
    }
    SUBCASE("single factor") {
        auto s = smith_normal_form(SparseIntMatrix::from_dense({{2, 0}, {0, 0}}));
        CHECK(s.rank == 1);
        CHECK(s.invariant_factors == std::vector<mpz_class>{2});
    }
    SUBCASE("zero matrix") {
        auto s = smith_normal_form(SparseIntMatrix::from_dense({{0, 0}, {0, 0}}));
        CHECK(s.rank == 0);
        CHECK(s.invariant_factors.empty());
    }
    SUBCASE("divisor chain from coprime diagonal") {
        auto s = smith_normal_form(SparseIntMatrix::from_dense({{2, 0, 0}, {0, 3, 0}}));
        CHECK(s.invariant_factors == std::vector<mpz_class>{1, 6});
    }
    SUBCASE("dense example") {
        // det = -8, gcd of entries 2, so factors are (2, 4).
        auto s = smith_normal_form(SparseIntMatrix::from_dense({{2, 4}, {6, 8}}));
        CHECK(s.invariant_factors == std::vector<mpz_class>{2, 4});
    }
    SUBCASE("sphere boundary map") {
        auto mats = boundary_matrices(sphere2());
        auto s = smith_normal_form(SparseIntMatrix::from_boundary(mats[1]));
        CHECK(s.rank == 3);
        CHECK(s.invariant_factors == std::vector<mpz_class>{1, 1, 1});
    }
    SUBCASE("entries survive large intermediate growth") {
        auto s = smith_normal_form(SparseIntMatrix::from_dense(
            {{1000000007LL, 2}, {3, 999999937LL}}));
        CHECK(s.rank == 2);
        CHECK(s.invariant_factors[0] == 1);
        // d1*d2 = |det| = 1000000007*999999937 - 6
        mpz_class det = mpz_class("1000000007") * mpz_class("999999937") - 6;
        CHECK(s.invariant_factors[1] == det);
    }
}

TEST_CASE("homology profiles of the classics") {
    SUBCASE("point") {
        HomologyProfile p = homology(cd({{0}}));
        CHECK(p.betti == std::vector<long long>{1});
        CHECK(is_point_like(cd({{0}})));
    }
    SUBCASE("solid simplices are point-like") {
        for (const auto& K : {cd({{0, 1}}), cd({{0, 1, 2}}), cd({{0, 1, 2, 3}})}) {
            CHECK(is_point_like(K));
        }
    }
    SUBCASE("two components") {
        HomologyProfile p = homology(cd({{0, 1}, {2, 3}}));
        CHECK(p.betti == std::vector<long long>{2, 0});
        CHECK_FALSE(is_point_like(cd({{0, 1}, {2, 3}})));
    }
    SUBCASE("circle") {
        HomologyProfile p = homology(cd({{0, 1}, {0, 2}, {1, 2}}));
        CHECK(p.betti == std::vector<long long>{1, 1});
    }
    SUBCASE("two-sphere") {
        HomologyProfile p = homology(sphere2());
        CHECK(p.betti == std::vector<long long>{1, 0, 1});
        CHECK_FALSE(is_point_like(sphere2()));
    }
    SUBCASE("projective plane has 2-torsion") {
        SimplicialComplex K = projective_plane();
        CHECK(K.euler_characteristic() == 1);
        HomologyProfile p = homology(K);
        CHECK(p.betti == std::vector<long long>{1, 0, 0});
        REQUIRE(p.torsion[1].size() == 1);
        CHECK(p.torsion[1][0] == 2);
        CHECK(p.torsion[2].empty());
        CHECK_FALSE(is_point_like(K));  // chi = 1 but torsion says no
    }
    SUBCASE("torus") {
        SimplicialComplex K = torus7();
        CHECK(K.euler_characteristic() == 0);
        HomologyProfile p = homology(K);
        CHECK(p.betti == std::vector<long long>{1, 2, 1});
        for (const auto& t : p.torsion) CHECK(t.empty());
    }
}

TEST_CASE("profile printing") {
    HomologyProfile p = homology(projective_plane());
    CHECK(p.to_string() ==
          "H_0 = Z^1\n"
          "H_1 = Z^0 ⊕ Z/2\n"
          "H_2 = Z^0\n");
}

TEST_CASE("homology is collapse-invariant") {
    SimplicialComplex K = cd({{0, 1, 2}, {1, 2, 3}, {3, 4}});
    HomologyProfile before = homology(K);
    for (const auto& [sigma, tau] : K.free_faces()) {
        SimplicialComplex L = K.elementary_collapse(sigma);
        CHECK(equal_profiles(before, homology(L)));
    }
}

TEST_CASE("betti euler sum matches face count on torsion-free complexes") {
    for (const auto& K : {cd({{0, 1, 2}, {2, 3}}), sphere2(), torus7(), cd({{0, 1, 2, 3}})}) {
        HomologyProfile p = homology(K);
        long long chi = 0;
        for (std::size_t k = 0; k < p.betti.size(); ++k)
            chi += (k % 2 == 0) ? p.betti[k] : -p.betti[k];
        CHECK(chi == K.euler_characteristic());
    }
}

TEST_CASE("empty complex is rejected") {
    CHECK_THROWS_AS(homology(SimplicialComplex{}), std::invalid_argument);
}
