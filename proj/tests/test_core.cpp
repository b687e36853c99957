#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whc/core.hpp"

using namespace whc;

namespace {

SimplicialComplex full_triangle() { return SimplicialComplex::close_downward({{0, 1, 2}}); }

SimplicialComplex hollow_triangle() {
    return SimplicialComplex::close_downward({{0, 1}, {0, 2}, {1, 2}});
}

// Triangle with a dangling edge hanging off vertex 2.
SimplicialComplex triangle_with_whisker() {
    return SimplicialComplex::close_downward({{0, 1, 2}, {2, 3}});
}

}  // namespace

TEST_CASE("face validity and parsing") {
    CHECK(is_valid_face({0}));
    CHECK(is_valid_face({0, 1, 5}));
    CHECK_FALSE(is_valid_face({}));
    CHECK_FALSE(is_valid_face({1, 1}));
    CHECK_FALSE(is_valid_face({2, 1}));
    CHECK_THROWS_AS(check_face({3, 3}), std::invalid_argument);

    CHECK(parse_face("2 0 1") == Face{0, 1, 2});  // parser sorts
    CHECK(parse_face("7") == Face{7});
    CHECK(face_to_string(Face{0, 1, 2}) == "0 1 2");
    CHECK_THROWS_AS(parse_face(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_face("1 x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_face("1 1"), std::invalid_argument);
}

TEST_CASE("face subset and boundary") {
    CHECK(face_subset({0, 2}, {0, 1, 2}));
    CHECK(face_subset({0, 1, 2}, {0, 1, 2}));
    CHECK_FALSE(face_subset({0, 3}, {0, 1, 2}));

    // Boundary order: drop position 0, then 1, then 2.
    std::vector<Face> b = boundary_faces({0, 1, 2});
    REQUIRE(b.size() == 3);
    CHECK(b[0] == Face{1, 2});
    CHECK(b[1] == Face{0, 2});
    CHECK(b[2] == Face{0, 1});
    CHECK(boundary_faces({5}).empty());
}

TEST_CASE("downward closure") {
    SimplicialComplex K = full_triangle();
    CHECK(K.size() == 7);  // 3 vertices + 3 edges + 1 triangle
    CHECK(K.dim() == 2);
    CHECK(K.euler_characteristic() == 1);
    CHECK(K.count_dim(0) == 3);
    CHECK(K.count_dim(1) == 3);
    CHECK(K.count_dim(2) == 1);
    CHECK(K.maximal_faces() == std::set<Face>{{0, 1, 2}});

    // Redundant and duplicate generators change nothing.
    SimplicialComplex K2 = SimplicialComplex::close_downward({{0, 1, 2}, {0, 1}, {0, 1, 2}});
    CHECK(K == K2);

    CHECK_THROWS_AS(SimplicialComplex::close_downward({{1, 0}}), std::invalid_argument);
}

TEST_CASE("free faces of the solid triangle") {
    // Every proper face lies in the unique maximal face, so all six are free.
    SimplicialComplex K = full_triangle();
    auto ff = K.free_faces();
    REQUIRE(ff.size() == 6);
    std::vector<Face> expect = {{0}, {0, 1}, {0, 2}, {1}, {1, 2}, {2}};
    for (std::size_t i = 0; i < ff.size(); ++i) {
        CHECK(ff[i].first == expect[i]);
        CHECK(ff[i].second == Face{0, 1, 2});
    }
}

TEST_CASE("hollow triangle has no free face") {
    // Each edge is maximal; each vertex lies in two maximal edges.
    SimplicialComplex K = hollow_triangle();
    CHECK(K.size() == 6);
    CHECK(K.euler_characteristic() == 0);
    CHECK(K.free_faces().empty());
    CHECK_FALSE(K.free_coface({0}).first);
    CHECK_FALSE(K.free_coface({0, 1}).first);
}

TEST_CASE("boundary of the tetrahedron has no free face") {
    SimplicialComplex K = SimplicialComplex::close_downward(
        {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(K.size() == 14);
    CHECK(K.euler_characteristic() == 2);
    CHECK(K.free_faces().empty());
}

TEST_CASE("free faces with a whisker") {
    SimplicialComplex K = triangle_with_whisker();
    auto ff = K.free_faces();
    std::set<Face> sigmas;
    for (auto& [s, t] : ff) sigmas.insert(s);
    // Vertex 2 sits in two maximal faces; the whisker edge {2,3} is maximal.
    CHECK(sigmas == std::set<Face>{{0}, {0, 1}, {0, 2}, {1}, {1, 2}, {3}});

    auto [ok3, tau3] = K.free_coface({3});
    REQUIRE(ok3);
    CHECK(tau3 == Face{2, 3});

    CHECK(K.elementary_collapse({3}) == full_triangle());
    CHECK_THROWS_AS(K.elementary_collapse({2}), std::invalid_argument);
    CHECK_THROWS_AS(K.elementary_collapse({0, 1, 2}), std::invalid_argument);  // maximal
    CHECK_THROWS_AS(K.elementary_collapse({5}), std::invalid_argument);        // absent
}

TEST_CASE("collapsing a free vertex removes its whole star") {
    SimplicialComplex K = full_triangle();
    SimplicialComplex L = K.elementary_collapse({0});
    CHECK(L == SimplicialComplex::close_downward({{1, 2}}));
}

TEST_CASE("star") {
    SimplicialComplex K = triangle_with_whisker();
    CHECK(K.star({2}) ==
          std::set<Face>{{2}, {0, 2}, {1, 2}, {2, 3}, {0, 1, 2}});
    CHECK(K.star({0, 1}) == std::set<Face>{{0, 1}, {0, 1, 2}});
    CHECK(K.star({9}).empty());
}

TEST_CASE("relabel") {
    SimplicialComplex K = full_triangle();
    SimplicialComplex R = K.relabel({{0, 5}, {1, 3}, {2, 7}});
    CHECK(R == SimplicialComplex::close_downward({{3, 5, 7}}));

    // Unmapped vertices keep their ids.
    SimplicialComplex R2 = K.relabel({{0, 9}});
    CHECK(R2 == SimplicialComplex::close_downward({{1, 2, 9}}));

    CHECK_THROWS_AS(K.relabel({{0, 1}}), std::invalid_argument);  // merges 0 and 1
}

TEST_CASE("set-level helpers") {
    SimplicialComplex A = full_triangle();
    SimplicialComplex B = SimplicialComplex::close_downward({{2, 3}});
    SimplicialComplex U = A.union_with(B);
    CHECK(U == triangle_with_whisker());
    CHECK(A.is_subcomplex_of(U));
    CHECK(B.is_subcomplex_of(U));
    CHECK_FALSE(U.is_subcomplex_of(A));

    // Closure of the faces outside A: the whisker plus its endpoints.
    SimplicialComplex D = U.difference_closure(A);
    CHECK(D == B);

    // Removing a lower face of a survivor re-adds it through the closure.
    SimplicialComplex onlyv = SimplicialComplex::close_downward({{0}});
    CHECK(A.difference_closure(onlyv) == A);
}

TEST_CASE("vertices and hashing") {
    SimplicialComplex K = triangle_with_whisker();
    CHECK(K.vertices() == std::set<int>{0, 1, 2, 3});

    SimplicialComplex K2 = SimplicialComplex::close_downward({{2, 3}, {0, 1, 2}});
    CHECK(K.canonical_hash() == K2.canonical_hash());
    CHECK(K.canonical_hash() != full_triangle().canonical_hash());
    CHECK(full_triangle().canonical_hash() != hollow_triangle().canonical_hash());
}

TEST_CASE("edge paths") {
    SimplicialComplex K = SimplicialComplex::close_downward({{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK(is_path(K, {{0, 1}, {1, 2}, {2, 3}}));
    CHECK(is_path(K, {{2, 1}, {1, 0}}));              // orientation per edge is free
    CHECK_FALSE(is_path(K, {{0, 1}, {2, 3}}));        // broken chain
    CHECK_FALSE(is_path(K, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}));  // revisits 0
    CHECK_FALSE(is_path(K, {{0, 2}}));                // not an edge of K
    CHECK_FALSE(is_path(K, {}));
}

TEST_CASE("labeled complex validation") {
    LabeledComplex lc;
    lc.complex = full_triangle();
    lc.face_labels["top"] = {0, 1, 2};
    lc.path_labels["rim"] = {{0, 1}, {1, 2}};
    CHECK_NOTHROW(lc.check());

    lc.face_labels["ghost"] = {0, 3};
    CHECK_THROWS_AS(lc.check(), std::invalid_argument);
    lc.face_labels.erase("ghost");
    lc.path_labels["bad"] = {{0, 1}, {2, 1}};
    CHECK_THROWS_AS(lc.check(), std::invalid_argument);
}
