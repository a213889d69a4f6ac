#include <catch2/catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "otri/constructions.hpp"
#include "otri/cover.hpp"
#include "otri/oracle.hpp"
#include "otri/triangles.hpp"

using otri::build_incidence_map;
using otri::ConstructionKind;
using otri::ConstructionSpec;
using otri::count_matmul;
using otri::gen_bounded_collinear;
using otri::gen_general_position;
using otri::gen_prop_1_1;
using otri::gen_prop_3_1;
using otri::gen_three_parallel;
using otri::Point;
using otri::PointSet;

namespace {

bool same_points(const PointSet& a, const PointSet& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!(a[i] == b[i])) return false;
    return true;
}

int off_axis_count(const PointSet& X) {
    int c = 0;
    for (const auto& p : X) c += p.y != 0;
    return c;
}

}  // namespace

TEST_CASE("generators are deterministic per seed", "[constructions]") {
    CHECK(same_points(gen_prop_1_1(12, 2, 2, 42), gen_prop_1_1(12, 2, 2, 42)));
    CHECK_FALSE(same_points(gen_prop_1_1(12, 2, 2, 42), gen_prop_1_1(12, 2, 2, 43)));
    CHECK(same_points(gen_general_position(10, 400, 5), gen_general_position(10, 400, 5)));
    CHECK(same_points(gen_three_parallel(16, 3, 9), gen_three_parallel(16, 3, 9)));
    CHECK(same_points(gen_prop_3_1(14, 2, 2, 5, 1), gen_prop_3_1(14, 2, 2, 5, 1)));
    CHECK(same_points(gen_bounded_collinear(12, 4, 8), gen_bounded_collinear(12, 4, 8)));

    ConstructionSpec spec;
    spec.kind = ConstructionKind::prop_1_1;
    spec.n = 12;
    spec.k = 2;
    spec.c = 2;
    spec.seed = 42;
    CHECK(same_points(otri::generate(spec), gen_prop_1_1(12, 2, 2, 42)));
}

TEST_CASE("axis construction shape and bound", "[constructions]") {
    const std::int64_t n = 10, k = 2;
    const auto X = gen_prop_1_1(n, k, 2, 1);
    REQUIRE(X.size() == 10);
    CHECK(off_axis_count(X) == 2 * k - 1);
    const auto map = build_incidence_map(X);
    CHECK(map.max_collinear() == n - 2 * k + 1);

    // no 3 off-axis points collinear; no off-axis pair line hits an axis point
    std::vector<std::uint32_t> off, axis;
    for (std::uint32_t i = 0; i < X.size(); ++i) (X[i].y == 0 ? axis : off).push_back(i);
    for (std::size_t a = 0; a < off.size(); ++a)
        for (std::size_t b = a + 1; b < off.size(); ++b) {
            for (std::size_t c = b + 1; c < off.size(); ++c)
                CHECK(otri::orient(X[off[a]], X[off[b]], X[off[c]]) != 0);
            for (auto p : axis) CHECK(otri::orient(X[off[a]], X[off[b]], X[p]) != 0);
        }

    const auto tc = count_matmul(X, map, 2);
    CHECK(tc.count <= 2 * k * k * n);
    CHECK(tc.count == otri::count_reference(X, 2));

    CHECK_FALSE(otri::coverable(X, 2).has_value());
    CHECK(otri::coverable(X, 3).has_value());
}

TEST_CASE("axis construction rejects bad parameters", "[constructions]") {
    CHECK_THROWS_WITH(gen_prop_1_1(5, 2, 2, 1), Catch::Matchers::ContainsSubstring("n >= 2k+c"));
    CHECK_THROWS_WITH(gen_prop_1_1(10, 1, 2, 1), Catch::Matchers::ContainsSubstring("k >= 2"));
    CHECK_THROWS_WITH(gen_prop_1_1(10, 2, 1, 1), Catch::Matchers::ContainsSubstring("c >= 2"));
}

TEST_CASE("two-rail construction shape and triangle count", "[constructions]") {
    const auto X = gen_prop_3_1(11, 2, 2, 4, 3);
    REQUIRE(X.size() == 11);
    int on_l0 = 0, on_l1 = 0, elsewhere = 0;
    for (const auto& p : X) {
        if (p.y == 0)
            ++on_l0;
        else if (p.y == 1)
            ++on_l1;
        else
            ++elsewhere;
    }
    CHECK(on_l0 == 7);
    CHECK(on_l1 == 3);
    CHECK(elsewhere == 1);

    const auto map = build_incidence_map(X);
    CHECK(count_matmul(X, map, 2).count == 21);

    // the only collinear triples lie inside y=0 or y=1
    for (std::uint32_t i = 0; i < X.size(); ++i)
        for (std::uint32_t j = i + 1; j < X.size(); ++j)
            for (std::uint32_t k = j + 1; k < X.size(); ++k) {
                if (otri::orient(X[i], X[j], X[k]) != 0) continue;
                const bool same_rail = X[i].y == X[j].y && X[j].y == X[k].y &&
                                       (X[i].y == 0 || X[i].y == 1);
                CHECK(same_rail);
            }
}

TEST_CASE("two-rail triangles bound and rail occupancy", "[constructions]") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const std::int64_t n = 16, k = 2, c = 2, t = 6;
        const auto X = gen_prop_3_1(n, k, c, t, seed);
        const auto map = build_incidence_map(X);
        const auto tc = count_matmul(X, map, c);
        CHECK(tc.count <= static_cast<std::uint64_t>((2 * k - 3) * n * t));
        // c-ordinary triangles use each rail at most once
        for (const auto& tr : otri::report_all(X, map, c)) {
            for (auto rail : {0, 1}) {
                int on_rail = 0;
                for (auto idx : {tr.i, tr.j, tr.k}) on_rail += X[idx].y == rail;
                CHECK(on_rail <= 1);
            }
        }
    }
    CHECK_THROWS_WITH(gen_prop_3_1(20, 2, 2, 3, 1),
                      Catch::Matchers::ContainsSubstring("t >= 2k+c-2"));
    CHECK_THROWS_WITH(gen_prop_3_1(5, 2, 2, 4, 1),
                      Catch::Matchers::ContainsSubstring("n - t >= 2"));
    CHECK(otri::prop_3_1_t_exceeds_guidance(11, 4));
    CHECK_FALSE(otri::prop_3_1_t_exceeds_guidance(40, 4));
}

TEST_CASE("three parallel lines shape", "[constructions]") {
    const auto X = gen_three_parallel(12, 2, 7);
    REQUIRE(X.size() == 12);
    int occ[3] = {0, 0, 0};
    for (const auto& p : X) {
        REQUIRE((p.y >= 0 && p.y <= 2));
        ++occ[static_cast<int>(p.y)];
    }
    CHECK(occ[0] == 4);
    CHECK(occ[1] == 4);
    CHECK(occ[2] == 4);

    // no collinear triple crosses between the lines
    for (std::uint32_t i = 0; i < X.size(); ++i)
        for (std::uint32_t j = i + 1; j < X.size(); ++j)
            for (std::uint32_t k = j + 1; k < X.size(); ++k)
                if (otri::orient(X[i], X[j], X[k]) == 0)
                    CHECK((X[i].y == X[j].y && X[j].y == X[k].y));

    CHECK_THROWS_WITH(gen_three_parallel(13, 2, 1), Catch::Matchers::ContainsSubstring("even"));
    CHECK_THROWS_WITH(gen_three_parallel(12, 4, 1), Catch::Matchers::ContainsSubstring("t <= n/4"));
    CHECK_THROWS_WITH(gen_three_parallel(12, 1, 1), Catch::Matchers::ContainsSubstring("t >= 2"));
}

TEST_CASE("three parallel lines: rich rails force one vertex per line", "[constructions]") {
    // occupancies 21, 21, 18 all exceed 17, so every 17-ordinary triangle
    // takes exactly one vertex from each line
    const auto X = gen_three_parallel(60, 9, 11);
    const auto map = build_incidence_map(X);
    const auto tris = otri::report_all(X, map, 17);
    CHECK(tris.size() == count_matmul(X, map, 17).count);
    for (const auto& t : tris) {
        std::set<otri::Int> levels{X[t.i].y, X[t.j].y, X[t.k].y};
        CHECK(levels == std::set<otri::Int>{0, 1, 2});
    }
}

TEST_CASE("general position generator", "[constructions]") {
    const auto X5 = gen_general_position(5, 100, 2);
    const auto m5 = build_incidence_map(X5);
    CHECK(m5.entries().size() == 10);
    CHECK(m5.max_collinear() == 2);

    const auto X30 = gen_general_position(30, 4 * 30 * 30, 9);
    const auto m30 = build_incidence_map(X30);
    CHECK(m30.max_collinear() == 2);
    CHECK(count_matmul(X30, m30, 2).count == 4060);  // C(30,3)

    CHECK(gen_general_position(3, 36, 1).size() == 3);
    CHECK_THROWS_WITH(gen_general_position(10, 100, 1),
                      Catch::Matchers::ContainsSubstring("bbox side >= 4*n^2"));
}

TEST_CASE("bounded collinear generator", "[constructions]") {
    CHECK(build_incidence_map(gen_bounded_collinear(10, 5, 3)).max_collinear() == 5);
    CHECK(build_incidence_map(gen_bounded_collinear(10, 2, 3)).max_collinear() == 2);
    CHECK(build_incidence_map(gen_bounded_collinear(10, 10, 3)).max_collinear() == 10);
    CHECK_THROWS_WITH(gen_bounded_collinear(10, 1, 3),
                      Catch::Matchers::ContainsSubstring("2 <= m <= n"));
    CHECK_THROWS_WITH(gen_bounded_collinear(10, 11, 3),
                      Catch::Matchers::ContainsSubstring("2 <= m <= n"));
}
