#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobord/snc.hpp"

using namespace cobord;

namespace {

SncConfig plane_two_lines()  // d = 2, components meeting in a point
{
    return make_config(2, {"E1", "E2"}, {0b01, 0b10, 0b11});
}

SncConfig space_three_planes()  // d = 3, full face collection
{
    return make_config(3, {"E1", "E2", "E3"}, {1, 2, 3, 4, 5, 6, 7});
}

PseudoDiv dv(std::vector<std::uint32_t> mults)
{
    return PseudoDiv::divisorial(CartierDiv{std::move(mults)});
}

// Principality of the monomial ideal (x^v : v in vs) checked by
// straight divisibility enumeration: some generator must divide all
// others.
bool naive_principal(const std::vector<std::vector<std::uint32_t>>& vs)
{
    for (const auto& cand : vs) {
        bool divides_all = true;
        for (const auto& other : vs)
            for (std::size_t i = 0; i < cand.size(); ++i)
                if (cand[i] > other[i])
                    divides_all = false;
        if (divides_all)
            return true;
    }
    return false;
}

}  // namespace

TEST_CASE("config validation")
{
    CHECK_THROWS(make_config(2, {"E1", "E2"}, {0b11}));   // not downward closed
    CHECK_THROWS(make_config(1, {"E1", "E2"}, {0b01, 0b10, 0b11}));  // dim bound
    CHECK_NOTHROW(make_config(2, {"E1", "E2"}, {0b01}));  // E2 empty is fine
    SncConfig cfg = plane_two_lines();
    CHECK(cfg.meet(0) == std::vector<std::uint32_t>{0, 1});
    CHECK(cfg.meet(0b01) == std::vector<std::uint32_t>{1});
}

TEST_CASE("pseudo-divisor sums")
{
    CHECK(pd_sum(dv({1, 0}), dv({0, 1})) == dv({1, 1}));
    CHECK(pd_sum(dv({2, 1}), dv({0, 0})) == dv({2, 1}));  // zero pseudo-divisor

    BundleExpr L;
    L.component_part = {0, 0};
    L.free_part["L"] = 1;
    PseudoDiv g = pd_sum(dv({1, 0}), PseudoDiv::global(L));
    CHECK(g.is_global());
    CHECK(g.bundle().component_part == std::vector<std::int64_t>{1, 0});
    CHECK(g.bundle().free_part.at("L") == 1);
}

TEST_CASE("supported_in")
{
    CHECK(supported_in(dv({1, 0}), dv({2, 1})));
    CHECK(!supported_in(dv({1, 0}), dv({0, 1})));
    CHECK(supported_in(dv({1, 1}), PseudoDiv::global(BundleExpr{})));
    CHECK(supported_in(PseudoDiv::global(BundleExpr{}), PseudoDiv::global(BundleExpr{})));
    CHECK(!supported_in(PseudoDiv::global(BundleExpr{}), dv({1, 1})));
    CHECK(supported_in(dv({0, 0}), dv({0, 0})));  // empty in empty
}

TEST_CASE("face_in_support")
{
    SncConfig cfg = plane_two_lines();
    CHECK(face_in_support(cfg, 0b01, dv({1, 0})));
    CHECK(!face_in_support(cfg, 0, dv({1, 1})));
    CHECK(face_in_support(cfg, 0, PseudoDiv::global(BundleExpr{})));
    CHECK(!face_in_support(cfg, 0b10, dv({1, 0})));
    CHECK_THROWS(face_in_support(make_config(2, {"E1", "E2"}, {0b01, 0b10}), 0b11, dv({1, 0})));
}

TEST_CASE("leading pseudo-divisor")
{
    SncConfig cfg = plane_two_lines();
    CHECK(leading(cfg, 0, {dv({1, 0})}) == std::size_t{0});
    CHECK(leading(cfg, 0b01, {dv({1, 0}), dv({0, 1})}) == std::size_t{1});
    CHECK(!leading(cfg, 0b11, {dv({1, 0}), dv({0, 1})}).has_value());
    CHECK(!leading(cfg, 0, PseudoSeq{}).has_value());
}

TEST_CASE("intersection_is_cartier on the ambient face")
{
    SncConfig cfg = plane_two_lines();
    std::vector<FaceRestriction> one{{false, {2, 1}}};
    CHECK(intersection_is_cartier(cfg, 0, one));

    std::vector<FaceRestriction> bad{{false, {2, 1}}, {false, {1, 2}}};
    CHECK(!intersection_is_cartier(cfg, 0, bad));
    CHECK(!naive_principal({{2, 1}, {1, 2}}));

    std::vector<FaceRestriction> chain{{false, {1, 0}}, {false, {2, 0}}};
    CHECK(intersection_is_cartier(cfg, 0, chain));
    CHECK(naive_principal({{1, 0}, {2, 0}}));

    // A zero restriction empties the intersection.
    std::vector<FaceRestriction> with_zero{{false, {2, 1}}, {false, {0, 0}}, {false, {1, 2}}};
    CHECK(intersection_is_cartier(cfg, 0, with_zero));

    // Incomparable vectors with the minimum attained are principal.
    std::vector<FaceRestriction> min_attained{{false, {1, 0}}, {false, {0, 2}}, {false, {0, 0}}};
    CHECK(intersection_is_cartier(cfg, 0, min_attained));
    CHECK(naive_principal({{1, 0}, {0, 2}, {0, 0}}));
}

TEST_CASE("intersection principality agrees with naive divisibility everywhere")
{
    // Exhaust pairs and triples of vectors on the two-line frame; the
    // only deep face is {1,2}, so principality there is exactly the
    // divisibility scan.
    SncConfig cfg = plane_two_lines();
    for (std::uint32_t a0 = 0; a0 <= 2; ++a0)
        for (std::uint32_t a1 = 0; a1 <= 2; ++a1)
            for (std::uint32_t b0 = 0; b0 <= 2; ++b0)
                for (std::uint32_t b1 = 0; b1 <= 2; ++b1) {
                    std::vector<std::uint32_t> a{a0, a1}, b{b0, b1};
                    bool zero_a = a0 == 0 && a1 == 0;
                    bool zero_b = b0 == 0 && b1 == 0;
                    std::vector<FaceRestriction> rs{{false, a}, {false, b}};
                    bool expected =
                        zero_a || zero_b || (naive_principal({{a0}, {b0}}) &&
                                             naive_principal({{a1}, {b1}}) &&
                                             naive_principal({a, b}));
                    CHECK(intersection_is_cartier(cfg, 0, rs) == expected);
                }
}

TEST_CASE("face_map_admissible: the spec triple")
{
    SncConfig cfg = space_three_planes();
    CHECK(face_map_admissible(cfg, 0, {dv({1, 0, 0})}));  // single divisor
    CHECK(face_map_admissible(cfg, 0, {dv({1, 1, 0}), dv({2, 1, 0})}));
    CHECK(!face_map_admissible(cfg, 0, {dv({2, 1, 0}), dv({1, 2, 0})}));
}

TEST_CASE("divisor admissibility and failure diagnostics")
{
    SncConfig cfg = space_three_planes();
    CHECK(divisor_admissible(cfg, CartierDiv{{0, 0, 0}}, {dv({2, 1, 0}), dv({1, 2, 0})}));
    CHECK(divisor_admissible(cfg, CartierDiv{{1, 0, 0}}, {dv({1, 1, 1})}));

    // Restrictions of (2,1,0) and (1,2,0) to the face E3 clash at the
    // deep face {1,2,3}.
    auto fail = divisor_admissibility_failure(cfg, CartierDiv{{0, 0, 1}},
                                              {dv({2, 1, 0}), dv({1, 2, 0})});
    REQUIRE(fail.has_value());
    CHECK(fail->face == 0b100);
    CHECK(fail->prefix == 2);
}

TEST_CASE("good position")
{
    SncConfig cfg = plane_two_lines();
    CHECK(good_position(cfg, CartierDiv{{1, 0}}, {}));           // no leading entry
    CHECK(good_position(cfg, CartierDiv{{1, 1}}, {dv({2, 0})}));  // divisorial leading
    CHECK_THROWS_AS(
        good_position(space_three_planes(), CartierDiv{{1, 0, 0}},
                      {dv({2, 1, 0}), dv({1, 2, 0})}),
        precondition_error);
}

TEST_CASE("good position survives shrinking the support")
{
    // Remark 1.9(2) on every small frame: if E is admissible for the
    // sequence, so is any divisor supported inside it.
    for (std::uint32_t d = 1; d <= 3; ++d) {
        SncConfig cfg = make_config(d, {"E1", "E2"},
                                    d >= 2 ? std::vector<Face>{1, 2, 3}
                                           : std::vector<Face>{1, 2});
        std::vector<CartierDiv> pool;
        for (std::uint32_t a = 0; a <= 2; ++a)
            for (std::uint32_t b = 0; b <= 2; ++b)
                pool.push_back(CartierDiv{{a, b}});
        for (const auto& s1 : pool)
            for (const auto& s2 : pool) {
                PseudoSeq seq{PseudoDiv::divisorial(s1), PseudoDiv::divisorial(s2)};
                if (!face_map_admissible(cfg, 0, seq))
                    continue;
                for (const auto& E : pool) {
                    if (!divisor_admissible(cfg, E, seq))
                        continue;
                    Face se = E.support();
                    for (const auto& C : pool)
                        if ((C.support() & se) == C.support())
                            CHECK(divisor_admissible(cfg, C, seq));
                }
            }
    }
}

TEST_CASE("prefix intersections")
{
    SncConfig cfg = plane_two_lines();
    std::vector<FaceRestriction> rs{{false, {2, 1}}, {false, {1, 1}}, {true, {}}};
    auto pre = prefix_intersection(cfg, 0, rs);
    REQUIRE(pre.has_value());
    CHECK(pre->kind == PrefixIntersection::Kind::Divisor);
    CHECK(pre->mults == std::vector<std::uint32_t>{1, 1});

    std::vector<FaceRestriction> fulls{{true, {}}, {true, {}}};
    auto whole = prefix_intersection(cfg, 0, fulls);
    REQUIRE(whole.has_value());
    CHECK(whole->kind == PrefixIntersection::Kind::WholeFace);

    std::vector<FaceRestriction> zero{{false, {0, 0}}};
    CHECK(prefix_intersection(cfg, 0, zero)->kind == PrefixIntersection::Kind::Empty);
}

TEST_CASE("split_component: faces, disjointness, transport")
{
    SncConfig cfg = plane_two_lines();
    SplitResult split = split_component(cfg, 0, 3);
    CHECK(split.refined.m() == 4);
    // |F_new| (with the empty face) = |{J without k}| + p * |{J with k}|
    CHECK(split.refined.faces.size() == 2 + 3 * 2);
    // No refined face contains two parts of the split component.
    for (Face f : split.refined.faces) {
        int parts = 0;
        for (std::uint32_t q = 0; q < 3; ++q)
            if (f & (1u << q))
                ++parts;
        CHECK(parts <= 1);
    }
    split.refined.validate();  // downward closure and dimension bound

    CartierDiv d = split.transport(CartierDiv{{2, 1}});
    CHECK(d.mults == std::vector<std::uint32_t>{2, 2, 2, 1});

    // A component not on any deeper face gains p singletons only.
    SncConfig line = make_config(1, {"E1"}, {1});
    SplitResult s2 = split_component(line, 0, 2);
    CHECK(s2.refined.faces.size() == 3);
}

TEST_CASE("forgetting decorations changes nothing but preconditions")
{
    SncConfig cfg = space_three_planes();
    PseudoSeq seq{dv({1, 1, 0}), dv({2, 1, 0})};
    CHECK(face_map_admissible(cfg, 0, seq));
    // The shorter sequence is admissible as well (prefix closure).
    CHECK(face_map_admissible(cfg, 0, PseudoSeq{seq.begin(), seq.begin() + 1}));
}
