#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cobord/brute_oracle.hpp"
#include "cobord/omega.hpp"

#include <array>
#include <random>
#include <thread>

using namespace cobord;

namespace {

std::shared_ptr<const FaceModule> plane(std::uint32_t trunc = 3,
                                        std::vector<std::string> symbols = {})
{
    SncConfig cfg = make_config(2, {"E1", "E2"}, {1, 2, 3});
    return make_module(cfg, std::make_shared<FglContext>(trunc), std::move(symbols));
}

std::shared_ptr<const FaceModule> disjoint_plane(std::uint32_t trunc = 3)
{
    SncConfig cfg = make_config(2, {"E1", "E2"}, {1, 2});
    return make_module(cfg, std::make_shared<FglContext>(trunc));
}

std::shared_ptr<const FaceModule> space(std::uint32_t trunc = 4)
{
    SncConfig cfg = make_config(3, {"E1", "E2", "E3"}, {1, 2, 3, 4, 5, 6, 7});
    return make_module(cfg, std::make_shared<FglContext>(trunc));
}

BundleExpr oe(std::initializer_list<std::int64_t> comps)
{
    BundleExpr b;
    b.component_part = comps;
    return b;
}

PseudoDiv dv(std::vector<std::uint32_t> mults)
{
    return PseudoDiv::divisorial(CartierDiv{std::move(mults)});
}

FaceClass generator(std::shared_ptr<const FaceModule> mod, Face J)
{
    return FaceClass::single(mod, J, Series::constant(mod->shape(), Rational(1)));
}

const LazardPoly kMinusTwoM1 = LazardPoly::gen(1) * Rational(-2);

}  // namespace

TEST_CASE("unit and single chern steps")
{
    auto mod = plane();
    FaceClass one = unit(mod);
    CHECK(one.parts().size() == 1);
    CHECK(one.parts().at(0) == Series::constant(mod->shape(), Rational(1)));

    FaceClass c = chern(oe({1, 0}), one);
    CHECK(c == generator(mod, 0b01));

    // Dimension-zero ambient: every chern application dies.
    SncConfig pt = make_config(0, {}, {});
    auto mod0 = make_module(pt, std::make_shared<FglContext>(1));
    CHECK(chern(BundleExpr{}, unit(mod0)).is_zero());
}

TEST_CASE("normalize: rewriting, disjoint kill, residual powers")
{
    auto mod = plane();
    SeriesShape sh = mod->shape();

    std::map<Face, Series> raw;
    raw[0] = Series::variable(sh, 0);
    CHECK(normalize(mod, raw) == generator(mod, 0b01));

    auto modd = disjoint_plane();
    std::map<Face, Series> raw2;
    raw2[0] = Series::variable(modd->shape(), 0) * Series::variable(modd->shape(), 1);
    CHECK(normalize(modd, raw2).is_zero());

    auto mod2 = plane(3);  // dim 2
    std::map<Face, Series> raw3;
    raw3[0] = Series::monomial(mod2->shape(), Exp{2, 0}, LazardPoly::one());
    FaceClass r = normalize(mod2, raw3);
    CHECK(r == FaceClass::single(mod2, 0b01, Series::variable(mod2->shape(), 0)));
}

TEST_CASE("normalize is order-independent and coherent")
{
    auto mod = space();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::uint32_t> expo(0, 2);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        std::map<Face, Series> raw;
        std::vector<Face> faces(mod->cfg().faces.begin(), mod->cfg().faces.end());
        std::uniform_int_distribution<std::size_t> fpick(0, faces.size() - 1);
        for (int part = 0; part < 2; ++part) {
            Series s(mod->shape());
            for (int t = 0; t < 3; ++t) {
                Exp e(mod->shape().width(), 0);
                for (auto& v : e)
                    v = expo(rng);
                s.add_term(std::move(e), LazardPoly::constant(Rational(coeff(rng))));
            }
            if (!s.is_zero())
                raw.emplace(faces[fpick(rng)], s);
        }
        FaceClass prod = normalize(mod, raw);
        for (std::uint64_t seed : {1ull, 99ull, 123456ull})
            CHECK(prod == brute::normalize(mod, raw, seed));

        // Coherence: rewriting commutes with multiplication, so one
        // normalization pass equals repeated passes.
        Series op = Series::variable(mod->shape(), 1);
        FaceClass two_pass = apply_operator(prod, op);
        std::map<Face, Series> big;
        for (const auto& [J, s] : raw) {
            auto it = big.find(J);
            if (it == big.end())
                big.emplace(J, op * s);
            else
                it->second += op * s;
        }
        CHECK(two_pass == normalize(mod, big));
    }
}

TEST_CASE("chern of composite and trivial bundles")
{
    auto mod = plane(3);
    FaceClass expanded = chern(oe({1, 1}), unit(mod));

    FaceClass expect(mod);
    expect.add_part(0b01, Series::constant(mod->shape(), Rational(1)));
    expect.add_part(0b10, Series::constant(mod->shape(), Rational(1)));
    expect.add_part(0b11, Series::constant(mod->shape(), kMinusTwoM1));
    CHECK(expanded == expect);
    CHECK(expanded == brute::chern(oe({1, 1}), unit(mod)));

    CHECK(chern(BundleExpr{}, unit(mod)).is_zero());  // trivial bundle
}

TEST_CASE("chern operators with free symbols stay symbolic")
{
    auto mod = plane(3, {"L"});
    BundleExpr b;
    b.component_part = {0, 0};
    b.free_part["L"] = 1;
    FaceClass c = chern(b, unit(mod));
    // L is not a frame variable: multiplication by it survives as a
    // symbol up to the dimension bound.
    CHECK(c == FaceClass::single(mod, 0, Series::variable(mod->shape(), 2)));

    BundleExpr undeclared;
    undeclared.component_part = {0, 0};
    undeclared.free_part["M"] = 1;
    CHECK_THROWS_AS(chern(undeclared, unit(mod)), shape_error);
}

TEST_CASE("divisor_class examples")
{
    auto mod = plane(3);  // d = 2

    auto single = divisor_class(mod, CartierDiv{{1, 0}}, {});
    CHECK(single.cls == generator(mod, 0b01));
    CHECK(single.support.contains(0b01));
    CHECK(single.support.contains(0b11));
    CHECK(!single.support.contains(0b10));

    auto doubled = divisor_class(mod, CartierDiv{{2, 0}}, {});
    Series expect2(mod->shape());
    expect2.add_term(Exp{0, 0}, LazardPoly::constant(Rational(2)));
    expect2.add_term(Exp{1, 0}, kMinusTwoM1);
    CHECK(doubled.cls == FaceClass::single(mod, 0b01, expect2));

    auto snc = divisor_class(mod, CartierDiv{{1, 1}}, {});
    FaceClass expect(mod);
    expect.add_part(0b01, Series::constant(mod->shape(), Rational(1)));
    expect.add_part(0b10, Series::constant(mod->shape(), Rational(1)));
    expect.add_part(0b11, Series::constant(mod->shape(), kMinusTwoM1));
    CHECK(snc.cls == expect);

    CHECK_THROWS_AS(divisor_class(mod, CartierDiv{{0, 0}}, {}), precondition_error);
}

TEST_CASE("divisor_class rejects inadmissible sequences with a diagnostic")
{
    auto mod = space();
    PseudoSeq bad{dv({2, 1, 0}), dv({1, 2, 0})};
    try {
        divisor_class(mod, CartierDiv{{0, 0, 1}}, bad);
        FAIL("expected a precondition error");
    } catch (const precondition_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("face {3}") != std::string::npos);
        CHECK(msg.find("prefix 2") != std::string::npos);
    }
}

TEST_CASE("intersect: simplest cases")
{
    auto mod = plane(3);

    auto res = intersect(dv({1, 0}), dv({1, 0}), {}, unit(mod));
    CHECK(res.cls == generator(mod, 0b01));

    PseudoDiv g = PseudoDiv::global(oe({1, 0}));
    auto gres = intersect(g, g, {}, unit(mod));
    CHECK(gres.cls == chern(oe({1, 0}), unit(mod)));
    CHECK(gres.support.contains(0));  // global support is everything

    CHECK_THROWS_AS(intersect(dv({0, 1}), dv({1, 0}), {}, unit(mod)), precondition_error);
}

TEST_CASE("intersect matches chaining chern operators (the d = 2 commutation case)")
{
    auto mod = plane(3);
    auto step1 = intersect(dv({1, 0}), dv({1, 0}), {}, unit(mod));
    CHECK(step1.cls == generator(mod, 0b01));
    FaceClass step2 = chern(oe({0, 1}), step1.cls);
    CHECK(step2 == generator(mod, 0b11));

    // The other operator order gives the same corner class.
    FaceClass other = intersect(dv({1, 0}), dv({1, 0}), {}, chern(oe({0, 1}), unit(mod))).cls;
    CHECK(other == step2);

    // Decorating with a divisor meeting D only in codimension two
    // makes the ambient face inadmissible for (D, seq).
    CHECK_THROWS_AS(intersect(dv({1, 0}), dv({1, 0}), {dv({0, 1})}, unit(mod)),
                    precondition_error);
}

TEST_CASE("intersect with the zero pseudo-divisor gives zero")
{
    auto mod = plane(3);
    auto res = intersect(dv({0, 0}), dv({1, 1}), {}, unit(mod));
    CHECK(res.cls.is_zero());
}

TEST_CASE("pushforward checks support")
{
    auto mod = plane(3);
    auto dc = divisor_class(mod, CartierDiv{{1, 0}}, {});
    CHECK(pushforward(dc.cls, dc.support) == dc.cls);
    CHECK(pushforward(FaceClass(mod), dc.support).is_zero());

    SupportSet only_e2 = support_of(mod->cfg(), dv({0, 1}));
    CHECK_THROWS_AS(pushforward(dc.cls, only_e2), precondition_error);
}

TEST_CASE("forget")
{
    PseudoSeq seq{dv({1, 0}), dv({0, 1})};
    CHECK(forget(seq, 1) == PseudoSeq{dv({1, 0})});
    CHECK(forget(seq, 2) == seq);
    CHECK(forget(seq, 0).empty());
    CHECK_THROWS(forget(seq, 3));
}

TEST_CASE("verify lemma 1.13 example instances")
{
    {
        SncConfig cfg = make_config(1, {"E1"}, {1});
        auto mod = make_module(cfg, std::make_shared<FglContext>(2));
        CHECK(verify_lemma_1_13(mod, CartierDiv{{1}}, {}, 0, 2).pass);
    }
    {
        auto mod = space(4);
        CHECK(verify_lemma_1_13(mod, CartierDiv{{2, 1, 0}}, {}, 0, 2).pass);
        CHECK(verify_lemma_1_13(mod, CartierDiv{{1, 0, 0}}, {}, 0, 3).pass);
    }
}

TEST_CASE("verify lemma 1.14 example instances")
{
    auto mod = plane(3);
    CHECK(verify_lemma_1_14(mod, CartierDiv{{1, 0}}, {}).pass);
    CHECK(verify_lemma_1_14(mod, CartierDiv{{1, 1}}, {}).pass);
    CHECK(verify_lemma_1_14(mod, CartierDiv{{2, 0}}, {}).pass);
    CHECK(verify_lemma_1_14(mod, CartierDiv{{2, 1}}, {dv({1, 1})}).pass);
}

TEST_CASE("verify lemma 2.7 example instances")
{
    auto mod = plane(3);
    // Z disjoint from |D|: both sides vanish.
    auto modd = disjoint_plane();
    CHECK(verify_lemma_2_7(modd, CartierDiv{{0, 1}}, dv({1, 0}), dv({1, 0}), {}).pass);
    // Z = E2, C = D = E1 lands on the corner.
    CHECK(verify_lemma_2_7(mod, CartierDiv{{0, 1}}, dv({1, 0}), dv({1, 0}), {}).pass);
    // Z a component of div C.
    CHECK(verify_lemma_2_7(mod, CartierDiv{{1, 0}}, dv({1, 1}), dv({1, 1}), {}).pass);
    CHECK_THROWS_AS(verify_lemma_2_7(mod, CartierDiv{{2, 0}}, dv({1, 0}), dv({1, 0}), {}),
                    precondition_error);
}

TEST_CASE("verify lemma 4.2 example instances")
{
    // Disjoint components: the correction term dies.
    auto modd = disjoint_plane();
    CHECK(verify_lemma_4_2(modd, CartierDiv{{1, 1}}, CartierDiv{{1, 0}},
                           CartierDiv{{0, 1}}, {})
              .pass);
    // Meeting components at d >= 2, trunc >= 3.
    auto mod = plane(3);
    CHECK(verify_lemma_4_2(mod, CartierDiv{{1, 1}}, CartierDiv{{1, 0}}, CartierDiv{{0, 1}}, {})
              .pass);
    CHECK(verify_lemma_4_2(mod, CartierDiv{{2, 1}}, CartierDiv{{2, 0}}, CartierDiv{{0, 1}}, {})
              .pass);
}

TEST_CASE("verify prop 4.3 example instances")
{
    auto mod = plane(3);
    CHECK(verify_prop_4_3(mod, CartierDiv{{1, 0}}, CartierDiv{{0, 1}}, CartierDiv{{1, 0}},
                          CartierDiv{{0, 1}}, {})
              .pass);
    // Common component case C = C'.
    CHECK(verify_prop_4_3(mod, CartierDiv{{1, 1}}, CartierDiv{{1, 1}}, CartierDiv{{1, 0}},
                          CartierDiv{{1, 0}}, {})
              .pass);
    // Disjoint supports: both sides are empty classes.
    auto modd = disjoint_plane();
    auto rep = verify_prop_4_3(modd, CartierDiv{{1, 0}}, CartierDiv{{0, 1}},
                               CartierDiv{{1, 0}}, CartierDiv{{0, 1}}, {});
    CHECK(rep.pass);
}

TEST_CASE("verify prop 6.3(7) instances")
{
    auto mod = plane(3);
    PseudoDiv d1 = dv({1, 1});
    CHECK(verify_prop_6_3_7(mod, d1, d1, {}).pass);
    CHECK(verify_prop_6_3_7(mod, d1, PseudoDiv::global(oe({1, 1})), {}).pass);
    CHECK(verify_prop_6_3_7(mod, PseudoDiv::global(oe({2, 0})), dv({2, 0}), {}).pass);
    CHECK_THROWS_AS(verify_prop_6_3_7(mod, dv({1, 0}), dv({0, 1}), {}), precondition_error);
}

TEST_CASE("FGL relation soundness for composite bundles")
{
    auto mod = plane(3);
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> cpick(-1, 2);
    for (int trial = 0; trial < 25; ++trial) {
        BundleExpr b1 = oe({cpick(rng), cpick(rng)});
        BundleExpr b2 = oe({cpick(rng), cpick(rng)});
        FaceClass x = chern(oe({1, 1}), unit(mod));  // something nontrivial

        FaceClass lhs = chern(tensor(b1, b2), x);
        Series A = mod->operator_series(b1);
        Series B = mod->operator_series(b2);
        std::array<Series, 2> imgs{A, B};
        Series composed = mod->ctx().fgl().substitute(imgs);
        FaceClass rhs = apply_operator(x, composed);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("face classes can be shared across threads")
{
    auto mod = space(4);
    FaceClass x = divisor_class(mod, CartierDiv{{1, 1, 1}}, {}).cls;
    std::vector<FaceClass> results(6);
    std::vector<std::thread> threads;
    for (int t = 0; t < 6; ++t)
        threads.emplace_back(
            [&, t] { results[static_cast<std::size_t>(t)] = chern(oe({1, 0, 1}), x); });
    for (auto& th : threads)
        th.join();
    for (int t = 1; t < 6; ++t)
        CHECK(results[static_cast<std::size_t>(t)] == results[0]);
}

TEST_CASE("difference reporting names the first divergent triple")
{
    auto mod = plane(3);
    FaceClass a = generator(mod, 0b01);
    FaceClass b = generator(mod, 0b01);
    b.add_part(0b11, Series::constant(mod->shape(), kMinusTwoM1));
    auto d = first_difference(a, b);
    REQUIRE(d.has_value());
    CHECK(d->face == 0b11);
    CHECK(d->lhs.is_zero());
    CHECK(d->rhs == kMinusTwoM1);
    CHECK(difference_str(*mod, *d).find("face={1,2}") != std::string::npos);
    CHECK(!first_difference(a, a).has_value());
}
