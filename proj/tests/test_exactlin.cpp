#include <catch2/catch_amalgamated.hpp>

#include "snailhom/genrand.hpp"
#include "snailhom/module.hpp"

using namespace snailhom;

namespace {

const Ring Z = Ring::integers();
const Ring Q = Ring::rationals();
const Ring F5 = Ring::prime_field(5);

FpModule z_mod(int k) // Z/k as [[k]]
{
    return FpModule(Z, 1, ExactMatrix::from_rows(Z, {{k}}));
}

ModMap scalar_map(const FpModule& m, const FpModule& n, long long c)
{
    return ModMap(m, n, ExactMatrix::identity(m.ring(), m.gens()).scaled(Rat(c)));
}

} // namespace

TEST_CASE("smith normal form on the pinned examples")
{
    SECTION("2x2 integer matrix")
    {
        auto m = ExactMatrix::from_rows(Z, {{2, 4}, {6, 8}});
        auto s = smith(m);
        REQUIRE(s.U * m * s.V == s.D);
        REQUIRE(s.rank == 2);
        REQUIRE(s.D.at(0, 0) == 2);
        REQUIRE(s.D.at(1, 1) == 4);
        REQUIRE(s.D.at(0, 1) == 0);
        REQUIRE(s.D.at(1, 0) == 0);
    }
    SECTION("identity over Q")
    {
        auto m = ExactMatrix::identity(Q, 3);
        auto s = smith(m);
        REQUIRE(s.D == ExactMatrix::identity(Q, 3));
    }
    SECTION("zero matrix")
    {
        auto m = ExactMatrix(Z, 2, 3);
        auto s = smith(m);
        REQUIRE(s.D.is_zero());
        REQUIRE(s.rank == 0);
    }
}

TEST_CASE("smith round-trip and divisibility chain on random matrices")
{
    for (const Ring& ring : {Z, Q, F5}) {
        GenConfig cfg;
        cfg.ring = ring;
        cfg.entry_bound = 5;
        Rng rng(42 + static_cast<int>(ring.tag()));
        for (int it = 0; it < 30; ++it) {
            ExactMatrix m = random_matrix(rng, cfg, rng.int_in(0, 5), rng.int_in(0, 5));
            auto s = smith(m);
            REQUIRE(s.U * m * s.V == s.D);
            for (int i = 0; i + 1 < std::min(s.D.rows(), s.D.cols()); ++i) {
                if (s.D.at(i, i) == 0) {
                    REQUIRE(s.D.at(i + 1, i + 1) == 0);
                } else {
                    REQUIRE(ring.divides(s.D.at(i, i), s.D.at(i + 1, i + 1)));
                }
            }
            REQUIRE(inverse(s.U).has_value());
            REQUIRE(inverse(s.V).has_value());
        }
    }
}

TEST_CASE("composition and equality of maps")
{
    FpModule z1(Z, 1);
    ModMap two = scalar_map(z1, z1, 2);
    ModMap three = scalar_map(z1, z1, 3);
    REQUIRE(maps_equal(compose(two, three), scalar_map(z1, z1, 6)));
    REQUIRE(maps_equal(compose(two, ModMap::identity(z1)), two));

    FpModule z2 = z_mod(2);
    ModMap quot(z1, z2, ExactMatrix::identity(Z, 1));
    REQUIRE(maps_equal(compose(quot, ModMap::identity(z2)), quot));

    SECTION("equality modulo target relations")
    {
        ModMap two_into(z1, z2, ExactMatrix::from_rows(Z, {{2}}));
        ModMap zero_into = ModMap::zero(z1, z2);
        REQUIRE(maps_equal(two_into, zero_into));
        REQUIRE_FALSE(maps_equal(two, ModMap::zero(z1, z1)));
        REQUIRE(maps_equal(two, two));
    }
}

TEST_CASE("kernels on the pinned examples")
{
    FpModule z1(Z, 1);
    FpModule z2 = z_mod(2);

    SECTION("multiplication by two is injective")
    {
        KernelPair k = kernel(scalar_map(z1, z1, 2));
        REQUIRE(k.module.is_zero_module());
    }
    SECTION("kernel of the quotient is 2Z")
    {
        ModMap quot(z1, z2, ExactMatrix::identity(Z, 1));
        KernelPair k = kernel(quot);
        REQUIRE(modules_isomorphic(k.module, z1));
        REQUIRE(is_mono(k.embed));
        REQUIRE(is_zero_arrow(compose(k.embed, quot)));
        // the image is exactly 2Z: x2 lifts, x1 does not
        REQUIRE(try_lift_through_mono(scalar_map(z1, z1, 2), k.embed).has_value());
        REQUIRE_FALSE(try_lift_through_mono(ModMap::identity(z1), k.embed).has_value());
    }
    SECTION("kernel of the zero map is everything")
    {
        FpModule m = z_mod(4);
        KernelPair k = kernel(ModMap::zero(m, z1));
        REQUIRE(modules_isomorphic(k.module, m));
        REQUIRE(is_iso(k.embed));
    }
}

TEST_CASE("cokernels on the pinned examples")
{
    FpModule z1(Z, 1);
    REQUIRE(modules_isomorphic(cokernel(scalar_map(z1, z1, 2)).module, z_mod(2)));
    REQUIRE(cokernel(ModMap::identity(z1)).module.is_zero_module());
    FpModule n = z_mod(6);
    REQUIRE(modules_isomorphic(cokernel(ModMap::zero(z1, n)).module, n));
}

TEST_CASE("pullbacks on the pinned examples")
{
    FpModule z1(Z, 1);
    SECTION("pullback of identities")
    {
        PullbackData pb = pullback(ModMap::identity(z1), ModMap::identity(z1));
        REQUIRE(modules_isomorphic(pb.apex, z1));
        REQUIRE(is_iso(pb.p1));
        REQUIRE(is_iso(pb.p2));
    }
    SECTION("pullback of x2 against x2")
    {
        ModMap two = scalar_map(z1, z1, 2);
        PullbackData pb = pullback(two, two);
        REQUIRE(modules_isomorphic(pb.apex, z1));
        REQUIRE(maps_equal(pb.p1, pb.p2));
        REQUIRE(is_iso(pb.p1));
    }
    SECTION("pullback over the zero object is the product")
    {
        FpModule zero = FpModule::zero(Z);
        FpModule z2 = z_mod(2);
        PullbackData pb = pullback(ModMap::zero(z1, zero), ModMap::zero(z2, zero));
        DirectSum ds = direct_sum(z1, z2);
        REQUIRE(modules_isomorphic(pb.apex, ds.sum));
    }
}

TEST_CASE("lifts and colifts on the pinned examples")
{
    FpModule z1(Z, 1);
    ModMap two = scalar_map(z1, z1, 2);
    ModMap four = scalar_map(z1, z1, 4);

    SECTION("lift x4 through x2")
    {
        ModMap u = lift_through_mono(four, two);
        REQUIRE(maps_equal(u, two));
    }
    SECTION("self lift is the identity")
    {
        REQUIRE(maps_equal(lift_through_mono(two, two), ModMap::identity(z1)));
    }
    SECTION("x1 does not lift through x2")
    {
        REQUIRE_FALSE(try_lift_through_mono(ModMap::identity(z1), two).has_value());
    }

    FpModule z2 = z_mod(2);
    ModMap quot(z1, z2, ExactMatrix::identity(Z, 1));
    SECTION("zero colift")
    {
        ModMap u = colift_through_epi(ModMap::zero(z1, z2), quot);
        REQUIRE(u.is_zero_map());
    }
    SECTION("self colift is the identity")
    {
        REQUIRE(maps_equal(colift_through_epi(quot, quot), ModMap::identity(z2)));
    }
    SECTION("identity does not factor through the quotient")
    {
        REQUIRE_FALSE(try_colift_through_epi(ModMap::identity(z1), quot).has_value());
    }
}

TEST_CASE("mono, epi, iso tests")
{
    FpModule z1(Z, 1);
    FpModule z2 = z_mod(2);
    ModMap two = scalar_map(z1, z1, 2);
    ModMap quot(z1, z2, ExactMatrix::identity(Z, 1));

    REQUIRE(is_mono(two));
    REQUIRE_FALSE(is_regular_epi(two));
    REQUIRE(is_regular_epi(quot));
    REQUIRE_FALSE(is_mono(quot));
    REQUIRE(is_iso(ModMap::identity(z2)));
}

TEST_CASE("module isomorphism by invariant factors")
{
    REQUIRE(modules_isomorphic(z_mod(2), FpModule(Z, 1, ExactMatrix::from_rows(Z, {{-2}}))));
    REQUIRE_FALSE(modules_isomorphic(FpModule(Z, 1), z_mod(2)));
    REQUIRE(modules_isomorphic(FpModule::zero(Z), FpModule::zero(Z)));

    SECTION("canonical form gives explicit inverse isomorphisms")
    {
        FpModule m(Z, 3, ExactMatrix::from_rows(Z, {{2, 4, 0}, {0, 6, 0}}));
        CanonicalForm c = canonical_form(m);
        REQUIRE(maps_equal(compose(c.to, c.from), ModMap::identity(m)));
        REQUIRE(maps_equal(compose(c.from, c.to), ModMap::identity(c.canon)));
    }
    SECTION("iso_between produces mutually inverse maps")
    {
        FpModule a = z_mod(2);
        FpModule b(Z, 2, ExactMatrix::from_rows(Z, {{-2, 0}, {0, 1}}));
        auto pair = iso_between(a, b);
        REQUIRE(pair.has_value());
        REQUIRE(maps_equal(compose(pair->first, pair->second), ModMap::identity(a)));
        REQUIRE(maps_equal(compose(pair->second, pair->first), ModMap::identity(b)));
    }
}

TEST_CASE("proper arrows")
{
    FpModule z1(Z, 1);
    REQUIRE(is_proper_arrow(scalar_map(z1, z1, 2)));
    REQUIRE(is_proper_arrow(ModMap::zero(z1, z_mod(4))));

    GenConfig cfg;
    cfg.ring = Q;
    Rng rng(7);
    for (int it = 0; it < 20; ++it) {
        FpModule m = gen_module(rng, cfg), n = gen_module(rng, cfg);
        REQUIRE(is_proper_arrow(gen_map(rng, cfg, m, n)));
    }
}

TEST_CASE("kernel and cokernel universal properties on random data")
{
    for (const Ring& ring : {Z, F5}) {
        GenConfig cfg;
        cfg.ring = ring;
        Rng rng(101 + static_cast<int>(ring.tag()));
        for (int it = 0; it < 25; ++it) {
            FpModule m = gen_module(rng, cfg), n = gen_module(rng, cfg);
            ModMap f = gen_map(rng, cfg, m, n);
            KernelPair k = kernel(f);
            REQUIRE(is_mono(k.embed));
            REQUIRE(is_zero_arrow(compose(k.embed, f)));

            // cones through the kernel: t with t.f == 0 factors uniquely
            FpModule a = gen_module(rng, cfg);
            ModMap into_k = gen_map(rng, cfg, a, k.module);
            ModMap t = compose(into_k, k.embed);
            REQUIRE(is_zero_arrow(compose(t, f)));
            ModMap u = lift_through_mono(t, k.embed);
            REQUIRE(maps_equal(compose(u, k.embed), t));
            REQUIRE(maps_equal(u, into_k)); // uniqueness against the known factorization

            CokernelPair c = cokernel(f);
            REQUIRE(is_regular_epi(c.project));
            REQUIRE(is_zero_arrow(compose(f, c.project)));
            FpModule d = gen_module(rng, cfg);
            ModMap from_c = gen_map(rng, cfg, c.module, d);
            ModMap s = compose(c.project, from_c);
            ModMap v = colift_through_epi(s, c.project);
            REQUIRE(maps_equal(v, from_c));
        }
    }
}

TEST_CASE("pullback universal property on random cospans")
{
    GenConfig cfg;
    Rng rng(2024);
    for (int it = 0; it < 25; ++it) {
        FpModule a = gen_module(rng, cfg), b = gen_module(rng, cfg), c = gen_module(rng, cfg);
        ModMap f = gen_map(rng, cfg, a, c), g = gen_map(rng, cfg, b, c);
        PullbackData pb = pullback(f, g);
        REQUIRE(maps_equal(compose(pb.p1, f), compose(pb.p2, g)));

        FpModule t = gen_module(rng, cfg);
        ModMap mediating = gen_map(rng, cfg, t, pb.apex);
        ModMap t1 = compose(mediating, pb.p1), t2 = compose(mediating, pb.p2);
        ModMap u = into_pullback(pb, t1, t2);
        REQUIRE(maps_equal(u, mediating));
    }
}

TEST_CASE("mono plus epi gives an explicit two-sided inverse")
{
    GenConfig cfg;
    Rng rng(9);
    int seen = 0;
    for (int it = 0; it < 60 && seen < 8; ++it) {
        FpModule m = gen_module(rng, cfg);
        ModMap f = gen_map(rng, cfg, m, m);
        if (!is_mono(f) || !is_regular_epi(f)) continue;
        ++seen;
        REQUIRE(is_iso(f));
        ModMap inv = inverse_of_iso(f);
        REQUIRE(maps_equal(compose(f, inv), ModMap::identity(m)));
        REQUIRE(maps_equal(compose(inv, f), ModMap::identity(m)));
    }
    REQUIRE(seen > 0);
}

TEST_CASE("maps_equal is a congruence for composition")
{
    FpModule z1(Z, 1);
    FpModule z2 = z_mod(2);
    ModMap two_into(z1, z2, ExactMatrix::from_rows(Z, {{2}}));
    ModMap zero_into = ModMap::zero(z1, z2);
    ModMap pre = scalar_map(z1, z1, 3);
    REQUIRE(maps_equal(two_into, zero_into));
    REQUIRE(maps_equal(compose(pre, two_into), compose(pre, zero_into)));
    ModMap post = ModMap::identity(z2);
    REQUIRE(maps_equal(compose(two_into, post), compose(zero_into, post)));
}

TEST_CASE("exactness checker on short exact sequences")
{
    FpModule z1(Z, 1);
    ModMap two = scalar_map(z1, z1, 2);
    CokernelPair c = cokernel(two);
    REQUIRE(exactness_at(two, c.project).exact());
    ModMap four = scalar_map(z1, z1, 4);
    REQUIRE_FALSE(exactness_at(four, c.project).exact());
    REQUIRE(exactness_at(ModMap::zero(FpModule::zero(Z), z1), two).exact());
}
