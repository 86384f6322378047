#include "doctest.h"

#include "monocat/morph.hpp"
#include "monocat/random.hpp"

using namespace monocat;

namespace {

LambdaMorphism socle_inclusion(const RingCtx& c) {
    return LambdaMorphism(jordan_block(c, 1), jordan_block(c, 2), FpMatrix::from_rows(c.p, {{0}, {1}}));
}

// ker(cok(s)) ≅ s in H via (coordinates of s in the kernel, id).
void check_ker_cok(const MorphObject& s) {
    const MorphObject back = ker(cok(s));
    const Subspace k = Subspace::span(back.map().matrix());
    const FpMatrix s1 = k.coordinates_of(s.map().matrix());
    const MorphMap iso(s, back, LambdaMorphism(s.src(), back.src(), s1), LambdaMorphism::identity(s.dst()));
    CHECK(inverse(s1).has_value());
}

// cok(ker(g)) ≅ g in H via (id, g ∘ section).
void check_cok_ker(const MorphObject& g) {
    const MorphObject back = cok(ker(g));
    const Quotient q = cokernel(ker(g).map());
    const FpMatrix s2 = g.map().matrix() * q.section;
    const MorphMap iso(back, g, LambdaMorphism::identity(g.src()), LambdaMorphism(back.dst(), g.dst(), s2));
    CHECK(inverse(s2).has_value());
}

std::vector<MorphObject> generators(Ideal ideal, const RingCtx& c, SplitMix64& rng) {
    std::vector<MorphObject> g;
    const auto zero = LambdaModule::zero(c);
    for (unsigned a = 1; a <= c.n; ++a) {
        const auto j = jordan_block(c, a);
        switch (ideal) {
        case Ideal::V:
            g.emplace_back(LambdaMorphism::identity(j), Kind::S);
            g.emplace_back(LambdaMorphism::zero(zero, j), Kind::S);
            break;
        case Ideal::U:
            g.emplace_back(LambdaMorphism::identity(j), Kind::F);
            g.emplace_back(LambdaMorphism::zero(j, zero), Kind::F);
            break;
        case Ideal::X:
            g.emplace_back(LambdaMorphism::identity(j), Kind::S);
            g.emplace_back(injective_envelope(j).embedding, Kind::S);
            g.emplace_back(random_mono(rng, free_module(c, 2), 2), Kind::S);
            break;
        case Ideal::Y:
            g.emplace_back(LambdaMorphism::identity(j), Kind::F);
            g.emplace_back(projective_cover(j).cover, Kind::F);
            g.emplace_back(cokernel(random_mono(rng, free_module(c, 2), 2)).projection, Kind::F);
            break;
        }
    }
    return g;
}

} // namespace

TEST_CASE("make validates kinds") {
    const RingCtx c(5, 2);
    CHECK_THROWS_AS(make(LambdaMorphism::zero(jordan_block(c, 1), jordan_block(c, 2)), Kind::S), MonoViolation);
    CHECK_THROWS_AS(make(socle_inclusion(c), Kind::F), EpiViolation);
    CHECK_NOTHROW(make(LambdaMorphism::identity(from_blocks(c, {2, 1})), Kind::S));
    CHECK_NOTHROW(make(socle_inclusion(c), Kind::S));
    CHECK_NOTHROW(make(LambdaMorphism::zero(jordan_block(c, 1), jordan_block(c, 2)), Kind::H));
    const auto o = make(socle_inclusion(c), Kind::S);
    const auto bad = LambdaMorphism::identity(jordan_block(c, 2));
    CHECK_THROWS_AS(MorphMap(o, o, LambdaMorphism::zero(jordan_block(c, 1), jordan_block(c, 1)), bad), NotLinear);
}

TEST_CASE("cok and ker examples") {
    const RingCtx c(5, 2);
    const auto s = make(socle_inclusion(c), Kind::S);
    const auto q = cok(s);
    CHECK(q.kind() == Kind::F);
    CHECK(is_isomorphic(q.dst(), jordan_block(c, 1)));
    CHECK(q.src().dim() == 2);

    const auto m = from_blocks(c, {2, 1});
    const auto from_zero = cok(make(LambdaMorphism::zero(LambdaModule::zero(c), m), Kind::S));
    CHECK(from_zero.map().matrix().is_identity());
    CHECK(cok(make(LambdaMorphism::identity(m), Kind::S)).dst().dim() == 0);

    const auto k = ker(q);
    CHECK(k.kind() == Kind::S);
    CHECK(is_isomorphic(k.src(), jordan_block(c, 1)));
    CHECK(Subspace::span(k.map().matrix()) == Subspace::span(socle_inclusion(c).matrix()));
    CHECK(ker(make(LambdaMorphism::zero(m, LambdaModule::zero(c)), Kind::F)).map().matrix().is_identity());

    CHECK_THROWS_AS(ker(s), KindMismatch);
    CHECK_THROWS_AS(cok(q), KindMismatch);
}

TEST_CASE("ker and cok are inverse up to H-isomorphism") {
    SplitMix64 rng(101);
    for (int t = 0; t < 200; ++t) {
        const RingCtx ctx(t % 2 ? 2 : 5, unsigned(rng.between(1, 4)));
        const auto y = random_module(rng, ctx, 10);
        const auto s = make(random_mono(rng, y, 3), Kind::S);
        check_ker_cok(s);
        check_cok_ker(cok(s));
    }
}

TEST_CASE("induced maps on cok and ker are functorial") {
    SplitMix64 rng(103);
    for (int t = 0; t < 30; ++t) {
        const RingCtx ctx(5, unsigned(rng.between(1, 4)));
        const auto a = make(random_mono(rng, random_module(rng, ctx, 6), 2), Kind::S);
        const auto b = make(random_mono(rng, random_module(rng, ctx, 6), 2), Kind::S);
        const auto h = hom_h(a, b);
        if (h.empty())
            continue;
        MorphMap f = MorphMap::zero(a, b);
        for (const auto& e : h)
            f = add(f, scale(e, std::uint32_t(rng.below(5))));
        const auto cf = cok(f);
        CHECK(cf.sigma1().matrix() == f.sigma2().matrix());
        const auto kcf = ker(cf);
        CHECK(kcf.sigma2().matrix() == f.sigma2().matrix());
    }
}

TEST_CASE("hom_h examples") {
    const RingCtx c(5, 2);
    const auto j1 = jordan_block(c, 1);
    const auto o1 = make(LambdaMorphism::zero(LambdaModule::zero(c), j1), Kind::S);
    const auto o2 = make(LambdaMorphism::identity(j1), Kind::S);
    CHECK(hom_h(o1, o2).size() == 1);

    SplitMix64 rng(107);
    for (int t = 0; t < 20; ++t) {
        const RingCtx ctx(5, unsigned(rng.between(1, 4)));
        const auto m = random_module(rng, ctx, 6);
        const auto id = make(LambdaMorphism::identity(m), Kind::H);
        CHECK(hom_h(id, id).size() == hom_dim(m, m));
        const auto o = make(random_mono(rng, m, 2), Kind::S);
        const auto basis = hom_h(o, o);
        CHECK_NOTHROW(hom_h_coordinates(basis, MorphMap::identity(o)));
        for (const auto& e : basis)
            CHECK(e.sigma2().matrix() * o.map().matrix() == o.map().matrix() * e.sigma1().matrix());
    }
}

TEST_CASE("right approximation examples") {
    const RingCtx c(5, 2);
    const auto e = jordan_block(c, 2);
    const auto zero_e = make(LambdaMorphism::zero(LambdaModule::zero(c), e), Kind::S);
    CHECK(factors_through(Ideal::V, MorphMap::identity(zero_e)).has_value());
    CHECK(in_ideal(Ideal::V, zero_e));

    const auto s = make(socle_inclusion(c), Kind::S);
    CHECK_FALSE(factors_through(Ideal::V, MorphMap::identity(s)).has_value());

    const auto ax = right_approximation(Ideal::X, s);
    // pullback of Λ -> J_2 along J_1 -> J_2 has dimension 1 + 2 - 2
    CHECK(ax.object.src().dim() == 1 + 1);
    const auto omega = make(injective_envelope(jordan_block(c, 1)).embedding, Kind::S);
    SplitMix64 rng(109);
    for (const auto& h : hom_h(omega, s))
        CHECK(factors_through(Ideal::X, h).has_value());

    const auto g = make(projective_cover(jordan_block(c, 1)).cover, Kind::F);
    const auto ay = right_approximation(Ideal::Y, g);
    CHECK(ay.object.kind() == Kind::F);
    CHECK(ay.object.src().dim() == 2 + 2);
    CHECK(in_ideal(Ideal::Y, g));

    CHECK_THROWS_AS(right_approximation(Ideal::U, s), KindMismatch);
    CHECK_THROWS_AS(right_approximation(Ideal::V, g), KindMismatch);
}

TEST_CASE("right approximations: every map from an ideal generator factors") {
    SplitMix64 rng(113);
    for (Ideal ideal : {Ideal::V, Ideal::U, Ideal::X, Ideal::Y}) {
        for (int t = 0; t < 12; ++t) {
            const RingCtx ctx(t % 2 ? 2 : 5, unsigned(rng.between(1, 3)));
            const auto y = random_module(rng, ctx, 6);
            MorphObject target = make(random_mono(rng, y, 2), Kind::S);
            if (ideal == Ideal::U || ideal == Ideal::Y)
                target = cok(target);
            const auto ap = right_approximation(ideal, target);
            CHECK(in_ideal(ideal, ap.object));
            for (const auto& gen : generators(ideal, ctx, rng)) {
                CHECK(in_ideal(ideal, gen));
                for (const auto& h : hom_h(gen, target)) {
                    const auto w = factors_through(ideal, h);
                    REQUIRE(w.has_value());
                    const auto back = compose(ap.map, *w);
                    CHECK(back.sigma1().matrix() == h.sigma1().matrix());
                    CHECK(back.sigma2().matrix() == h.sigma2().matrix());
                }
            }
        }
    }
}

TEST_CASE("factoring subspace is an ideal-closed subspace") {
    SplitMix64 rng(127);
    for (int t = 0; t < 15; ++t) {
        const RingCtx ctx(5, unsigned(rng.between(2, 4)));
        const auto a = make(random_mono(rng, random_module(rng, ctx, 6), 2), Kind::S);
        const auto b = make(random_mono(rng, random_module(rng, ctx, 6), 2), Kind::S);
        const auto basis = hom_h(a, b);
        const auto sub = factoring_subspace(Ideal::V, a, b, basis);
        CHECK(sub.ambient_dim() == basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            FpVector e(basis.size(), 0);
            e[i] = 1;
            CHECK(sub.contains(e) == factors_through(Ideal::V, basis[i]).has_value());
        }
    }
}
