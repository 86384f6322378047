#include "doctest.h"

#include "monocat/exactla.hpp"
#include "monocat/random.hpp"

using namespace monocat;

TEST_CASE("field arithmetic and primality") {
    CHECK(Field::is_prime(2));
    CHECK(Field::is_prime(2147483647ULL));
    CHECK_FALSE(Field::is_prime(1));
    CHECK_FALSE(Field::is_prime(91));
    CHECK_THROWS_AS(Field(4), InvalidArgument);
    const Field f(5);
    CHECK(f.inv(2) == 3);
    CHECK(f.reduce(-1) == 4);
    CHECK(f.mul(4, 4) == 1);
}

TEST_CASE("rref examples") {
    auto r = rref(FpMatrix::from_rows(2, {{1, 1}, {1, 1}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == FpMatrix::from_rows(2, {{1, 1}, {0, 0}}));

    r = rref(FpMatrix::identity(3, 5));
    CHECK(r.rank == 3);
    CHECK(r.reduced == FpMatrix::identity(3, 5));

    r = rref(FpMatrix::from_rows(5, {{2, 4}, {1, 2}}));
    CHECK(r.rank == 1);
    CHECK(r.reduced == FpMatrix::from_rows(5, {{1, 2}, {0, 0}}));
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("kernel_basis examples") {
    CHECK(kernel_basis(FpMatrix::identity(2, 5)).dim() == 0);
    CHECK(kernel_basis(FpMatrix::zero(2, 3, 5)).dim() == 3);
    const auto k = kernel_basis(FpMatrix::from_rows(5, {{1, 2}}));
    REQUIRE(k.dim() == 1);
    CHECK(k.contains(FpVector{3, 1}));
}

TEST_CASE("solve examples") {
    auto x = solve(FpMatrix::from_rows(5, {{2}}), {1});
    REQUIRE(x);
    CHECK(*x == FpVector{3});
    x = solve(FpMatrix::identity(2, 5), {4, 0});
    REQUIRE(x);
    CHECK(*x == FpVector{4, 0});
    x = solve(FpMatrix::from_rows(2, {{1, 1}}), {1});
    REQUIRE(x);
    CHECK(*x == FpVector{1, 0});
    CHECK_FALSE(solve(FpMatrix::from_rows(5, {{1, 1}, {2, 2}}), {1, 0}));
    CHECK_THROWS_AS(solve(FpMatrix::identity(2, 5), {1}), DimensionMismatch);
}

TEST_CASE("cokernel examples") {
    auto c = cokernel(FpMatrix::identity(3, 5));
    CHECK(c.dim() == 0);
    CHECK(c.proj.cols() == 3);
    c = cokernel(FpMatrix::zero(3, 2, 5));
    CHECK(c.proj == FpMatrix::identity(3, 5));
    c = cokernel(FpMatrix::from_rows(5, {{1}, {2}}));
    CHECK(c.dim() == 1);
    CHECK((c.proj * FpMatrix::from_rows(5, {{1}, {2}})).is_zero());
}

TEST_CASE("kron examples") {
    const auto b = FpMatrix::from_rows(5, {{1, 2}, {3, 4}});
    CHECK(kron(FpMatrix::from_rows(5, {{3}}), b) == b.scaled(3));
    CHECK(kron(FpMatrix(2, 3, 5), FpMatrix(4, 5, 5)).rows() == 8);
    CHECK(kron(FpMatrix(2, 3, 5), FpMatrix(4, 5, 5)).cols() == 15);
    CHECK(kron(FpMatrix::identity(2, 5), FpMatrix::identity(3, 5)) == FpMatrix::identity(6, 5));
    CHECK_THROWS_AS(kron(FpMatrix::identity(2, 5), FpMatrix::identity(2, 3)), ModulusMismatch);
}

TEST_CASE("random linear algebra invariants") {
    SplitMix64 rng(7);
    for (std::uint32_t p : {2u, 5u}) {
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t r = rng.between(0, 30), c = rng.between(0, 30);
            FpMatrix a = random_matrix(rng, r, c, p);
            if (trial % 3 == 0 && r > 0 && c > 1) // force rank deficiency
                a = a * random_matrix(rng, c, c / 2, p) * random_matrix(rng, c / 2, c, p);
            const auto k = kernel_basis(a);
            CHECK(rank(a) + k.dim() == c);
            CHECK((a * k.basis()).is_zero());

            const auto co = cokernel(a);
            CHECK((co.proj * a).is_zero());
            CHECK((co.proj * co.section).is_identity());
            CHECK(co.dim() == r - rank(a));

            const FpVector b = random_matrix(rng, r, 1, p).col(0);
            const auto x = solve(a, b);
            const auto aug = rref(hstack(a, FpMatrix::column(p, b)));
            if (x)
                CHECK(a * *x == b);
            else
                CHECK((!aug.pivots.empty() && aug.pivots.back() == c));

            CHECK(rref(a).reduced == rref(a).reduced);
            CHECK(kernel_basis(a) == kernel_basis(a));
        }
    }
}

TEST_CASE("subspace operations") {
    SplitMix64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t d = rng.between(1, 12);
        const auto a = Subspace::span(random_matrix(rng, d, rng.between(0, d), 5));
        const auto b = Subspace::span(random_matrix(rng, d, rng.between(0, d), 5));
        const auto sum = a + b;
        const auto meet = a.intersect(b);
        CHECK(sum.dim() + meet.dim() == a.dim() + b.dim());
        CHECK(sum.contains(a));
        CHECK(a.contains(meet));
        CHECK(b.contains(meet));
        const auto comp = complement_in(a, sum);
        CHECK(comp.cols() + a.dim() == sum.dim());
        CHECK((a + Subspace::span(comp)) == sum);
        const auto inv = inverse(random_invertible(rng, d, 5));
        CHECK(inv.has_value());
    }
}

TEST_CASE("kernel accumulator matches stacked kernel") {
    SplitMix64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t u = rng.between(1, 15);
        KernelAccumulator acc(u, 5);
        FpMatrix stacked(0, u, 5);
        for (int k = 0; k < 3; ++k) {
            const auto c = random_matrix(rng, rng.between(0, 4), u, 5);
            acc.add_constraints(c);
            stacked = vstack(stacked, c);
        }
        CHECK(Subspace::span(acc.basis()) == kernel_basis(stacked));
    }
}
