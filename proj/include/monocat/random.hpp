#pragma once

// Seeded random instances for property sweeps.

#include "monocat/lambda.hpp"
#include "monocat/rng.hpp"

namespace monocat {

FpMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, std::uint32_t p);
FpMatrix random_invertible(SplitMix64& rng, std::size_t d, std::uint32_t p);
/// Random Jordan type with total dimension in [0, max_dim].
std::vector<unsigned> random_blocks(SplitMix64& rng, unsigned n, unsigned max_dim);
/// A module of random Jordan type in a random basis.
LambdaModule random_module(SplitMix64& rng, const RingCtx& ctx, unsigned max_dim);
/// Uniform element of Hom(M, N).
LambdaMorphism random_morphism(SplitMix64& rng, const LambdaModule& m, const LambdaModule& n);
/// Inclusion of a submodule generated by up to `gens` random vectors.
LambdaMorphism random_mono(SplitMix64& rng, const LambdaModule& y, unsigned gens);

} // namespace monocat
