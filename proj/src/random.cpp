#include "monocat/random.hpp"

namespace monocat {

FpMatrix random_matrix(SplitMix64& rng, std::size_t rows, std::size_t cols, std::uint32_t p) {
    FpMatrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = std::uint32_t(rng.below(p));
    return m;
}

FpMatrix random_invertible(SplitMix64& rng, std::size_t d, std::uint32_t p) {
    for (;;) {
        FpMatrix m = random_matrix(rng, d, d, p);
        if (rank(m) == d)
            return m;
    }
}

std::vector<unsigned> random_blocks(SplitMix64& rng, unsigned n, unsigned max_dim) {
    std::vector<unsigned> blocks;
    unsigned total = 0;
    const unsigned target = unsigned(rng.between(0, max_dim));
    while (total < target) {
        const unsigned room = std::min(n, target - total);
        const unsigned b = unsigned(rng.between(1, room));
        blocks.push_back(b);
        total += b;
    }
    return blocks;
}

LambdaModule random_module(SplitMix64& rng, const RingCtx& ctx, unsigned max_dim) {
    const LambdaModule jnf = from_blocks(ctx, random_blocks(rng, ctx.n, max_dim));
    return conjugate(jnf, random_invertible(rng, jnf.dim(), ctx.p));
}

LambdaMorphism random_morphism(SplitMix64& rng, const LambdaModule& m, const LambdaModule& n) {
    FpMatrix acc(n.dim(), m.dim(), m.p());
    for (const auto& b : hom_basis(m, n)) {
        const auto c = std::uint32_t(rng.below(m.p()));
        if (c != 0)
            acc = acc + b.matrix().scaled(c);
    }
    return LambdaMorphism(m, n, std::move(acc));
}

LambdaMorphism random_mono(SplitMix64& rng, const LambdaModule& y, unsigned gens) {
    const unsigned k = unsigned(rng.between(0, gens));
    const Subspace s = generated_submodule(y, random_matrix(rng, y.dim(), k, y.p()));
    return submodule(y, s).inclusion;
}

} // namespace monocat
