#include "monocat/enumerate.hpp"

#include <algorithm>
#include <functional>

namespace monocat {

namespace {

constexpr std::uint64_t kLimit = 1u << 16;

std::uint64_t checked_power(std::uint32_t p, std::size_t e, const char* what) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= p;
        if (r > kLimit)
            throw InvalidArgument(std::string(what) + " too large to enumerate");
    }
    return r;
}

/// Calls f with every coefficient vector in GF(p)^d.
void for_each_vector(std::uint32_t p, std::size_t d, const std::function<void(const FpVector&)>& f) {
    FpVector v(d, 0);
    while (true) {
        f(v);
        std::size_t i = 0;
        while (i < d && ++v[i] == p)
            v[i++] = 0;
        if (i == d)
            return;
    }
}

bool basis_less(const Subspace& a, const Subspace& b) {
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    return a.basis().entries() < b.basis().entries();
}

} // namespace

std::vector<LambdaModule> modules_upto(const RingCtx& ctx, unsigned max_dim) {
    std::vector<LambdaModule> out;
    std::vector<unsigned> parts;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned largest, unsigned left) {
        out.push_back(from_blocks(ctx, parts));
        for (unsigned a = std::min(largest, left); a >= 1; --a) {
            parts.push_back(a);
            rec(a, left - a);
            parts.pop_back();
        }
    };
    rec(ctx.n, max_dim);
    return out;
}

std::vector<Subspace> invariant_subspaces(const LambdaModule& m) {
    const std::size_t d = m.dim();
    const std::uint32_t p = m.p();
    checked_power(p, d, "module");
    std::vector<Subspace> out;
    // Invariant subspaces are sums of cyclic submodules; grow them one cyclic
    // submodule at a time.
    std::vector<Subspace> frontier{Subspace::zero(d, p)};
    out.push_back(frontier.front());
    std::vector<FpVector> vectors;
    for_each_vector(p, d, [&](const FpVector& v) { vectors.push_back(v); });
    while (!frontier.empty()) {
        std::vector<Subspace> next;
        for (const Subspace& s : frontier)
            for (const FpVector& v : vectors) {
                if (s.contains(v))
                    continue;
                const Subspace t = s + generated_submodule(m, FpMatrix::column(p, v));
                if (std::find(out.begin(), out.end(), t) == out.end()) {
                    out.push_back(t);
                    next.push_back(t);
                }
            }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), basis_less);
    return out;
}

std::vector<FpMatrix> automorphisms(const LambdaModule& m) {
    const auto basis = hom_basis(m, m);
    checked_power(m.p(), basis.size(), "endomorphism ring");
    std::vector<FpMatrix> out;
    for_each_vector(m.p(), basis.size(), [&](const FpVector& c) {
        FpMatrix f = FpMatrix::zero(m.dim(), m.dim(), m.p());
        for (std::size_t i = 0; i < c.size(); ++i)
            if (c[i] != 0)
                f = f + basis[i].matrix().scaled(c[i]);
        if (rank(f) == m.dim())
            out.push_back(std::move(f));
    });
    return out;
}

std::vector<MorphObject> enumerate_monos(const RingCtx& ctx, unsigned max_dim) {
    std::vector<MorphObject> out;
    for (const LambdaModule& b : modules_upto(ctx, max_dim)) {
        const auto subs = invariant_subspaces(b);
        const auto auts = automorphisms(b);
        for (const Subspace& s : subs) {
            bool canonical = true;
            for (const FpMatrix& g : auts) {
                if (basis_less(Subspace::span(g * s.basis()), s)) {
                    canonical = false;
                    break;
                }
            }
            if (canonical)
                out.emplace_back(submodule(b, s).inclusion, Kind::S);
        }
    }
    return out;
}

std::vector<MorphObject> enumerate_epis(const RingCtx& ctx, unsigned max_dim) {
    std::vector<MorphObject> out;
    for (const MorphObject& s : enumerate_monos(ctx, max_dim))
        out.push_back(cok(s));
    return out;
}

} // namespace monocat
