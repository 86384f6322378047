#include "monocat/lambda.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <string>

namespace monocat {

struct LambdaModule::Cache {
    std::once_flag once;
    JordanBasis basis;
};

namespace {

FpMatrix shift_matrix(std::size_t a, std::uint32_t p) {
    FpMatrix x(a, a, p);
    for (std::size_t i = 0; i + 1 < a; ++i)
        x.at(i + 1, i) = 1;
    return x;
}

JordanBasis compute_jordan_basis(const LambdaModule& m) {
    const std::size_t d = m.dim();
    const std::uint32_t p = m.p();
    const unsigned n = m.ctx().n;
    const FpMatrix& x = m.action();

    // kernels[j] = ker X^j, j = 0..n+1
    std::vector<Subspace> kernels;
    kernels.reserve(n + 2);
    kernels.push_back(Subspace::zero(d, p));
    FpMatrix xp = FpMatrix::identity(d, p);
    for (unsigned j = 1; j <= n + 1; ++j) {
        xp = xp * x;
        kernels.push_back(kernel_basis(xp));
    }

    JordanBasis jb;
    std::vector<FpVector> columns;
    for (unsigned s = n; s >= 1; --s) {
        const Subspace& ks = kernels[s];
        const Subspace lower = kernels[s - 1] + Subspace::span(x * kernels[s + 1].basis());
        if (lower.dim() == ks.dim())
            continue;
        const FpMatrix gens = complement_in(lower, ks);
        for (std::size_t g = 0; g < gens.cols(); ++g) {
            FpVector v = gens.col(g);
            jb.sizes.push_back(s);
            jb.generators.push_back(v);
            for (unsigned k = 0; k < s; ++k) {
                columns.push_back(v);
                v = x * v;
            }
        }
    }
    jb.change = FpMatrix::from_columns(p, d, columns);
    auto inv = inverse(jb.change);
    if (!inv)
        throw InternalError("Jordan basis is not a basis");
    jb.change_inverse = std::move(*inv);
    return jb;
}

// The morphism M -> N sending the i-th Jordan generator of M to images[i].
LambdaMorphism from_generator_images(const LambdaModule& m, const LambdaModule& n,
                                     const std::vector<FpVector>& images) {
    const JordanBasis& jb = m.jordan_basis();
    if (images.size() != jb.generators.size())
        throw DimensionMismatch("one image per Jordan generator required");
    std::vector<FpVector> cols;
    cols.reserve(m.dim());
    for (std::size_t i = 0; i < images.size(); ++i) {
        FpVector v = images[i];
        for (unsigned k = 0; k < jb.sizes[i]; ++k) {
            cols.push_back(v);
            v = n.action() * v;
        }
        if (std::any_of(v.begin(), v.end(), [](std::uint32_t c) { return c != 0; }))
            throw NotLinear("generator image is not annihilated by x^a");
    }
    const FpMatrix adapted = FpMatrix::from_columns(n.p(), n.dim(), cols);
    return LambdaMorphism(m, n, adapted * jb.change_inverse);
}

} // namespace

// ------------------------------------------------------------------ RingCtx / JordanType

RingCtx::RingCtx(std::uint32_t p_, unsigned n_) : p(p_), n(n_) {
    Field validate(p_);
    (void)validate;
    if (n_ < 1)
        throw InvalidArgument("nilpotency index n must be at least 1");
}

unsigned JordanType::dim() const { return std::accumulate(blocks.begin(), blocks.end(), 0u); }

void require_same_ctx(const RingCtx& a, const RingCtx& b, const char* op) {
    if (!(a == b))
        throw ContextMismatch(std::string(op) + ": ring contexts (p=" + std::to_string(a.p) +
                              ",n=" + std::to_string(a.n) + ") and (p=" + std::to_string(b.p) +
                              ",n=" + std::to_string(b.n) + ") differ");
}

// ------------------------------------------------------------------ LambdaModule

LambdaModule::LambdaModule(const RingCtx& ctx, FpMatrix x)
    : ctx_(ctx), x_(std::move(x)), cache_(std::make_shared<Cache>()) {
    if (x_.rows() != x_.cols())
        throw NotLinear("action matrix must be square");
    if (x_.modulus() != ctx_.p)
        throw ModulusMismatch("action matrix modulus differs from ring context");
    if (!power(x_, ctx_.n).is_zero())
        throw NotLinear("action does not satisfy X^n = 0 for n = " + std::to_string(ctx_.n));
}

LambdaModule LambdaModule::zero(const RingCtx& ctx) { return LambdaModule(ctx, FpMatrix(0, 0, ctx.p)); }

const JordanBasis& LambdaModule::jordan_basis() const {
    if (!cache_)
        throw InvalidArgument("default-constructed module");
    std::call_once(cache_->once, [this] { cache_->basis = compute_jordan_basis(*this); });
    return cache_->basis;
}

// ------------------------------------------------------------------ LambdaMorphism

LambdaMorphism::LambdaMorphism(LambdaModule src, LambdaModule dst, FpMatrix f)
    : src_(std::move(src)), dst_(std::move(dst)), f_(std::move(f)) {
    require_same_ctx(src_.ctx(), dst_.ctx(), "morphism");
    if (f_.rows() != dst_.dim() || f_.cols() != src_.dim())
        throw DimensionMismatch("morphism matrix is " + std::to_string(f_.rows()) + "x" +
                                std::to_string(f_.cols()) + ", expected " + std::to_string(dst_.dim()) + "x" +
                                std::to_string(src_.dim()));
    if (f_.modulus() != src_.p())
        throw ModulusMismatch("morphism matrix modulus differs from ring context");
    if (!(f_ * src_.action() == dst_.action() * f_))
        throw NotLinear("matrix does not commute with the x-actions");
}

LambdaMorphism LambdaMorphism::identity(const LambdaModule& m) {
    return LambdaMorphism(m, m, FpMatrix::identity(m.dim(), m.p()));
}

LambdaMorphism LambdaMorphism::zero(const LambdaModule& src, const LambdaModule& dst) {
    return LambdaMorphism(src, dst, FpMatrix(dst.dim(), src.dim(), src.p()));
}

LambdaMorphism compose(const LambdaMorphism& g, const LambdaMorphism& f) {
    if (f.dst().dim() != g.src().dim())
        throw DimensionMismatch("compose: codomain and domain dimensions differ");
    return LambdaMorphism(f.src(), g.dst(), g.matrix() * f.matrix());
}

LambdaMorphism add(const LambdaMorphism& f, const LambdaMorphism& g) {
    return LambdaMorphism(f.src(), f.dst(), f.matrix() + g.matrix());
}

LambdaMorphism scale(const LambdaMorphism& f, std::uint32_t c) {
    return LambdaMorphism(f.src(), f.dst(), f.matrix().scaled(c));
}

LambdaMorphism direct_sum(const LambdaMorphism& f, const LambdaMorphism& g) {
    return LambdaMorphism(direct_sum(f.src(), g.src()), direct_sum(f.dst(), g.dst()),
                          block_diag(f.matrix(), g.matrix()));
}

LambdaMorphism row_join(const LambdaMorphism& f, const LambdaMorphism& g) {
    return LambdaMorphism(direct_sum(f.src(), g.src()), f.dst(), hstack(f.matrix(), g.matrix()));
}

LambdaMorphism col_join(const LambdaMorphism& f, const LambdaMorphism& g) {
    return LambdaMorphism(f.src(), direct_sum(f.dst(), g.dst()), vstack(f.matrix(), g.matrix()));
}

// ------------------------------------------------------------------ modules

LambdaModule direct_sum(const LambdaModule& a, const LambdaModule& b) {
    require_same_ctx(a.ctx(), b.ctx(), "direct_sum");
    return LambdaModule(a.ctx(), block_diag(a.action(), b.action()));
}

LambdaModule jordan_block(const RingCtx& ctx, unsigned a) {
    if (a < 1 || a > ctx.n)
        throw InvalidArgument("Jordan block size " + std::to_string(a) + " outside [1, " +
                              std::to_string(ctx.n) + "]");
    return LambdaModule(ctx, shift_matrix(a, ctx.p));
}

LambdaModule from_blocks(const RingCtx& ctx, const std::vector<unsigned>& blocks) {
    std::size_t d = 0;
    for (auto b : blocks) {
        if (b < 1 || b > ctx.n)
            throw InvalidArgument("Jordan block size " + std::to_string(b) + " outside [1, " +
                                  std::to_string(ctx.n) + "]");
        d += b;
    }
    FpMatrix x(d, d, ctx.p);
    std::size_t off = 0;
    for (auto b : blocks) {
        x.set_block(off, off, shift_matrix(b, ctx.p));
        off += b;
    }
    return LambdaModule(ctx, std::move(x));
}

LambdaModule free_module(const RingCtx& ctx, unsigned t) {
    return from_blocks(ctx, std::vector<unsigned>(t, ctx.n));
}

JordanType jordan_type(const LambdaModule& m) {
    const unsigned n = m.ctx().n;
    std::vector<std::size_t> r(n + 2, 0);
    r[0] = m.dim();
    FpMatrix xp = FpMatrix::identity(m.dim(), m.p());
    for (unsigned i = 1; i <= n + 1; ++i) {
        xp = xp * m.action();
        r[i] = rank(xp);
    }
    JordanType t;
    for (unsigned s = n; s >= 1; --s) {
        const std::size_t at_least_s = r[s - 1] - r[s];
        const std::size_t at_least_next = r[s] - r[s + 1];
        for (std::size_t k = 0; k < at_least_s - at_least_next; ++k)
            t.blocks.push_back(s);
    }
    return t;
}

LambdaModule canonical(const LambdaModule& m) { return from_blocks(m.ctx(), jordan_type(m).blocks); }

bool is_isomorphic(const LambdaModule& a, const LambdaModule& b) {
    require_same_ctx(a.ctx(), b.ctx(), "is_isomorphic");
    return jordan_type(a) == jordan_type(b);
}

JordanType stable_type(const JordanType& t, unsigned n) {
    JordanType out;
    for (auto b : t.blocks)
        if (b != n)
            out.blocks.push_back(b);
    return out;
}

bool is_projective(const LambdaModule& m) {
    const auto t = jordan_type(m);
    return std::all_of(t.blocks.begin(), t.blocks.end(), [&](unsigned b) { return b == m.ctx().n; });
}

LambdaModule conjugate(const LambdaModule& m, const FpMatrix& t) {
    auto inv = inverse(t);
    if (!inv)
        throw InvalidArgument("conjugate: matrix is singular");
    return LambdaModule(m.ctx(), *inv * m.action() * t);
}

// ------------------------------------------------------------------ sub and quotient

Submodule submodule(const LambdaModule& m, const Subspace& s) {
    const FpMatrix image = m.action() * s.basis();
    if (!s.contains(Subspace::span(image)))
        throw NotLinear("subspace is not x-invariant");
    const FpMatrix xs = s.coordinates_of(image);
    LambdaModule sub(m.ctx(), xs);
    LambdaMorphism inc(sub, m, s.basis());
    return {std::move(sub), std::move(inc)};
}

Quotient quotient(const LambdaModule& m, const Subspace& s) {
    const Cokernel c = cokernel(s.basis());
    if (!(c.proj * m.action() * s.basis()).is_zero())
        throw NotLinear("subspace is not x-invariant");
    LambdaModule q(m.ctx(), c.proj * m.action() * c.section);
    LambdaMorphism pr(m, q, c.proj);
    return {std::move(q), std::move(pr), c.section};
}

Subspace generated_submodule(const LambdaModule& m, const FpMatrix& generators) {
    FpMatrix acc = generators;
    FpMatrix cur = generators;
    for (unsigned k = 1; k < m.ctx().n; ++k) {
        cur = m.action() * cur;
        acc = hstack(acc, cur);
    }
    return Subspace::span(acc);
}

Submodule kernel(const LambdaMorphism& f) { return submodule(f.src(), kernel_basis(f.matrix())); }

Submodule image(const LambdaMorphism& f) { return submodule(f.dst(), Subspace::span(f.matrix())); }

Quotient cokernel(const LambdaMorphism& f) { return quotient(f.dst(), Subspace::span(f.matrix())); }

Subspace torsion(const LambdaModule& m, unsigned a) { return kernel_basis(power(m.action(), a)); }

Subspace radical_power(const LambdaModule& m, unsigned a) { return Subspace::span(power(m.action(), a)); }

FpMatrix poly_action(const LambdaModule& m, const FpVector& w) {
    const Field field(m.p());
    FpMatrix acc(m.dim(), m.dim(), m.p());
    FpMatrix xp = FpMatrix::identity(m.dim(), m.p());
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] != 0)
            acc = acc + xp.scaled(w[k]);
        if (k + 1 < w.size())
            xp = xp * m.action();
    }
    return acc;
}

LambdaMorphism from_generator(const LambdaModule& n, unsigned a, const FpVector& v) {
    const LambdaModule ja = jordan_block(n.ctx(), a);
    std::vector<FpVector> cols;
    FpVector cur = v;
    for (unsigned k = 0; k < a; ++k) {
        cols.push_back(cur);
        cur = n.action() * cur;
    }
    return LambdaMorphism(ja, n, FpMatrix::from_columns(n.p(), n.dim(), cols));
}

// ------------------------------------------------------------------ Hom

std::vector<LambdaMorphism> hom_basis(const LambdaModule& m, const LambdaModule& n) {
    require_same_ctx(m.ctx(), n.ctx(), "hom_basis");
    const JordanBasis& jb = m.jordan_basis();
    std::vector<LambdaMorphism> out;
    std::vector<FpVector> images(jb.generators.size(), FpVector(n.dim(), 0));
    for (std::size_t i = 0; i < jb.generators.size(); ++i) {
        const Subspace t = torsion(n, jb.sizes[i]);
        for (std::size_t k = 0; k < t.dim(); ++k) {
            auto imgs = images;
            imgs[i] = t.basis().col(k);
            out.push_back(from_generator_images(m, n, imgs));
        }
    }
    return out;
}

std::size_t hom_dim(const LambdaModule& m, const LambdaModule& n) {
    require_same_ctx(m.ctx(), n.ctx(), "hom_dim");
    std::size_t d = 0;
    for (auto a : m.jordan_basis().sizes)
        d += torsion(n, a).dim();
    return d;
}

FpMatrix vectorize(const std::vector<LambdaMorphism>& maps, std::size_t rows, std::size_t cols,
                   std::uint32_t p) {
    FpMatrix v(rows * cols, maps.size(), p);
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const auto& e = maps[k].matrix().entries();
        for (std::size_t i = 0; i < e.size(); ++i)
            v.at(i, k) = e[i];
    }
    return v;
}

FpVector hom_coordinates(const std::vector<LambdaMorphism>& hom, const LambdaMorphism& f) {
    const FpMatrix hv = vectorize(hom, f.dst().dim(), f.src().dim(), f.src().p());
    auto c = solve(hv, f.matrix().vec());
    if (!c)
        throw InternalError("morphism outside the span of the Hom basis");
    return *c;
}

// ------------------------------------------------------------------ covers and envelopes

ProjectiveCover projective_cover(const LambdaModule& m) {
    const RingCtx& ctx = m.ctx();
    const Cokernel top = cokernel(m.action());
    const std::size_t t = top.dim();
    LambdaModule p = free_module(ctx, unsigned(t));
    std::vector<FpVector> cols;
    cols.reserve(t * ctx.n);
    for (std::size_t i = 0; i < t; ++i) {
        FpVector v = top.section.col(i);
        for (unsigned k = 0; k < ctx.n; ++k) {
            cols.push_back(v);
            v = m.action() * v;
        }
    }
    LambdaMorphism pi(p, m, FpMatrix::from_columns(ctx.p, m.dim(), cols));
    if (!pi.is_surjective())
        throw InternalError("projective cover is not surjective");
    return {std::move(p), std::move(pi)};
}

FpMatrix reversal(std::size_t a, std::uint32_t p) {
    FpMatrix r(a, a, p);
    for (std::size_t i = 0; i < a; ++i)
        r.at(i, a - 1 - i) = 1;
    return r;
}

InjectiveEnvelope injective_envelope(const LambdaModule& m) {
    // Dualize the projective cover of the dual, then identify D(Λ) with Λ.
    const RingCtx& ctx = m.ctx();
    const ProjectiveCover pc = projective_cover(dual(m));
    const std::size_t s = pc.projective.dim() / ctx.n;
    FpMatrix r(0, 0, ctx.p);
    for (std::size_t i = 0; i < s; ++i)
        r = block_diag(r, reversal(ctx.n, ctx.p));
    LambdaModule inj = free_module(ctx, unsigned(s));
    LambdaMorphism iota(m, inj, r * pc.cover.matrix().transpose());
    if (!iota.is_injective())
        throw InternalError("injective envelope is not injective");
    return {std::move(inj), std::move(iota)};
}

Submodule syzygy_inclusion(const LambdaModule& m) { return kernel(projective_cover(m).cover); }

LambdaModule syzygy(const LambdaModule& m) { return canonical(syzygy_inclusion(m).module); }

LambdaModule cosyzygy(const LambdaModule& m) { return canonical(cokernel(injective_envelope(m).embedding).module); }

LambdaModule dual(const LambdaModule& m) { return LambdaModule(m.ctx(), m.action().transpose()); }

// ------------------------------------------------------------------ tensor and Tor

Tensor tensor(const LambdaModule& m, const LambdaModule& n) {
    require_same_ctx(m.ctx(), n.ctx(), "tensor");
    const std::uint32_t p = m.p();
    const FpMatrix im = FpMatrix::identity(m.dim(), p);
    const FpMatrix in = FpMatrix::identity(n.dim(), p);
    const FpMatrix left = kron(m.action(), in);
    const FpMatrix right = kron(im, n.action());
    const FpMatrix rel = left - right;
    const Cokernel c = cokernel(rel);
    if (!(c.proj * right * rel).is_zero())
        throw InternalError("tensor: induced action is not well defined");
    FpMatrix x = c.proj * right * c.section;
    if (!(c.proj * left * c.section == x))
        throw InternalError("tensor: left and right actions disagree on the quotient");
    return {LambdaModule(m.ctx(), std::move(x)), c.proj};
}

std::vector<std::vector<FpVector>> lambda_entries(const LambdaMorphism& f) {
    const unsigned n = f.src().ctx().n;
    if (f.src().dim() % n != 0 || f.dst().dim() % n != 0)
        throw InvalidArgument("lambda_entries: modules are not free");
    const std::size_t m = f.src().dim() / n;
    const std::size_t t = f.dst().dim() / n;
    std::vector<std::vector<FpVector>> e(t, std::vector<FpVector>(m, FpVector(n, 0)));
    for (std::size_t j = 0; j < m; ++j)
        for (std::size_t i = 0; i < t; ++i)
            for (unsigned k = 0; k < n; ++k)
                e[i][j][k] = f.matrix()(i * n + k, j * n);
    return e;
}

FpMatrix apply_lambda_matrix(const LambdaModule& m, const std::vector<std::vector<FpVector>>& entries,
                             std::size_t rows, std::size_t cols) {
    const std::size_t d = m.dim();
    FpMatrix out(rows * d, cols * d, m.p());
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out.set_block(i * d, j * d, poly_action(m, entries[i][j]));
    return out;
}

namespace {

// P -> target composed with the inclusion of target into its ambient module.
LambdaMorphism cover_of_submodule(const Submodule& sub) {
    const ProjectiveCover pc = projective_cover(sub.module);
    return compose(sub.inclusion, pc.cover);
}

} // namespace

ProjectivePresentation minimal_presentation(const LambdaModule& m) {
    ProjectiveCover pc = projective_cover(m);
    const Submodule omega = kernel(pc.cover);
    LambdaMorphism rel = cover_of_submodule(omega);
    return {std::move(rel), std::move(pc.cover)};
}

InjectiveCopresentation minimal_copresentation(const LambdaModule& m) {
    InjectiveEnvelope e0 = injective_envelope(m);
    const Quotient c = cokernel(e0.embedding);
    const InjectiveEnvelope e1 = injective_envelope(c.module);
    LambdaMorphism map = compose(e1.embedding, c.projection);
    return {std::move(e0.embedding), std::move(map)};
}

Tor1 tor1(const LambdaModule& m, const LambdaModule& n) {
    require_same_ctx(m.ctx(), n.ctx(), "tor1");
    // P2 -d2-> P1 -d1-> P0 -> N
    const ProjectiveCover pc0 = projective_cover(n);
    const LambdaMorphism d1 = cover_of_submodule(kernel(pc0.cover));
    const LambdaMorphism d2 = cover_of_submodule(kernel(d1));
    const unsigned ring_n = m.ctx().n;
    const std::size_t t0 = d1.dst().dim() / ring_n;
    const std::size_t t1 = d1.src().dim() / ring_n;
    const std::size_t t2 = d2.src().dim() / ring_n;
    const FpMatrix md1 = apply_lambda_matrix(m, lambda_entries(d1), t0, t1);
    const FpMatrix md2 = apply_lambda_matrix(m, lambda_entries(d2), t1, t2);
    if (!(md1 * md2).is_zero())
        throw InternalError("tor1: resolution does not compose to zero");
    const Subspace cycles = kernel_basis(md1);
    const Subspace boundaries = Subspace::span(md2);
    Tor1 out;
    out.dim = cycles.dim() - boundaries.dim();
    out.cycles_complement = Subspace::span(complement_in(boundaries, cycles));
    if (out.cycles_complement.dim() != out.dim)
        throw InternalError("tor1: complement has the wrong dimension");
    return out;
}

// ------------------------------------------------------------------ stable Hom

StableHom stable_hom(const LambdaModule& m, const LambdaModule& n) {
    require_same_ctx(m.ctx(), n.ctx(), "stable_hom");
    const std::uint32_t p = m.p();
    StableHom out;
    out.hom = hom_basis(m, n);
    const std::size_t h = out.hom.size();
    const FpMatrix hv = vectorize(out.hom, n.dim(), m.dim(), p);

    const ProjectiveCover pc = projective_cover(n);
    std::vector<LambdaMorphism> through;
    for (const auto& g : hom_basis(m, pc.projective))
        through.push_back(compose(pc.cover, g));
    const FpMatrix tv = vectorize(through, n.dim(), m.dim(), p);
    auto coords = solve_matrix(hv, tv);
    if (!coords)
        throw InternalError("stable_hom: composite outside Hom");
    out.projective_part = Subspace::span(coords->cols() ? *coords : FpMatrix(h, 0, p));
    const Cokernel c = cokernel(out.projective_part.basis());
    out.proj_coords = c.proj;
    for (std::size_t k = 0; k < c.dim(); ++k) {
        FpMatrix acc(n.dim(), m.dim(), p);
        for (std::size_t i = 0; i < h; ++i)
            if (c.section(i, k) != 0)
                acc = acc + out.hom[i].matrix().scaled(c.section(i, k));
        out.basis_reps.emplace_back(m, n, std::move(acc));
    }
    return out;
}

// ------------------------------------------------------------------ transpose

LambdaModule transpose(const LambdaModule& m) {
    const RingCtx& ctx = m.ctx();
    const ProjectivePresentation pres = minimal_presentation(m);
    const std::size_t t = pres.relations.dst().dim() / ctx.n;
    const std::size_t r = pres.relations.src().dim() / ctx.n;
    const auto entries = lambda_entries(pres.relations); // t x r
    std::vector<std::vector<FpVector>> dualized(r, std::vector<FpVector>(t));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < r; ++j)
            dualized[j][i] = entries[i][j];
    const LambdaModule lam = free_module(ctx, 1);
    const LambdaMorphism fstar(free_module(ctx, unsigned(t)), free_module(ctx, unsigned(r)),
                               apply_lambda_matrix(lam, dualized, r, t));
    return canonical(cokernel(fstar).module);
}

// ------------------------------------------------------------------ lifting and extension

LambdaMorphism extend_to_injective(const LambdaMorphism& incl, const LambdaMorphism& target) {
    const LambdaModule& y = incl.dst();
    const LambdaModule& inj = target.dst();
    const auto basis = hom_basis(y, inj);
    std::vector<LambdaMorphism> restricted;
    restricted.reserve(basis.size());
    for (const auto& b : basis)
        restricted.push_back(compose(b, incl));
    const FpMatrix sys = vectorize(restricted, inj.dim(), incl.src().dim(), y.p());
    auto c = solve(sys, target.matrix().vec());
    if (!c)
        throw InternalError("extend_to_injective: no extension exists (target not injective?)");
    FpMatrix acc(inj.dim(), y.dim(), y.p());
    for (std::size_t k = 0; k < basis.size(); ++k)
        if ((*c)[k] != 0)
            acc = acc + basis[k].matrix().scaled((*c)[k]);
    return LambdaMorphism(y, inj, std::move(acc));
}

LambdaMorphism lift_from_projective(const LambdaMorphism& epi, const LambdaMorphism& target) {
    const LambdaModule& proj = target.src();
    const JordanBasis& jb = proj.jordan_basis();
    std::vector<FpVector> images;
    for (std::size_t i = 0; i < jb.generators.size(); ++i) {
        if (jb.sizes[i] != proj.ctx().n)
            throw InvalidArgument("lift_from_projective: source is not projective");
        auto y = solve(epi.matrix(), target.matrix() * jb.generators[i]);
        if (!y)
            throw InternalError("lift_from_projective: target not in the image of epi");
        images.push_back(*y);
    }
    return from_generator_images(proj, epi.src(), images);
}

} // namespace monocat
