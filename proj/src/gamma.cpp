#include "monocat/gamma.hpp"

#include <map>
#include <mutex>

namespace monocat {

const char* variance_name(Variance v) { return v == Variance::Contra ? "contra" : "co"; }

const char* iso_name(IsoOutcome o) {
    switch (o) {
    case IsoOutcome::Iso:
        return "iso";
    case IsoOutcome::NotIso:
        return "not_iso";
    case IsoOutcome::Unknown:
        return "unknown";
    }
    return "?";
}

// ------------------------------------------------------------------ GammaAlgebra

std::size_t GammaAlgebra::idx(unsigned a, unsigned b) const {
    const unsigned m = stable_count();
    if (a < 1 || a > m || b < 1 || b > m)
        throw InvalidArgument("stable index outside [1, " + std::to_string(m) + "]");
    return (a - 1) * m + (b - 1);
}

GammaAlgebra::GammaAlgebra(const RingCtx& ctx) : ctx_(ctx) {
    if (ctx.n < 2)
        throw InvalidArgument("the stable Auslander algebra needs n >= 2");
    const unsigned m = stable_count();
    pairs_.resize(std::size_t(m) * m);
    for (unsigned a = 1; a <= m; ++a) {
        const LambdaModule ja = jordan_block(ctx, a);
        for (unsigned b = 1; b <= m; ++b) {
            const LambdaModule jb = jordan_block(ctx, b);
            const StableHom sh = stable_hom(ja, jb);
            Pair& pr = pairs_[idx(a, b)];
            pr.dim = sh.dim();
            pr.offset = basis_.size();
            pr.torsion = torsion(jb, a);
            FpMatrix h(sh.hom.size(), pr.torsion.dim(), ctx.p);
            for (std::size_t t = 0; t < pr.torsion.dim(); ++t) {
                const FpVector c = hom_coordinates(sh.hom, from_generator(jb, a, pr.torsion.basis().col(t)));
                for (std::size_t i = 0; i < c.size(); ++i)
                    h.at(i, t) = c[i];
            }
            pr.to_stable = sh.proj_coords * h;
            for (std::size_t k = 0; k < sh.projective_part.dim(); ++k) {
                FpMatrix f(jb.dim(), ja.dim(), ctx.p);
                for (std::size_t i = 0; i < sh.hom.size(); ++i)
                    if (auto c = sh.projective_part.basis()(i, k))
                        f = f + sh.hom[i].matrix().scaled(c);
                pr.projective.push_back(f.col(0));
            }
            for (const auto& r : sh.basis_reps)
                basis_.push_back({a, b, r, r.matrix().col(0)});
        }
    }

    identity_.resize(m);
    for (unsigned a = 1; a <= m; ++a) {
        FpVector e0(a, 0);
        e0[0] = 1;
        const FpVector c = stable_coords(a, a, e0);
        std::size_t found = basis_.size();
        for (std::size_t k = 0; k < c.size(); ++k)
            if (c[k] != 0) {
                if (found != basis_.size() || c[k] != 1)
                    found = basis_.size() + 1;
                else
                    found = pair_offset(a, a) + k;
            }
        if (found >= basis_.size())
            throw InternalError("identity of J_" + std::to_string(a) + " is not a basis element");
        identity_[a - 1] = found;
    }

    const std::size_t d = basis_.size();
    mult_.assign(d * d, FpVector{});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const auto& ei = basis_[i];
            const auto& ej = basis_[j];
            if (ei.b != ej.a)
                continue;
            mult_[i * d + j] = stable_coords(ei.a, ej.b, ej.rep.matrix() * ei.w);
        }
    validate();
}

FpVector GammaAlgebra::stable_coords(unsigned a, unsigned b, const FpVector& w) const {
    const Pair& pr = pairs_[idx(a, b)];
    if (w.size() != b)
        throw DimensionMismatch("generator image has the wrong length");
    const auto tc = pr.torsion.coordinates(w);
    if (!tc)
        throw NotLinear("vector is not the image of a morphism J_" + std::to_string(a) + " -> J_" + std::to_string(b));
    return pr.to_stable * *tc;
}

std::vector<std::vector<std::size_t>> GammaAlgebra::dims() const {
    const unsigned m = stable_count();
    std::vector<std::vector<std::size_t>> out(m, std::vector<std::size_t>(m));
    for (unsigned a = 1; a <= m; ++a)
        for (unsigned b = 1; b <= m; ++b)
            out[a - 1][b - 1] = pair_dim(a, b);
    return out;
}

void GammaAlgebra::validate() const {
    const Field f(ctx_.p);
    const std::size_t d = basis_.size();
    // products as full-length vectors
    auto full = [&](std::size_t i, std::size_t j) {
        FpVector v(d, 0);
        const FpVector& c = mult_[i * d + j];
        const std::size_t off = pair_offset(basis_[i].a, basis_[j].b);
        for (std::size_t k = 0; k < c.size(); ++k)
            v[off + k] = c[k];
        return v;
    };
    for (std::size_t i = 0; i < d; ++i) {
        const auto& ei = basis_[i];
        FpVector unit(d, 0);
        unit[i] = 1;
        if (full(identity_index(ei.a), i) != unit || full(i, identity_index(ei.b)) != unit)
            throw InternalError("stable Auslander algebra is not unital");
        for (std::size_t j = 0; j < d; ++j) {
            if (basis_[j].a != ei.b)
                continue;
            const FpVector ij = full(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                if (basis_[k].a != basis_[j].b)
                    continue;
                const FpVector jk = full(j, k);
                FpVector left(d, 0), right(d, 0);
                for (std::size_t m = 0; m < d; ++m) {
                    if (ij[m] != 0) {
                        const FpVector mk = full(m, k);
                        for (std::size_t r = 0; r < d; ++r)
                            left[r] = f.add(left[r], f.mul(ij[m], mk[r]));
                    }
                    if (jk[m] != 0) {
                        const FpVector im = full(i, m);
                        for (std::size_t r = 0; r < d; ++r)
                            right[r] = f.add(right[r], f.mul(jk[m], im[r]));
                    }
                }
                if (left != right)
                    throw InternalError("stable Auslander algebra is not associative");
            }
        }
    }
}

std::shared_ptr<const GammaAlgebra> gamma_algebra(const RingCtx& ctx) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, unsigned>, std::shared_ptr<const GammaAlgebra>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{ctx.p, ctx.n}];
    if (!slot)
        slot = std::make_shared<const GammaAlgebra>(ctx);
    return slot;
}

// ------------------------------------------------------------------ GammaModule

std::size_t GammaModule::act_src(std::size_t i) const {
    const auto& e = alg_->element(i);
    return (var_ == Variance::Contra ? e.b : e.a) - 1;
}

std::size_t GammaModule::act_dst(std::size_t i) const {
    const auto& e = alg_->element(i);
    return (var_ == Variance::Contra ? e.a : e.b) - 1;
}

std::size_t GammaModule::total_dim() const {
    std::size_t t = 0;
    for (auto d : dims_)
        t += d;
    return t;
}

namespace {

FpMatrix combine(const std::vector<FpMatrix>& actions, std::size_t offset, const FpVector& c, std::size_t rows,
                 std::size_t cols, std::uint32_t p) {
    FpMatrix acc(rows, cols, p);
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] != 0)
            acc = acc + actions[offset + k].scaled(c[k]);
    return acc;
}

std::string triple(const GammaAlgebra& alg, std::size_t i, std::size_t j) {
    const auto& ei = alg.element(i);
    const auto& ej = alg.element(j);
    return "(J_" + std::to_string(ei.a) + " -> J_" + std::to_string(ei.b) + " -> J_" + std::to_string(ej.b) +
           ", basis " + std::to_string(i) + ", " + std::to_string(j) + ")";
}

} // namespace

GammaModule::GammaModule(std::shared_ptr<const GammaAlgebra> alg, Variance var, std::vector<std::size_t> dims,
                         std::vector<FpMatrix> actions)
    : alg_(std::move(alg)), var_(var), dims_(std::move(dims)), actions_(std::move(actions)) {
    const GammaAlgebra& A = *alg_;
    const std::uint32_t p = A.ctx().p;
    if (dims_.size() != A.stable_count())
        throw DimensionMismatch("one value dimension per stable indecomposable required");
    if (actions_.size() != A.dim())
        throw DimensionMismatch("one action matrix per basis element required");
    for (std::size_t i = 0; i < A.dim(); ++i) {
        const auto& m = actions_[i];
        if (m.rows() != dims_[act_dst(i)] || m.cols() != dims_[act_src(i)] || m.modulus() != p)
            throw DimensionMismatch("action matrix " + std::to_string(i) + " has the wrong shape");
    }
    for (unsigned a = 1; a <= A.stable_count(); ++a)
        if (!actions_[A.identity_index(a)].is_identity())
            throw CompatibilityViolation("identity of J_" + std::to_string(a) + " does not act as the identity");
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const FpVector& c = A.product(i, j);
            if (A.element(i).b != A.element(j).a)
                continue;
            const auto& ei = A.element(i);
            const auto& ej = A.element(j);
            const std::size_t off = A.pair_offset(ei.a, ej.b);
            const FpMatrix expected =
                var_ == Variance::Contra ? actions_[i] * actions_[j] : actions_[j] * actions_[i];
            const FpMatrix got = combine(actions_, off, c, expected.rows(), expected.cols(), p);
            if (!(got == expected))
                throw CompatibilityViolation("composition compatibility fails at " + triple(A, i, j));
        }
}

GammaModule GammaModule::zero(std::shared_ptr<const GammaAlgebra> alg, Variance var) {
    const std::size_t m = alg->stable_count();
    std::vector<FpMatrix> actions(alg->dim(), FpMatrix(0, 0, alg->ctx().p));
    return GammaModule(std::move(alg), var, std::vector<std::size_t>(m, 0), std::move(actions));
}

GammaModule GammaModule::from_functor(std::shared_ptr<const GammaAlgebra> alg, Variance var, const FunctorData& data) {
    const GammaAlgebra& A = *alg;
    const unsigned m = A.stable_count();
    if (data.dims.size() != m)
        throw DimensionMismatch("one value dimension per stable indecomposable required");
    auto checked = [&](unsigned a, unsigned b, const FpVector& w) {
        FpMatrix mat = data.act(a, b, w);
        const std::size_t rows = data.dims[(var == Variance::Contra ? a : b) - 1];
        const std::size_t cols = data.dims[(var == Variance::Contra ? b : a) - 1];
        if (mat.rows() != rows || mat.cols() != cols)
            throw DimensionMismatch("functor data action for J_" + std::to_string(a) + " -> J_" + std::to_string(b) +
                                    " has the wrong shape");
        return mat;
    };
    for (unsigned a = 1; a <= m; ++a)
        for (unsigned b = 1; b <= m; ++b)
            for (const auto& w : A.projective_maps(a, b))
                if (!checked(a, b, w).is_zero())
                    throw CompatibilityViolation("a map J_" + std::to_string(a) + " -> J_" + std::to_string(b) +
                                                 " factoring through a projective acts nonzero");
    std::vector<FpMatrix> actions;
    actions.reserve(A.dim());
    for (const auto& e : A.basis())
        actions.push_back(checked(e.a, e.b, e.w));
    // functoriality on the raw data, not only through structure constants
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const auto& ei = A.element(i);
            const auto& ej = A.element(j);
            if (ei.b != ej.a)
                continue;
            const FpMatrix comp = checked(ei.a, ej.b, ej.rep.matrix() * ei.w);
            const FpMatrix expected =
                var == Variance::Contra ? actions[i] * actions[j] : actions[j] * actions[i];
            if (!(comp == expected))
                throw CompatibilityViolation("functor data is not functorial at " + triple(A, i, j));
        }
    return GammaModule(std::move(alg), var, data.dims, std::move(actions));
}

FpMatrix GammaModule::act(unsigned a, unsigned b, const FpVector& w) const {
    const FpVector c = alg_->stable_coords(a, b, w);
    const std::size_t rows = dims_[(var_ == Variance::Contra ? a : b) - 1];
    const std::size_t cols = dims_[(var_ == Variance::Contra ? b : a) - 1];
    return combine(actions_, alg_->pair_offset(a, b), c, rows, cols, alg_->ctx().p);
}

GammaModule direct_sum(const GammaModule& a, const GammaModule& b) {
    if (a.algebra_ptr() != b.algebra_ptr() && !(a.algebra().ctx() == b.algebra().ctx()))
        throw ContextMismatch("direct_sum: Γ-modules over different algebras");
    if (a.variance() != b.variance())
        throw KindMismatch("direct_sum: variance differs");
    std::vector<std::size_t> dims(a.dims().size());
    for (std::size_t i = 0; i < dims.size(); ++i)
        dims[i] = a.dims()[i] + b.dims()[i];
    std::vector<FpMatrix> actions;
    for (std::size_t i = 0; i < a.actions().size(); ++i)
        actions.push_back(block_diag(a.action(i), b.action(i)));
    return GammaModule(a.algebra_ptr(), a.variance(), std::move(dims), std::move(actions));
}

// ------------------------------------------------------------------ homomorphisms

namespace {

void require_compatible(const GammaModule& g1, const GammaModule& g2) {
    if (!(g1.algebra().ctx() == g2.algebra().ctx()))
        throw ContextMismatch("Γ-modules over different algebras");
    if (g1.variance() != g2.variance())
        throw KindMismatch("Γ-modules of different variance");
}

struct Layout {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
};

Layout hom_layout(const GammaModule& g1, const GammaModule& g2) {
    Layout l;
    for (std::size_t a = 0; a < g1.dims().size(); ++a) {
        l.offset.push_back(l.total);
        l.total += g1.dims()[a] * g2.dims()[a];
    }
    return l;
}

GammaHom unpack(const GammaModule& g1, const GammaModule& g2, const Layout& l, const FpVector& v) {
    GammaHom h;
    const std::uint32_t p = g1.algebra().ctx().p;
    for (std::size_t a = 0; a < g1.dims().size(); ++a)
        h.push_back(FpMatrix::unvec(p, g2.dims()[a], g1.dims()[a],
                                    std::span<const std::uint32_t>(v.data() + l.offset[a], g1.dims()[a] * g2.dims()[a])));
    return h;
}

FpVector pack(const Layout& l, const GammaHom& h) {
    FpVector v(l.total, 0);
    for (std::size_t a = 0; a < h.size(); ++a) {
        const auto& e = h[a].entries();
        std::copy(e.begin(), e.end(), v.begin() + std::ptrdiff_t(l.offset[a]));
    }
    return v;
}

} // namespace

std::vector<GammaHom> intertwiners(const GammaModule& g1, const GammaModule& g2) {
    require_compatible(g1, g2);
    const std::uint32_t p = g1.algebra().ctx().p;
    const Layout l = hom_layout(g1, g2);
    KernelAccumulator acc(l.total, p);
    for (std::size_t i = 0; i < g1.algebra().dim() && acc.dim() > 0; ++i) {
        const std::size_t s = g1.act_src(i), d = g1.act_dst(i);
        const FpMatrix& a1 = g1.action(i);
        const FpMatrix& a2 = g2.action(i);
        const std::size_t rows = g2.dims()[d] * g1.dims()[s];
        if (rows == 0)
            continue;
        FpMatrix c(rows, l.total, p);
        // T_d A1 - A2 T_s = 0
        const FpMatrix left = kron(FpMatrix::identity(g2.dims()[d], p), a1.transpose());
        const FpMatrix right = kron(a2, FpMatrix::identity(g1.dims()[s], p));
        c.set_block(0, l.offset[d], left);
        const FpMatrix existing = c.block(0, l.offset[s], rows, right.cols());
        c.set_block(0, l.offset[s], existing - right);
        acc.add_constraints(c);
    }
    std::vector<GammaHom> out;
    for (std::size_t k = 0; k < acc.dim(); ++k)
        out.push_back(unpack(g1, g2, l, acc.basis().col(k)));
    return out;
}

std::size_t hom_dim(const GammaModule& g1, const GammaModule& g2) { return intertwiners(g1, g2).size(); }

bool is_homomorphism(const GammaModule& g1, const GammaModule& g2, const GammaHom& h) {
    require_compatible(g1, g2);
    if (h.size() != g1.dims().size())
        return false;
    for (std::size_t a = 0; a < h.size(); ++a)
        if (h[a].rows() != g2.dims()[a] || h[a].cols() != g1.dims()[a])
            return false;
    for (std::size_t i = 0; i < g1.algebra().dim(); ++i)
        if (!(h[g1.act_dst(i)] * g1.action(i) == g2.action(i) * h[g1.act_src(i)]))
            return false;
    return true;
}

std::optional<FpVector> gamma_hom_coordinates(const std::vector<GammaHom>& basis, const GammaHom& h) {
    Layout l;
    for (const auto& m : h) {
        l.offset.push_back(l.total);
        l.total += m.rows() * m.cols();
    }
    const std::uint32_t p = h.empty() ? 2 : h[0].modulus();
    FpMatrix sys(l.total, basis.size(), p);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const FpVector v = pack(l, basis[k]);
        for (std::size_t r = 0; r < l.total; ++r)
            sys.at(r, k) = v[r];
    }
    return solve(sys, pack(l, h));
}

namespace {

bool invertible(const GammaHom& h) {
    for (const auto& m : h)
        if (m.rows() != m.cols() || rank(m) != m.rows())
            return false;
    return true;
}

GammaHom combination(const std::vector<GammaHom>& basis, const FpVector& c, const GammaHom& shape) {
    GammaHom out = shape;
    for (std::size_t k = 0; k < basis.size(); ++k)
        if (c[k] != 0)
            for (std::size_t a = 0; a < out.size(); ++a)
                out[a] = out[a] + basis[k][a].scaled(c[k]);
    return out;
}

} // namespace

IsoResult iso_test(const GammaModule& g1, const GammaModule& g2, std::uint64_t seed) {
    require_compatible(g1, g2);
    IsoResult r;
    if (g1.dims() != g2.dims()) {
        r.outcome = IsoOutcome::NotIso;
        r.reason = "value dimensions differ";
        return r;
    }
    const auto basis = intertwiners(g1, g2);
    const std::size_t h12 = basis.size();
    const std::size_t h21 = hom_dim(g2, g1), h11 = hom_dim(g1, g1), h22 = hom_dim(g2, g2);
    if (h12 != h11 || h21 != h11 || h22 != h11) {
        r.outcome = IsoOutcome::NotIso;
        r.reason = "Hom dimensions differ: (" + std::to_string(h11) + "," + std::to_string(h12) + "," +
                   std::to_string(h21) + "," + std::to_string(h22) + ")";
        return r;
    }
    return search_invertible(basis, g1.dims(), g1.algebra().ctx().p, seed);
}

IsoResult search_invertible(const std::vector<GammaHom>& basis, const std::vector<std::size_t>& dims,
                            std::uint32_t p, std::uint64_t seed) {
    IsoResult r;
    GammaHom shape;
    std::size_t total = 0;
    for (auto d : dims) {
        shape.emplace_back(d, d, p);
        total += d;
    }
    if (total == 0) {
        r.outcome = IsoOutcome::Iso;
        r.witness = shape;
        r.reason = "both sides are zero";
        return r;
    }

    SplitMix64 rng(seed);
    auto random_trials = [&](int count) -> bool {
        for (int t = 0; t < count; ++t) {
            FpVector c(basis.size());
            for (auto& x : c)
                x = std::uint32_t(rng.below(p));
            GammaHom cand = combination(basis, c, shape);
            if (invertible(cand)) {
                r.outcome = IsoOutcome::Iso;
                r.witness = std::move(cand);
                r.reason = "invertible intertwiner found";
                return true;
            }
        }
        return false;
    };
    if (random_trials(8))
        return r;

    double space = 1;
    for (std::size_t k = 0; k < basis.size() && space <= 1e6; ++k)
        space *= p;
    if (space <= 1e6) {
        FpVector c(basis.size(), 0);
        for (;;) {
            GammaHom cand = combination(basis, c, shape);
            if (invertible(cand)) {
                r.outcome = IsoOutcome::Iso;
                r.witness = std::move(cand);
                r.reason = "invertible intertwiner found by enumeration";
                return r;
            }
            std::size_t k = 0;
            for (; k < c.size(); ++k) {
                if (++c[k] < p)
                    break;
                c[k] = 0;
            }
            if (k == c.size())
                break;
        }
        r.outcome = IsoOutcome::NotIso;
        r.reason = "no invertible element among all " + std::to_string(std::uint64_t(space)) + " intertwiners";
        return r;
    }
    if (random_trials(64))
        return r;
    r.outcome = IsoOutcome::Unknown;
    r.reason = "no invertible intertwiner in 72 random trials; space too large to enumerate";
    return r;
}

// ------------------------------------------------------------------ stable representables

GammaModule stable_representable_contra(std::shared_ptr<const GammaAlgebra> alg, const LambdaModule& m) {
    const RingCtx& ctx = alg->ctx();
    require_same_ctx(ctx, m.ctx(), "stable_representable_contra");
    const unsigned k = alg->stable_count();
    std::vector<StableHom> sh;
    FunctorData data;
    for (unsigned a = 1; a <= k; ++a) {
        sh.push_back(stable_hom(jordan_block(ctx, a), m));
        data.dims.push_back(sh.back().dim());
    }
    data.act = [&](unsigned a, unsigned b, const FpVector& w) {
        // r ↦ r ∘ φ : stable-Hom(J_b, M) -> stable-Hom(J_a, M)
        const LambdaMorphism phi = from_generator(jordan_block(ctx, b), a, w);
        const StableHom& sa = sh[a - 1];
        const StableHom& sb = sh[b - 1];
        FpMatrix out(sa.dim(), sb.dim(), ctx.p);
        for (std::size_t j = 0; j < sb.dim(); ++j) {
            const FpVector c = sa.proj_coords * hom_coordinates(sa.hom, compose(sb.basis_reps[j], phi));
            for (std::size_t i = 0; i < c.size(); ++i)
                out.at(i, j) = c[i];
        }
        return out;
    };
    return GammaModule::from_functor(std::move(alg), Variance::Contra, data);
}

GammaModule stable_representable_co(std::shared_ptr<const GammaAlgebra> alg, const LambdaModule& m) {
    const RingCtx& ctx = alg->ctx();
    require_same_ctx(ctx, m.ctx(), "stable_representable_co");
    const unsigned k = alg->stable_count();
    std::vector<StableHom> sh;
    FunctorData data;
    for (unsigned a = 1; a <= k; ++a) {
        sh.push_back(stable_hom(m, jordan_block(ctx, a)));
        data.dims.push_back(sh.back().dim());
    }
    data.act = [&](unsigned a, unsigned b, const FpVector& w) {
        // r ↦ φ ∘ r : stable-Hom(M, J_a) -> stable-Hom(M, J_b)
        const LambdaMorphism phi = from_generator(jordan_block(ctx, b), a, w);
        const StableHom& sa = sh[a - 1];
        const StableHom& sb = sh[b - 1];
        FpMatrix out(sb.dim(), sa.dim(), ctx.p);
        for (std::size_t j = 0; j < sa.dim(); ++j) {
            const FpVector c = sb.proj_coords * hom_coordinates(sb.hom, compose(phi, sa.basis_reps[j]));
            for (std::size_t i = 0; i < c.size(); ++i)
                out.at(i, j) = c[i];
        }
        return out;
    };
    return GammaModule::from_functor(std::move(alg), Variance::Co, data);
}

} // namespace monocat
