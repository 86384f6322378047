#include "monocat/funcat.hpp"

namespace monocat {

namespace {

// x^a w = 0 in J_b, i.e. w is the generator image of a map J_a -> J_b.
void require_map(unsigned a, unsigned b, const FpVector& w) {
    if (w.size() != b)
        throw DimensionMismatch("generator image has length " + std::to_string(w.size()) + ", expected " +
                                std::to_string(b));
    for (unsigned k = 0; k + a < b; ++k)
        if (w[k] != 0)
            throw NotLinear("vector is not the image of a morphism J_" + std::to_string(a) + " -> J_" +
                            std::to_string(b));
}

// Generator images spanning the radical maps J_a -> J_b.
std::vector<FpVector> radical_maps(const RingCtx& ctx, unsigned a, unsigned b) {
    const Subspace t = torsion(jordan_block(ctx, b), a);
    std::vector<FpVector> out;
    for (std::size_t k = 0; k < t.dim(); ++k) {
        FpVector w = t.basis().col(k);
        if (a == b && w[0] != 0)
            continue;
        out.push_back(std::move(w));
    }
    return out;
}

// Span of the images of the given subspaces of L under all radical maps into J_a.
Subspace radical_image(const LambdaModule& l, unsigned a, const std::vector<Subspace>& spaces) {
    const RingCtx& ctx = l.ctx();
    Subspace rad = Subspace::zero(l.dim(), ctx.p);
    for (unsigned b = 1; b <= ctx.n; ++b) {
        const Subspace& kb = spaces[b - 1];
        if (kb.dim() == 0)
            continue;
        for (const auto& w : radical_maps(ctx, a, b))
            rad = rad + Subspace::span(poly_action(l, w) * kb.basis());
    }
    return rad;
}

LambdaMorphism from_generators(const LambdaModule& l, const std::vector<std::pair<unsigned, FpVector>>& gens) {
    std::vector<unsigned> sizes;
    std::vector<FpVector> cols;
    for (const auto& [a, v] : gens) {
        sizes.push_back(a);
        FpVector cur = v;
        for (unsigned k = 0; k < a; ++k) {
            cols.push_back(cur);
            cur = l.action() * cur;
        }
    }
    const LambdaModule e = from_blocks(l.ctx(), sizes);
    return LambdaMorphism(e, l, FpMatrix::from_columns(l.p(), l.dim(), cols));
}

struct Constraint {
    std::size_t src, dst;
    FpMatrix a1, a2;
};

std::vector<GammaHom> solve_intertwiners(const std::vector<std::size_t>& d1, const std::vector<std::size_t>& d2,
                                         const std::vector<Constraint>& cs, std::uint32_t p) {
    std::vector<std::size_t> offset;
    std::size_t total = 0;
    for (std::size_t a = 0; a < d1.size(); ++a) {
        offset.push_back(total);
        total += d1[a] * d2[a];
    }
    KernelAccumulator acc(total, p);
    for (const auto& c : cs) {
        if (acc.dim() == 0)
            break;
        const std::size_t rows = d2[c.dst] * d1[c.src];
        if (rows == 0)
            continue;
        FpMatrix sys(rows, total, p);
        sys.set_block(0, offset[c.dst], kron(FpMatrix::identity(d2[c.dst], p), c.a1.transpose()));
        const FpMatrix right = kron(c.a2, FpMatrix::identity(d1[c.src], p));
        const FpMatrix existing = sys.block(0, offset[c.src], rows, right.cols());
        sys.set_block(0, offset[c.src], existing - right);
        acc.add_constraints(sys);
    }
    std::vector<GammaHom> out;
    for (std::size_t k = 0; k < acc.dim(); ++k) {
        const FpVector v = acc.basis().col(k);
        GammaHom h;
        for (std::size_t a = 0; a < d1.size(); ++a)
            h.push_back(FpMatrix::unvec(p, d2[a], d1[a],
                                        std::span<const std::uint32_t>(v.data() + offset[a], d1[a] * d2[a])));
        out.push_back(std::move(h));
    }
    return out;
}

} // namespace

// ------------------------------------------------------------------ ContraFunctor

ContraFunctor::ContraFunctor(LambdaMorphism u) : u_(std::move(u)) {
    const LambdaModule& a = u_.src();
    const LambdaModule& b = u_.dst();
    auto values = std::make_shared<std::vector<Value>>();
    for (unsigned k = 1; k <= ctx().n; ++k) {
        Value v;
        v.torsion = torsion(b, k);
        const FpMatrix img = v.torsion.coordinates_of(u_.matrix() * torsion(a, k).basis());
        v.cok = cokernel(img);
        values->push_back(std::move(v));
    }
    values_ = std::move(values);
}

ContraFunctor ContraFunctor::representable(const LambdaModule& m) {
    return ContraFunctor(LambdaMorphism::zero(LambdaModule::zero(m.ctx()), m));
}

std::size_t ContraFunctor::value_dim(unsigned a) const { return (*values_).at(a - 1).cok.dim(); }

std::vector<std::size_t> ContraFunctor::dims() const {
    std::vector<std::size_t> d;
    for (const auto& v : *values_)
        d.push_back(v.cok.dim());
    return d;
}

FpMatrix ContraFunctor::act(unsigned a, unsigned b, const FpVector& w) const {
    require_map(a, b, w);
    const Value& va = (*values_).at(a - 1);
    const Value& vb = (*values_).at(b - 1);
    const FpMatrix pw = poly_action(u_.dst(), w);
    const FpMatrix images = pw * vb.torsion.basis() * vb.cok.section;
    return va.cok.proj * va.torsion.coordinates_of(images);
}

std::size_t ContraFunctor::eval_dim(const LambdaModule& t) const {
    const auto hb = hom_basis(t, u_.dst());
    std::vector<LambdaMorphism> through;
    for (const auto& h : hom_basis(t, u_.src()))
        through.push_back(compose(u_, h));
    return hb.size() - rank(vectorize(through, u_.dst().dim(), t.dim(), t.p()));
}

FpVector ContraFunctor::value_rep(unsigned a, std::size_t k) const {
    const Value& v = (*values_).at(a - 1);
    return v.torsion.basis() * v.cok.section.col(k);
}

FpVector ContraFunctor::value_coords(unsigned a, const FpVector& x) const {
    const Value& v = (*values_).at(a - 1);
    const auto c = v.torsion.coordinates(x);
    if (!c)
        throw InvalidArgument("vector is not killed by x^" + std::to_string(a));
    return v.cok.proj * *c;
}

FunctorData ContraFunctor::data() const {
    FunctorData d;
    d.dims = dims();
    d.act = [self = *this](unsigned a, unsigned b, const FpVector& w) { return self.act(a, b, w); };
    return d;
}

FunctorData ContraFunctor::stable_data() const {
    FunctorData d = data();
    d.dims.pop_back();
    return d;
}

GammaModule ContraFunctor::to_gamma(std::shared_ptr<const GammaAlgebra> alg) const {
    require_same_ctx(alg->ctx(), ctx(), "to_gamma");
    if (value_dim(ctx().n) != 0)
        throw CompatibilityViolation("functor does not vanish on Λ (value dimension " +
                                     std::to_string(value_dim(ctx().n)) + ")");
    return GammaModule::from_functor(std::move(alg), Variance::Contra, stable_data());
}

// ------------------------------------------------------------------ CoFunctor

CoFunctor::CoFunctor(LambdaMorphism v) : v_(std::move(v)) {
    const LambdaModule& e0 = v_.src();
    const LambdaModule& e1 = v_.dst();
    auto values = std::make_shared<std::vector<Value>>();
    for (unsigned k = 1; k <= ctx().n; ++k) {
        Value val;
        val.quotient = cokernel(power(e0.action(), k));
        const Cokernel q1 = cokernel(power(e1.action(), k));
        val.kernel = kernel_basis(q1.proj * v_.matrix() * val.quotient.section);
        values->push_back(std::move(val));
    }
    values_ = std::move(values);
}

std::size_t CoFunctor::value_dim(unsigned a) const { return (*values_).at(a - 1).kernel.dim(); }

std::vector<std::size_t> CoFunctor::dims() const {
    std::vector<std::size_t> d;
    for (const auto& v : *values_)
        d.push_back(v.kernel.dim());
    return d;
}

FpMatrix CoFunctor::act(unsigned a, unsigned b, const FpVector& w) const {
    require_map(a, b, w);
    const Value& va = (*values_).at(a - 1);
    const Value& vb = (*values_).at(b - 1);
    const FpMatrix pw = poly_action(v_.src(), w);
    const FpMatrix images = vb.quotient.proj * pw * va.quotient.section * va.kernel.basis();
    return vb.kernel.coordinates_of(images);
}

std::size_t CoFunctor::eval_dim(const LambdaModule& t) const {
    const Tensor t0 = tensor(t, v_.src());
    const Tensor t1 = tensor(t, v_.dst());
    const FpMatrix induced = t1.proj * kron(FpMatrix::identity(t.dim(), t.p()), v_.matrix());
    return t0.module.dim() - rank(induced);
}

FpVector CoFunctor::value_rep(unsigned a, std::size_t k) const {
    const Value& v = (*values_).at(a - 1);
    return v.quotient.section * v.kernel.basis().col(k);
}

FpVector CoFunctor::value_coords(unsigned a, const FpVector& x) const {
    const Value& v = (*values_).at(a - 1);
    const auto c = v.kernel.coordinates(v.quotient.proj * x);
    if (!c)
        throw InvalidArgument("vector does not lie in G(J_" + std::to_string(a) + ")");
    return *c;
}

FunctorData CoFunctor::data() const {
    FunctorData d;
    d.dims = dims();
    d.act = [self = *this](unsigned a, unsigned b, const FpVector& w) { return self.act(a, b, w); };
    return d;
}

FunctorData CoFunctor::stable_data() const {
    FunctorData d = data();
    d.dims.pop_back();
    return d;
}

GammaModule CoFunctor::to_gamma(std::shared_ptr<const GammaAlgebra> alg) const {
    require_same_ctx(alg->ctx(), ctx(), "to_gamma");
    if (value_dim(ctx().n) != 0)
        throw CompatibilityViolation("functor does not vanish on Λ (value dimension " +
                                     std::to_string(value_dim(ctx().n)) + ")");
    return GammaModule::from_functor(std::move(alg), Variance::Co, stable_data());
}

// ------------------------------------------------------------------ natural transformations

std::vector<GammaHom> nat_basis(const RingCtx& ctx, Variance var, const FunctorData& f, const FunctorData& g) {
    if (f.dims.size() != g.dims.size())
        throw DimensionMismatch("functor tables cover different indecomposables");
    const unsigned k = unsigned(f.dims.size());
    std::vector<Constraint> cs;
    for (unsigned a = 1; a <= k; ++a)
        for (unsigned b = 1; b <= k; ++b) {
            const Subspace t = torsion(jordan_block(ctx, b), a);
            for (std::size_t i = 0; i < t.dim(); ++i) {
                const FpVector w = t.basis().col(i);
                const std::size_t src = (var == Variance::Contra ? b : a) - 1;
                const std::size_t dst = (var == Variance::Contra ? a : b) - 1;
                cs.push_back({src, dst, f.act(a, b, w), g.act(a, b, w)});
            }
        }
    return solve_intertwiners(f.dims, g.dims, cs, ctx.p);
}

IsoResult functor_iso(const RingCtx& ctx, Variance var, const FunctorData& f, const FunctorData& g,
                      std::uint64_t seed) {
    IsoResult r;
    if (f.dims != g.dims) {
        r.outcome = IsoOutcome::NotIso;
        r.reason = "value dimensions differ";
        return r;
    }
    const auto basis = nat_basis(ctx, var, f, g);
    const std::size_t h11 = nat_basis(ctx, var, f, f).size();
    const std::size_t h21 = nat_basis(ctx, var, g, f).size();
    const std::size_t h22 = nat_basis(ctx, var, g, g).size();
    if (basis.size() != h11 || h21 != h11 || h22 != h11) {
        r.outcome = IsoOutcome::NotIso;
        r.reason = "Nat dimensions differ";
        return r;
    }
    return search_invertible(basis, f.dims, ctx.p, seed);
}

LambdaMorphism cover_subfunctor(const LambdaModule& l, const std::vector<Subspace>& k, bool minimal) {
    const RingCtx& ctx = l.ctx();
    if (k.size() != ctx.n)
        throw DimensionMismatch("one subspace per indecomposable J_1..J_n required");
    std::vector<std::pair<unsigned, FpVector>> gens;
    for (unsigned a = ctx.n; a >= 1; --a) {
        const Subspace& ka = k[a - 1];
        if (ka.ambient_dim() != l.dim())
            throw DimensionMismatch("subfunctor value lives in the wrong ambient space");
        if (!torsion(l, a).contains(ka))
            throw InvalidArgument("K(J_" + std::to_string(a) + ") is not killed by x^" + std::to_string(a));
        FpMatrix g = ka.basis();
        if (minimal) {
            const Subspace rad = radical_image(l, a, k);
            if (!ka.contains(rad))
                throw InvalidArgument("K is not closed under precomposition at J_" + std::to_string(a));
            g = complement_in(rad, ka);
        }
        for (std::size_t c = 0; c < g.cols(); ++c)
            gens.emplace_back(a, g.col(c));
    }
    LambdaMorphism f = from_generators(l, gens);
    for (unsigned c = 1; c <= ctx.n; ++c)
        if (!(Subspace::span(f.matrix() * torsion(f.src(), c).basis()) == k[c - 1]))
            throw InvalidArgument("K is not a subfunctor of (−, L): generated image differs at J_" +
                                  std::to_string(c));
    return f;
}

ContraFunctor minimize(const ContraFunctor& f) {
    const LambdaMorphism& u = f.pres();
    const LambdaModule& b = u.dst();
    const RingCtx& ctx = f.ctx();
    std::vector<Subspace> tors, imgs;
    for (unsigned a = 1; a <= ctx.n; ++a) {
        tors.push_back(torsion(b, a));
        imgs.push_back(Subspace::span(u.matrix() * torsion(u.src(), a).basis()));
    }
    std::vector<std::pair<unsigned, FpVector>> gens;
    for (unsigned a = ctx.n; a >= 1; --a) {
        const Subspace rad = imgs[a - 1] + radical_image(b, a, tors);
        const FpMatrix g = complement_in(rad, tors[a - 1]);
        for (std::size_t c = 0; c < g.cols(); ++c)
            gens.emplace_back(a, g.col(c));
    }
    const LambdaMorphism cover = from_generators(b, gens);
    const LambdaModule& top = cover.src();
    std::vector<Subspace> kernel_values;
    for (unsigned c = 1; c <= ctx.n; ++c) {
        const FpMatrix tb = torsion(top, c).basis();
        const Cokernel mod_u = cokernel(imgs[c - 1].basis());
        const Subspace coeffs = kernel_basis(mod_u.proj * cover.matrix() * tb);
        kernel_values.push_back(Subspace::span(tb * coeffs.basis()));
    }
    ContraFunctor out(cover_subfunctor(top, kernel_values, true));
    if (out.dims() != f.dims())
        throw InternalError("minimized presentation changed the functor");
    return out;
}

// ------------------------------------------------------------------ recollement functors

FlatResolution special_flat_resolution(const ContraFunctor& f, bool minimize_first) {
    const ContraFunctor g = minimize_first ? minimize(f) : f;
    const LambdaMorphism& u = g.pres();
    const Submodule k = kernel(u);
    FlatResolution r{k.inclusion, u, minimize_first};
    if (!r.g.is_injective())
        throw InternalError("E₁ -> E₀ is not a monomorphism");
    for (unsigned a = 1; a <= f.ctx().n; ++a) {
        const LambdaModule ja = jordan_block(f.ctx(), a);
        const long e1 = long(hom_dim(ja, r.g.src()));
        const long e0 = long(hom_dim(ja, r.f.src()));
        const long l = long(hom_dim(ja, r.f.dst()));
        const long fa = long(f.value_dim(a));
        if (e1 - e0 + l - fa != 0)
            throw InternalError("flat resolution is not exact at J_" + std::to_string(a));
    }
    return r;
}

LambdaModule nu(const ContraFunctor& f) { return canonical(cokernel(f.pres()).module); }

ContraFunctor L0(const LambdaModule& m) { return ContraFunctor(minimal_presentation(m).relations); }

ContraFunctor i_lambda_functor(const ContraFunctor& f) {
    const LambdaMorphism& u = f.pres();
    const Quotient q = cokernel(u);
    const ProjectivePresentation pres = minimal_presentation(q.module);
    const LambdaMorphism s = lift_from_projective(q.projection, pres.cover);
    return ContraFunctor(row_join(u, s));
}

GammaModule i_lambda(const ContraFunctor& f, std::shared_ptr<const GammaAlgebra> alg) {
    return i_lambda_functor(f).to_gamma(std::move(alg));
}

ContraFunctor i_rho(const ContraFunctor& f) {
    const LambdaMorphism& u = f.pres();
    const Submodule im = image(u);
    const FpMatrix corestricted = Subspace::span(im.inclusion.matrix()).coordinates_of(u.matrix());
    return ContraFunctor(LambdaMorphism(u.src(), im.module, corestricted));
}

CoFunctor t(const LambdaModule& m) { return CoFunctor(LambdaMorphism::zero(m, LambdaModule::zero(m.ctx()))); }

LambdaModule theta_eval(const CoFunctor& g) { return canonical(kernel(g.copres()).module); }

CoFunctor R0(const LambdaModule& m) { return CoFunctor(minimal_copresentation(m).map); }

CoFunctor j_rho_functor(const CoFunctor& g) {
    const LambdaMorphism& v = g.copres();
    const Submodule k = kernel(v);
    const InjectiveEnvelope env = injective_envelope(k.module);
    const LambdaMorphism r = extend_to_injective(k.inclusion, env.embedding);
    return CoFunctor(col_join(v, r));
}

GammaModule j_rho(const CoFunctor& g, std::shared_ptr<const GammaAlgebra> alg) {
    return j_rho_functor(g).to_gamma(std::move(alg));
}

JLambda j_lambda(const CoFunctor& g) {
    const LambdaMorphism& v = g.copres();
    const Submodule im = image(v);
    const Submodule k = kernel(v);
    JLambda out{CoFunctor(im.inclusion), CoFunctor(k.inclusion)};
    for (unsigned a = 1; a <= g.ctx().n; ++a) {
        const std::size_t tk = k.module.dim() - rank(power(k.module.action(), a));
        if (g.value_dim(a) + out.f1.value_dim(a) != tk + out.f0.value_dim(a))
            throw InternalError("0 -> t(Ker v)/F¹ -> G -> F⁰ -> 0 is not exact at J_" + std::to_string(a));
    }
    return out;
}

} // namespace monocat
