#include "monocat/bridges.hpp"

#include <functional>
#include <string>

namespace monocat {

namespace {

void require_kind(const MorphObject& o, Kind k, const char* op) {
    if (o.kind() != k)
        throw KindMismatch(std::string(op) + " expects a " + kind_name(k) + "-object, got " + kind_name(o.kind()));
}

std::shared_ptr<const GammaAlgebra> alg_of(const RingCtx& ctx) { return gamma_algebra(ctx); }

/// F1(J_a) -> F2(J_a) induced by a module map sigma between the targets of
/// the presentations.
GammaHom induced_contra(const ContraFunctor& f1, const ContraFunctor& f2, const FpMatrix& sigma) {
    const unsigned n = f1.ctx().n;
    const std::uint32_t p = f1.ctx().p;
    GammaHom h;
    for (unsigned a = 1; a < n; ++a) {
        FpMatrix m(f2.value_dim(a), f1.value_dim(a), p);
        for (std::size_t k = 0; k < f1.value_dim(a); ++k) {
            const FpVector c = f2.value_coords(a, sigma * f1.value_rep(a, k));
            for (std::size_t r = 0; r < c.size(); ++r)
                m.at(r, k) = c[r];
        }
        h.push_back(std::move(m));
    }
    return h;
}

/// G1(J_a) -> G2(J_a) induced by a module map sigma between the sources of
/// the copresentations.
GammaHom induced_co(const CoFunctor& g1, const CoFunctor& g2, const FpMatrix& sigma) {
    const unsigned n = g1.ctx().n;
    const std::uint32_t p = g1.ctx().p;
    GammaHom h;
    for (unsigned a = 1; a < n; ++a) {
        FpMatrix m(g2.value_dim(a), g1.value_dim(a), p);
        for (std::size_t k = 0; k < g1.value_dim(a); ++k) {
            const FpVector c = g2.value_coords(a, sigma * g1.value_rep(a, k));
            for (std::size_t r = 0; r < c.size(); ++r)
                m.at(r, k) = c[r];
        }
        h.push_back(std::move(m));
    }
    return h;
}

} // namespace

ContraFunctor sigma(const MorphObject& o) { return ContraFunctor(o.map()); }

CoFunctor sigma_prime(const MorphObject& o) { return CoFunctor(o.map()); }

ContraFunctor psi_functor(const MorphObject& s) {
    require_kind(s, Kind::S, "psi");
    return ContraFunctor(cok(s).map());
}

CoFunctor phi_functor(const MorphObject& f) {
    require_kind(f, Kind::F, "phi");
    return CoFunctor(ker(f).map());
}

ContraFunctor theta_functor(const MorphObject& s) {
    require_kind(s, Kind::S, "theta");
    const Quotient q = cokernel(s.map());
    const ProjectiveCover pc = projective_cover(q.module);
    const LambdaMorphism d1 = lift_from_projective(q.projection, pc.cover);
    return ContraFunctor(row_join(d1, s.map()));
}

CoFunctor im_functor_raw(const MorphObject& f) {
    require_kind(f, Kind::F, "im");
    const LambdaMorphism inc = ker(f).map();
    const InjectiveEnvelope env = injective_envelope(inc.src());
    const LambdaMorphism s = extend_to_injective(inc, env.embedding);
    return CoFunctor(col_join(f.map(), s));
}

GammaModule psi(const MorphObject& s) { return psi_functor(s).to_gamma(alg_of(s.ctx())); }
GammaModule phi(const MorphObject& f) { return phi_functor(f).to_gamma(alg_of(f.ctx())); }
GammaModule theta(const MorphObject& s) { return theta_functor(s).to_gamma(alg_of(s.ctx())); }
GammaModule im_functor(const MorphObject& f) { return im_functor_raw(f).to_gamma(alg_of(f.ctx())); }

GammaHom psi_map(const MorphMap& h) {
    return induced_contra(psi_functor(h.src()), psi_functor(h.dst()), cok(h).sigma2().matrix());
}

GammaHom phi_map(const MorphMap& h) {
    return induced_co(phi_functor(h.src()), phi_functor(h.dst()), ker(h).sigma1().matrix());
}

GammaHom theta_map(const MorphMap& h) {
    return induced_contra(theta_functor(h.src()), theta_functor(h.dst()), h.sigma2().matrix());
}

GammaHom im_map(const MorphMap& h) {
    return induced_co(im_functor_raw(h.src()), im_functor_raw(h.dst()), h.sigma1().matrix());
}

const char* bridge_name(Bridge b) {
    switch (b) {
    case Bridge::Psi: return "psi";
    case Bridge::Phi: return "phi";
    case Bridge::Theta: return "theta";
    case Bridge::Im: return "im";
    }
    return "?";
}

Bridge parse_bridge(const std::string& s) {
    if (s == "psi")
        return Bridge::Psi;
    if (s == "phi")
        return Bridge::Phi;
    if (s == "theta")
        return Bridge::Theta;
    if (s == "im")
        return Bridge::Im;
    throw InvalidArgument("unknown functor '" + s + "'");
}

Ideal kernel_ideal(Bridge b) {
    switch (b) {
    case Bridge::Psi: return Ideal::V;
    case Bridge::Phi: return Ideal::U;
    case Bridge::Theta: return Ideal::X;
    case Bridge::Im: return Ideal::Y;
    }
    return Ideal::V;
}

Kind bridge_kind(Bridge b) { return b == Bridge::Psi || b == Bridge::Theta ? Kind::S : Kind::F; }

GammaModule apply(Bridge b, const MorphObject& o) {
    switch (b) {
    case Bridge::Psi: return psi(o);
    case Bridge::Phi: return phi(o);
    case Bridge::Theta: return theta(o);
    case Bridge::Im: return im_functor(o);
    }
    throw InvalidArgument("unknown functor");
}

GammaHom apply(Bridge b, const MorphMap& h) {
    switch (b) {
    case Bridge::Psi: return psi_map(h);
    case Bridge::Phi: return phi_map(h);
    case Bridge::Theta: return theta_map(h);
    case Bridge::Im: return im_map(h);
    }
    throw InvalidArgument("unknown functor");
}

HomMap hom_map(Bridge b, const MorphObject& o1, const MorphObject& o2) {
    require_kind(o1, bridge_kind(b), bridge_name(b));
    require_kind(o2, bridge_kind(b), bridge_name(b));
    const auto alg = alg_of(o1.ctx());
    HomMap out;
    out.source = hom_h(o1, o2);
    std::function<GammaHom(const MorphMap&)> induced;
    GammaModule g1, g2;
    if (b == Bridge::Psi || b == Bridge::Theta) {
        const ContraFunctor f1 = b == Bridge::Psi ? psi_functor(o1) : theta_functor(o1);
        const ContraFunctor f2 = b == Bridge::Psi ? psi_functor(o2) : theta_functor(o2);
        g1 = f1.to_gamma(alg);
        g2 = f2.to_gamma(alg);
        induced = [=](const MorphMap& h) {
            return induced_contra(f1, f2, (b == Bridge::Psi ? cok(h).sigma2() : h.sigma2()).matrix());
        };
    } else {
        const CoFunctor f1 = b == Bridge::Phi ? phi_functor(o1) : im_functor_raw(o1);
        const CoFunctor f2 = b == Bridge::Phi ? phi_functor(o2) : im_functor_raw(o2);
        g1 = f1.to_gamma(alg);
        g2 = f2.to_gamma(alg);
        induced = [=](const MorphMap& h) {
            return induced_co(f1, f2, (b == Bridge::Phi ? ker(h).sigma1() : h.sigma1()).matrix());
        };
    }
    out.target = intertwiners(g1, g2);
    out.matrix = FpMatrix(out.target.size(), out.source.size(), o1.ctx().p);
    for (std::size_t j = 0; j < out.source.size(); ++j) {
        const auto c = gamma_hom_coordinates(out.target, induced(out.source[j]));
        if (!c)
            throw InternalError(std::string(bridge_name(b)) + " of a square is not a Γ-homomorphism");
        for (std::size_t r = 0; r < c->size(); ++r)
            out.matrix.at(r, j) = (*c)[r];
    }
    return out;
}

namespace {

/// Columns spanning a complement of the radical of G at each J_a; with
/// `minimal` false, the full value space.
std::vector<FpMatrix> value_generators(const GammaModule& g, bool minimal) {
    const GammaAlgebra& alg = g.algebra();
    const std::uint32_t p = alg.ctx().p;
    std::vector<FpMatrix> out;
    for (unsigned a = 1; a < alg.ctx().n; ++a) {
        const Subspace full = Subspace::full(g.value_dim(a), p);
        if (!minimal) {
            out.push_back(full.basis());
            continue;
        }
        Subspace rad = Subspace::zero(g.value_dim(a), p);
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            const GammaBasisElement& e = alg.element(i);
            if (e.a != a || (e.b == a && e.w[0] != 0))
                continue;
            rad = rad + Subspace::span(g.action(i));
        }
        out.push_back(complement_in(rad, full));
    }
    return out;
}

} // namespace

MorphObject psi_inverse(const GammaModule& g, bool minimal) {
    if (g.variance() != Variance::Contra)
        throw InvalidArgument("psi_inverse expects a contravariant Γ-module");
    const RingCtx& ctx = g.algebra().ctx();
    const unsigned n = ctx.n;
    const auto gens = value_generators(g, minimal);
    std::vector<unsigned> blocks;
    std::vector<std::pair<unsigned, FpVector>> summand; // (a, generator in G(J_a)) per block
    for (unsigned a = 1; a < n; ++a)
        for (std::size_t k = 0; k < gens[a - 1].cols(); ++k) {
            blocks.push_back(a);
            summand.emplace_back(a, gens[a - 1].col(k));
        }
    const LambdaModule l = from_blocks(ctx, blocks);
    std::vector<Subspace> kern;
    for (unsigned c = 1; c <= n; ++c) {
        const Subspace tor = torsion(l, c);
        if (c == n) {
            kern.push_back(tor);
            continue;
        }
        // the tautological map Hom(J_c, L) -> G(J_c)
        FpMatrix eval = FpMatrix::zero(g.value_dim(c), tor.dim(), ctx.p);
        for (std::size_t j = 0; j < tor.dim(); ++j) {
            const FpVector v = tor.basis().col(j);
            FpVector col(g.value_dim(c), 0);
            std::size_t off = 0;
            for (const auto& [a, gen] : summand) {
                const FpVector w(v.begin() + std::ptrdiff_t(off), v.begin() + std::ptrdiff_t(off + a));
                off += a;
                const FpVector img = g.act(c, a, w) * gen;
                for (std::size_t r = 0; r < col.size(); ++r)
                    col[r] = (col[r] + img[r]) % ctx.p;
            }
            for (std::size_t r = 0; r < col.size(); ++r)
                eval.at(r, j) = col[r];
        }
        if (rank(eval) != g.value_dim(c))
            throw InternalError("psi_inverse: generators do not generate at J_" + std::to_string(c));
        kern.push_back(Subspace::span(tor.basis() * kernel_basis(eval).basis()));
    }
    const LambdaMorphism f = cover_subfunctor(l, kern, minimal);
    if (!f.is_surjective())
        throw InternalError("psi_inverse: evaluation at Λ is not onto");
    return MorphObject(kernel(f).inclusion, Kind::S);
}

GammaModule xi(const GammaModule& g, bool validate) {
    const GammaModule out = phi(cok(psi_inverse(g, false)));
    if (validate) {
        const GammaModule other = phi(cok(psi_inverse(g, true)));
        const IsoResult r = iso_test(out, other);
        if (r.outcome == IsoOutcome::NotIso)
            throw InternalError("xi depends on the choice of preimage: " + r.reason);
    }
    return out;
}

FunctorComparison rho_check(const LambdaModule& m) {
    const auto alg = alg_of(m.ctx());
    FunctorComparison out;
    out.lhs = xi(stable_representable_contra(alg, m));
    out.rhs = stable_representable_co(alg, transpose(m));
    out.iso = iso_test(out.lhs, out.rhs);
    out.holds = out.iso.outcome == IsoOutcome::Iso;
    out.reason = out.iso.reason;
    return out;
}

FunctorComparison tor_compare(const LambdaModule& z) {
    const auto alg = alg_of(z.ctx());
    FunctorComparison out;
    out.lhs = xi(stable_representable_contra(alg, z));
    out.rhs = CoFunctor(syzygy_inclusion(z).inclusion).to_gamma(alg);
    for (unsigned b = 1; b < z.ctx().n; ++b) {
        const std::size_t t = tor1(jordan_block(z.ctx(), b), z).dim;
        if (out.lhs.value_dim(b) != t) {
            out.reason = "dim at J_" + std::to_string(b) + " is " + std::to_string(out.lhs.value_dim(b)) +
                         ", Tor₁ has " + std::to_string(t);
            return out;
        }
    }
    out.iso = iso_test(out.lhs, out.rhs);
    out.holds = out.iso.outcome == IsoOutcome::Iso;
    out.reason = out.iso.reason;
    return out;
}

GammaModule auto_equiv(const GammaModule& g) {
    const GammaModule h = xi(g);
    const RingCtx& ctx = g.algebra().ctx();
    FunctorData d;
    d.dims = h.dims();
    d.act = [h, ctx](unsigned a, unsigned b, const FpVector& w) {
        // φ: J_a -> J_b becomes R_a φᵀ R_b⁻¹: J_b -> J_a
        const FpMatrix phi = from_generator(jordan_block(ctx, b), a, w).matrix();
        const FpMatrix rb_inv = *inverse(reversal(b, ctx.p));
        const FpMatrix psi = reversal(a, ctx.p) * phi.transpose() * rb_inv;
        return h.act(b, a, psi.col(0));
    };
    return GammaModule::from_functor(g.algebra_ptr(), Variance::Contra, d);
}

} // namespace monocat
