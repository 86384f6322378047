#include "monocat/morph.hpp"

namespace monocat {

namespace {

FpVector stack_vec(const MorphMap& h) {
    FpVector v = h.sigma1().matrix().vec();
    const FpVector w = h.sigma2().matrix().vec();
    v.insert(v.end(), w.begin(), w.end());
    return v;
}

FpMatrix stacked(const std::vector<MorphMap>& maps, std::size_t len, std::uint32_t p) {
    FpMatrix m(len, maps.size(), p);
    for (std::size_t k = 0; k < maps.size(); ++k) {
        const FpVector v = stack_vec(maps[k]);
        for (std::size_t i = 0; i < len; ++i)
            m.at(i, k) = v[i];
    }
    return m;
}

std::size_t stacked_len(const MorphObject& a, const MorphObject& b) {
    return b.src().dim() * a.src().dim() + b.dst().dim() * a.dst().dim();
}

FpMatrix rows_of(const FpMatrix& m, std::size_t r0, std::size_t nr) { return m.block(r0, 0, nr, m.cols()); }

} // namespace

const char* kind_name(Kind k) {
    switch (k) {
    case Kind::H:
        return "H";
    case Kind::S:
        return "S";
    case Kind::F:
        return "F";
    }
    return "?";
}

Kind parse_kind(const std::string& s) {
    if (s == "H")
        return Kind::H;
    if (s == "S")
        return Kind::S;
    if (s == "F")
        return Kind::F;
    throw InvalidArgument("unknown object kind '" + s + "' (expected H, S or F)");
}

MorphObject::MorphObject(LambdaMorphism f, Kind kind) : f_(std::move(f)), kind_(kind) {
    if (kind_ == Kind::S && !f_.is_injective())
        throw MonoViolation("map of rank " + std::to_string(rank(f_.matrix())) + " from a module of dimension " +
                            std::to_string(f_.src().dim()) + " is not a monomorphism");
    if (kind_ == Kind::F && !f_.is_surjective())
        throw EpiViolation("map of rank " + std::to_string(rank(f_.matrix())) + " onto a module of dimension " +
                           std::to_string(f_.dst().dim()) + " is not an epimorphism");
}

MorphMap::MorphMap(MorphObject src, MorphObject dst, LambdaMorphism sigma1, LambdaMorphism sigma2)
    : src_(std::move(src)), dst_(std::move(dst)), s1_(std::move(sigma1)), s2_(std::move(sigma2)) {
    require_same_ctx(src_.ctx(), dst_.ctx(), "MorphMap");
    if (s1_.src().dim() != src_.src().dim() || s1_.dst().dim() != dst_.src().dim() ||
        s2_.src().dim() != src_.dst().dim() || s2_.dst().dim() != dst_.dst().dim())
        throw DimensionMismatch("MorphMap components do not match the objects");
    if (!(s2_.matrix() * src_.map().matrix() == dst_.map().matrix() * s1_.matrix()))
        throw NotLinear("square does not commute");
}

MorphMap MorphMap::identity(const MorphObject& o) {
    return MorphMap(o, o, LambdaMorphism::identity(o.src()), LambdaMorphism::identity(o.dst()));
}

MorphMap MorphMap::zero(const MorphObject& a, const MorphObject& b) {
    return MorphMap(a, b, LambdaMorphism::zero(a.src(), b.src()), LambdaMorphism::zero(a.dst(), b.dst()));
}

MorphMap compose(const MorphMap& g, const MorphMap& f) {
    return MorphMap(f.src(), g.dst(), compose(g.sigma1(), f.sigma1()), compose(g.sigma2(), f.sigma2()));
}

MorphMap add(const MorphMap& f, const MorphMap& g) {
    return MorphMap(f.src(), f.dst(), add(f.sigma1(), g.sigma1()), add(f.sigma2(), g.sigma2()));
}

MorphMap scale(const MorphMap& f, std::uint32_t c) {
    return MorphMap(f.src(), f.dst(), scale(f.sigma1(), c), scale(f.sigma2(), c));
}

bool is_zero(const MorphMap& f) { return f.sigma1().is_zero() && f.sigma2().is_zero(); }

MorphObject direct_sum(const MorphObject& a, const MorphObject& b) {
    const Kind k = a.kind() == b.kind() ? a.kind() : Kind::H;
    return MorphObject(direct_sum(a.map(), b.map()), k);
}

MorphObject cok(const MorphObject& o) {
    if (o.kind() != Kind::S)
        throw KindMismatch("cok expects an object of S");
    return MorphObject(cokernel(o.map()).projection, Kind::F);
}

MorphObject ker(const MorphObject& o) {
    if (o.kind() != Kind::F)
        throw KindMismatch("ker expects an object of F");
    return MorphObject(kernel(o.map()).inclusion, Kind::S);
}

MorphMap cok(const MorphMap& h) {
    const MorphObject a = cok(h.src()), b = cok(h.dst());
    const Quotient qa = cokernel(h.src().map());
    const Quotient qb = cokernel(h.dst().map());
    const FpMatrix induced = qb.projection.matrix() * h.sigma2().matrix() * qa.section;
    return MorphMap(a, b, h.sigma2(), LambdaMorphism(a.dst(), b.dst(), induced));
}

MorphMap ker(const MorphMap& h) {
    const MorphObject a = ker(h.src()), b = ker(h.dst());
    const Subspace kb = Subspace::span(b.map().matrix());
    const FpMatrix induced = kb.coordinates_of(h.sigma1().matrix() * a.map().matrix());
    return MorphMap(a, b, LambdaMorphism(a.src(), b.src(), induced), h.sigma1());
}

MorphMap ker_cok_comparison(const MorphObject& s) {
    const MorphObject back = ker(cok(s));
    const FpMatrix s1 = Subspace::span(back.map().matrix()).coordinates_of(s.map().matrix());
    return MorphMap(s, back, LambdaMorphism(s.src(), back.src(), s1), LambdaMorphism::identity(s.dst()));
}

MorphMap cok_ker_comparison(const MorphObject& g) {
    const MorphObject back = cok(ker(g));
    const Quotient q = cokernel(ker(g).map());
    const FpMatrix s2 = g.map().matrix() * q.section;
    return MorphMap(back, g, LambdaMorphism::identity(g.src()), LambdaMorphism(back.dst(), g.dst(), s2));
}

bool is_iso(const MorphMap& h) {
    return inverse(h.sigma1().matrix()).has_value() && inverse(h.sigma2().matrix()).has_value();
}

std::vector<MorphMap> hom_h(const MorphObject& o1, const MorphObject& o2) {
    require_same_ctx(o1.ctx(), o2.ctx(), "hom_h");
    const std::uint32_t p = o1.ctx().p;
    const auto hx = hom_basis(o1.src(), o2.src());
    const auto hy = hom_basis(o1.dst(), o2.dst());
    const std::size_t rows = o2.dst().dim() * o1.src().dim();
    FpMatrix sys(rows, hx.size() + hy.size(), p);
    for (std::size_t i = 0; i < hx.size(); ++i) {
        const FpVector v = (o2.map().matrix() * hx[i].matrix()).negated().vec();
        for (std::size_t r = 0; r < rows; ++r)
            sys.at(r, i) = v[r];
    }
    for (std::size_t j = 0; j < hy.size(); ++j) {
        const FpVector v = (hy[j].matrix() * o1.map().matrix()).vec();
        for (std::size_t r = 0; r < rows; ++r)
            sys.at(r, hx.size() + j) = v[r];
    }
    const Subspace k = kernel_basis(sys);
    std::vector<MorphMap> out;
    out.reserve(k.dim());
    for (std::size_t c = 0; c < k.dim(); ++c) {
        FpMatrix s1(o2.src().dim(), o1.src().dim(), p);
        FpMatrix s2(o2.dst().dim(), o1.dst().dim(), p);
        for (std::size_t i = 0; i < hx.size(); ++i)
            if (auto a = k.basis()(i, c))
                s1 = s1 + hx[i].matrix().scaled(a);
        for (std::size_t j = 0; j < hy.size(); ++j)
            if (auto b = k.basis()(hx.size() + j, c))
                s2 = s2 + hy[j].matrix().scaled(b);
        out.emplace_back(o1, o2, LambdaMorphism(o1.src(), o2.src(), std::move(s1)),
                         LambdaMorphism(o1.dst(), o2.dst(), std::move(s2)));
    }
    return out;
}

FpVector hom_h_coordinates(const std::vector<MorphMap>& basis, const MorphMap& h) {
    const std::size_t len = stacked_len(h.src(), h.dst());
    auto c = solve(stacked(basis, len, h.src().ctx().p), stack_vec(h));
    if (!c)
        throw InternalError("map outside the span of the Hom_H basis");
    return *c;
}

const char* ideal_name(Ideal i) {
    switch (i) {
    case Ideal::V:
        return "V";
    case Ideal::U:
        return "U";
    case Ideal::X:
        return "X";
    case Ideal::Y:
        return "Y";
    }
    return "?";
}

Ideal parse_ideal(const std::string& s) {
    if (s == "V")
        return Ideal::V;
    if (s == "U")
        return Ideal::U;
    if (s == "X")
        return Ideal::X;
    if (s == "Y")
        return Ideal::Y;
    throw InvalidArgument("unknown ideal '" + s + "' (expected V, U, X or Y)");
}

Approximation right_approximation(Ideal ideal, const MorphObject& target) {
    const bool wants_s = ideal == Ideal::V || ideal == Ideal::X;
    if (wants_s && target.kind() != Kind::S)
        throw KindMismatch(std::string("ideal ") + ideal_name(ideal) + " approximates objects of S");
    if (!wants_s && target.kind() != Kind::F)
        throw KindMismatch(std::string("ideal ") + ideal_name(ideal) + " approximates objects of F");

    const LambdaModule& a = target.src();
    const LambdaModule& b = target.dst();
    const LambdaMorphism& f = target.map();
    const RingCtx& ctx = target.ctx();
    const LambdaModule zero = LambdaModule::zero(ctx);

    switch (ideal) {
    case Ideal::V: {
        const MorphObject app_obj = direct_sum(MorphObject(LambdaMorphism::identity(a), Kind::S),
                                               MorphObject(LambdaMorphism::zero(zero, b), Kind::S));
        const LambdaMorphism s1(app_obj.src(), a, FpMatrix::identity(a.dim(), ctx.p));
        const LambdaMorphism s2 = row_join(f, LambdaMorphism::identity(b));
        return {app_obj, MorphMap(app_obj, target, s1, s2)};
    }
    case Ideal::U: {
        const Submodule k = kernel(f);
        const MorphObject app_obj = direct_sum(MorphObject(LambdaMorphism::identity(a), Kind::F),
                                               MorphObject(LambdaMorphism::zero(k.module, zero), Kind::F));
        const LambdaMorphism s1 = row_join(LambdaMorphism::identity(a), k.inclusion);
        const LambdaMorphism s2(app_obj.dst(), b, f.matrix());
        return {app_obj, MorphMap(app_obj, target, s1, s2)};
    }
    case Ideal::X: {
        const ProjectiveCover pc = projective_cover(b);
        const Submodule pb = kernel(row_join(f, scale(pc.cover, ctx.p - 1)));
        const FpMatrix& inc = pb.inclusion.matrix();
        const LambdaMorphism pr_a(pb.module, a, rows_of(inc, 0, a.dim()));
        const LambdaMorphism pr_p(pb.module, pc.projective, rows_of(inc, a.dim(), pc.projective.dim()));
        const MorphObject app_obj =
            direct_sum(MorphObject(LambdaMorphism::identity(a), Kind::S), MorphObject(pr_p, Kind::S));
        const LambdaMorphism s1 = row_join(LambdaMorphism::identity(a), pr_a);
        const LambdaMorphism s2 = row_join(f, pc.cover);
        return {app_obj, MorphMap(app_obj, target, s1, s2)};
    }
    case Ideal::Y: {
        const ProjectiveCover pc = projective_cover(a);
        const MorphObject app_obj = direct_sum(MorphObject(LambdaMorphism::identity(a), Kind::F),
                                               MorphObject(compose(f, pc.cover), Kind::F));
        const LambdaMorphism s1 = row_join(LambdaMorphism::identity(a), pc.cover);
        const LambdaMorphism s2 = row_join(f, LambdaMorphism::identity(b));
        return {app_obj, MorphMap(app_obj, target, s1, s2)};
    }
    }
    throw InvalidArgument("unknown ideal");
}

namespace {

struct FactorSystem {
    std::vector<MorphMap> through; // basis of Hom_H(o1, App)
    FpMatrix images;               // stacked vectors of app ∘ k
};

FactorSystem factor_system(const Approximation& ap, const MorphObject& o1) {
    FactorSystem fs;
    fs.through = hom_h(o1, ap.object);
    std::vector<MorphMap> composed;
    composed.reserve(fs.through.size());
    for (const auto& k : fs.through)
        composed.push_back(compose(ap.map, k));
    fs.images = stacked(composed, stacked_len(o1, ap.map.dst()), o1.ctx().p);
    return fs;
}

} // namespace

std::optional<MorphMap> factors_through(Ideal ideal, const MorphMap& h) {
    const Approximation ap = right_approximation(ideal, h.dst());
    const FactorSystem fs = factor_system(ap, h.src());
    const auto c = solve(fs.images, stack_vec(h));
    if (!c)
        return std::nullopt;
    MorphMap k = MorphMap::zero(h.src(), ap.object);
    for (std::size_t i = 0; i < fs.through.size(); ++i)
        if ((*c)[i] != 0)
            k = add(k, scale(fs.through[i], (*c)[i]));
    return k;
}

Subspace factoring_subspace(Ideal ideal, const MorphObject& o1, const MorphObject& o2,
                            const std::vector<MorphMap>& basis) {
    const Approximation ap = right_approximation(ideal, o2);
    const FactorSystem fs = factor_system(ap, o1);
    const std::size_t len = stacked_len(o1, o2);
    const FpMatrix b = stacked(basis, len, o1.ctx().p);
    auto coords = solve_matrix(b, fs.images);
    if (!coords)
        throw InternalError("factoring maps lie outside Hom_H");
    return Subspace::span(*coords);
}

bool in_ideal(Ideal ideal, const MorphObject& o) { return factors_through(ideal, MorphMap::identity(o)).has_value(); }

} // namespace monocat
