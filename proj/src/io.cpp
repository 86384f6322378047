#include "monocat/io.hpp"

#include <string>

namespace monocat::io {

namespace {

const json& field(const json& j, const char* key, const char* what) {
    if (!j.is_object())
        throw InvalidArgument(std::string(what) + ": expected an object");
    const auto it = j.find(key);
    if (it == j.end())
        throw InvalidArgument(std::string(what) + ": missing \"" + key + "\"");
    return *it;
}

std::int64_t integer(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw InvalidArgument(std::string(what) + ": expected an integer");
    return j.get<std::int64_t>();
}

std::uint64_t positive(const json& j, const char* what) {
    const std::int64_t v = integer(j, what);
    if (v < 0)
        throw InvalidArgument(std::string(what) + ": expected a nonnegative integer");
    return std::uint64_t(v);
}

} // namespace

json matrix_to_json(const FpMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json r = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.push_back(m(i, j));
        rows.push_back(std::move(r));
    }
    return rows;
}

FpMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, std::uint32_t p, const char* what) {
    if (!j.is_array())
        throw InvalidArgument(std::string(what) + ": expected an array of rows");
    if (j.size() != rows)
        throw InvalidArgument(std::string(what) + ": expected " + std::to_string(rows) + " rows, got " +
                              std::to_string(j.size()));
    const Field field(p);
    FpMatrix m(rows, cols, p);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& r = j[i];
        if (!r.is_array() || r.size() != cols)
            throw InvalidArgument(std::string(what) + ": row " + std::to_string(i) + " must have " +
                                  std::to_string(cols) + " entries");
        for (std::size_t k = 0; k < cols; ++k)
            m.at(i, k) = field.reduce(integer(r[k], what));
    }
    return m;
}

RingCtx ctx_from_json(const json& j) {
    const std::uint64_t p = positive(field(j, "p", "module"), "p");
    const std::uint64_t n = positive(field(j, "n", "module"), "n");
    if (p < 2 || p >= (1ull << 31) || !Field::is_prime(p))
        throw InvalidArgument("p must be a prime below 2^31");
    if (n < 1 || n > 64)
        throw InvalidArgument("n must lie in 1..64");
    return RingCtx(std::uint32_t(p), unsigned(n));
}

json module_to_json(const LambdaModule& m) {
    return {{"p", m.ctx().p}, {"n", m.ctx().n}, {"dim", m.dim()}, {"x", matrix_to_json(m.action())}};
}

LambdaModule module_from_json(const json& j) {
    const RingCtx ctx = ctx_from_json(j);
    if (j.contains("blocks")) {
        const json& b = j["blocks"];
        if (!b.is_array())
            throw InvalidArgument("module: \"blocks\" must be an array");
        std::vector<unsigned> blocks;
        for (const json& e : b) {
            const std::uint64_t a = positive(e, "block size");
            if (a < 1 || a > ctx.n)
                throw InvalidArgument("module: block sizes must lie in 1..n");
            blocks.push_back(unsigned(a));
        }
        return from_blocks(ctx, blocks);
    }
    const std::size_t d = positive(field(j, "dim", "module"), "dim");
    return LambdaModule(ctx, matrix_from_json(field(j, "x", "module"), d, d, ctx.p, "module x"));
}

json morphism_to_json(const LambdaMorphism& f) {
    return {{"src", module_to_json(f.src())}, {"dst", module_to_json(f.dst())}, {"f", matrix_to_json(f.matrix())}};
}

LambdaMorphism morphism_from_json(const json& j) {
    const LambdaModule src = module_from_json(field(j, "src", "morphism"));
    const LambdaModule dst = module_from_json(field(j, "dst", "morphism"));
    require_same_ctx(src.ctx(), dst.ctx(), "morphism");
    return LambdaMorphism(src, dst, matrix_from_json(field(j, "f", "morphism"), dst.dim(), src.dim(), src.p(), "f"));
}

json object_to_json(const MorphObject& o) {
    return {{"module_src", module_to_json(o.src())},
            {"module_dst", module_to_json(o.dst())},
            {"f", matrix_to_json(o.map().matrix())},
            {"kind", kind_name(o.kind())}};
}

MorphObject object_from_json(const json& j) {
    const LambdaModule src = module_from_json(field(j, "module_src", "object"));
    const LambdaModule dst = module_from_json(field(j, "module_dst", "object"));
    require_same_ctx(src.ctx(), dst.ctx(), "object");
    const json& k = field(j, "kind", "object");
    if (!k.is_string())
        throw InvalidArgument("object: \"kind\" must be a string");
    const Kind kind = parse_kind(k.get<std::string>());
    const FpMatrix f = matrix_from_json(field(j, "f", "object"), dst.dim(), src.dim(), src.p(), "f");
    return MorphObject(LambdaMorphism(src, dst, f), kind);
}

json square_to_json(const MorphMap& h) {
    return {{"src", object_to_json(h.src())},
            {"dst", object_to_json(h.dst())},
            {"sigma1", matrix_to_json(h.sigma1().matrix())},
            {"sigma2", matrix_to_json(h.sigma2().matrix())}};
}

MorphMap square_from_json(const json& j) {
    const MorphObject a = object_from_json(field(j, "src", "square"));
    const MorphObject b = object_from_json(field(j, "dst", "square"));
    require_same_ctx(a.ctx(), b.ctx(), "square");
    const std::uint32_t p = a.ctx().p;
    const LambdaMorphism s1(a.src(), b.src(),
                            matrix_from_json(field(j, "sigma1", "square"), b.src().dim(), a.src().dim(), p, "sigma1"));
    const LambdaMorphism s2(a.dst(), b.dst(),
                            matrix_from_json(field(j, "sigma2", "square"), b.dst().dim(), a.dst().dim(), p, "sigma2"));
    return MorphMap(a, b, s1, s2);
}

json functor_to_json(const Functor& f) {
    if (const auto* c = std::get_if<ContraFunctor>(&f))
        return {{"kind", "contra"}, {"pres", morphism_to_json(c->pres())}};
    return {{"kind", "co"}, {"copres", morphism_to_json(std::get<CoFunctor>(f).copres())}};
}

Functor functor_from_json(const json& j) {
    const json& k = field(j, "kind", "functor");
    if (k == "contra")
        return ContraFunctor(morphism_from_json(field(j, "pres", "functor")));
    if (k == "co")
        return CoFunctor(morphism_from_json(field(j, "copres", "functor")));
    throw InvalidArgument("functor: \"kind\" must be \"contra\" or \"co\"");
}

json gamma_to_json(const GammaModule& g) {
    json actions = json::array();
    for (const FpMatrix& a : g.actions())
        actions.push_back(matrix_to_json(a));
    return {{"variance", variance_name(g.variance())},
            {"p", g.algebra().ctx().p},
            {"n", g.algebra().ctx().n},
            {"dims", g.dims()},
            {"actions", std::move(actions)}};
}

GammaModule gamma_from_json(const json& j) {
    const RingCtx ctx = ctx_from_json(j);
    const json& v = field(j, "variance", "gamma module");
    Variance var;
    if (v == "contra")
        var = Variance::Contra;
    else if (v == "co")
        var = Variance::Co;
    else
        throw InvalidArgument("gamma module: \"variance\" must be \"contra\" or \"co\"");
    const auto alg = gamma_algebra(ctx);
    const json& d = field(j, "dims", "gamma module");
    if (!d.is_array() || d.size() != alg->stable_count())
        throw InvalidArgument("gamma module: \"dims\" must have n-1 entries");
    std::vector<std::size_t> dims;
    for (const json& e : d)
        dims.push_back(positive(e, "dims"));
    const json& acts = field(j, "actions", "gamma module");
    if (!acts.is_array() || acts.size() != alg->dim())
        throw InvalidArgument("gamma module: \"actions\" must have one matrix per basis element of Γ (" +
                              std::to_string(alg->dim()) + ")");
    std::vector<FpMatrix> actions;
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        const GammaBasisElement& e = alg->element(i);
        // φ: J_a -> J_b acts V_b -> V_a (contra) or V_a -> V_b (co)
        const std::size_t from = var == Variance::Contra ? dims[e.b - 1] : dims[e.a - 1];
        const std::size_t to = var == Variance::Contra ? dims[e.a - 1] : dims[e.b - 1];
        actions.push_back(matrix_from_json(acts[i], to, from, ctx.p, "action"));
    }
    return GammaModule(alg, var, dims, actions);
}

json jordan_type_to_json(const JordanType& t) { return t.blocks; }

} // namespace monocat::io
