#include "monocat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <thread>

#include "monocat/bridges.hpp"
#include "monocat/enumerate.hpp"
#include "monocat/io.hpp"
#include "monocat/random.hpp"

namespace monocat {

namespace {

using nlohmann::json;

constexpr std::size_t kMaxCounterexamples = 5;

struct Outcome {
    bool ok = false;
    json instance;
    json evidence;
};

class Ledger {
public:
    void add(const std::string& property, Outcome o) {
        auto [it, fresh] = index_.try_emplace(property, entries_.size());
        if (fresh)
            entries_.push_back({property});
        Entry& e = entries_[it->second];
        ++e.checked;
        if (o.ok) {
            // keep the most detailed passing instance; ties go to the earliest
            const std::size_t weight = o.evidence.dump().size() + o.instance.dump().size();
            if (e.witness.is_null() || weight > e.witness_weight) {
                e.witness = {{"instance", std::move(o.instance)}, {"evidence", std::move(o.evidence)}};
                e.witness_weight = weight;
            }
            return;
        }
        ++e.failures;
        if (e.counterexamples.size() < kMaxCounterexamples)
            e.counterexamples.push_back({{"instance", std::move(o.instance)}, {"evidence", std::move(o.evidence)}});
    }

    void add_all(const std::string& property, std::vector<Outcome> os) {
        for (Outcome& o : os)
            add(property, std::move(o));
    }

    bool ok() const {
        return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.failures == 0; });
    }

    json to_json() const {
        json out = json::array();
        for (const Entry& e : entries_) {
            json c = {{"property", e.property}, {"checked", e.checked}, {"failures", e.failures}};
            if (e.failures == 0)
                c["witness"] = e.witness;
            else
                c["counterexamples"] = e.counterexamples;
            out.push_back(std::move(c));
        }
        return out;
    }

private:
    struct Entry {
        std::string property;
        std::size_t checked = 0;
        std::size_t failures = 0;
        json witness;
        std::size_t witness_weight = 0;
        json counterexamples = json::array();
    };
    std::vector<Entry> entries_;
    std::map<std::string, std::size_t> index_;
};

using Task = std::function<Outcome(json& instance)>;

/// Runs every task, catching library errors as failures; results are in task
/// order regardless of scheduling.
std::vector<Outcome> run_all(const std::vector<Task>& tasks, unsigned threads) {
    std::vector<Outcome> out(tasks.size());
    auto one = [&](std::size_t i) {
        json instance;
        try {
            out[i] = tasks[i](instance);
        } catch (const std::exception& e) {
            out[i] = {false, std::move(instance), {{"error", e.what()}}};
        }
    };
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, unsigned(tasks.size())));
    if (workers == 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i)
            one(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();)
                one(i);
        });
    for (auto& t : pool)
        t.join();
    return out;
}

struct Run {
    const VerifyOptions& opts;
    unsigned threads;
    Ledger ledger;
    json results = json::object();

    void check(const std::string& property, const std::vector<Task>& tasks) {
        ledger.add_all(property, run_all(tasks, threads));
    }
};

json ctx_json(const RingCtx& c) { return {{"p", c.p}, {"n", c.n}}; }

json iso_evidence(const IsoResult& r) {
    json e = {{"outcome", iso_name(r.outcome)}};
    if (!r.reason.empty())
        e["reason"] = r.reason;
    if (r.witness) {
        json w = json::array();
        for (const FpMatrix& m : *r.witness)
            w.push_back(io::matrix_to_json(m));
        e["witness"] = std::move(w);
    }
    return e;
}

json sample_tag(const std::string& label, std::size_t index) { return {{"sweep", label}, {"index", index}}; }

unsigned closed_hom(unsigned a, unsigned b) { return std::min(a, b); }
unsigned closed_stable(unsigned a, unsigned b, unsigned n) { return std::min({a, b, n - a, n - b}); }
unsigned closed_tor(unsigned a, unsigned b, unsigned n) { return std::min(a, b) - (a + b > n ? a + b - n : 0); }

MorphObject zero_into(const LambdaModule& m) {
    return MorphObject(LambdaMorphism::zero(LambdaModule::zero(m.ctx()), m), Kind::S);
}
MorphObject zero_from(const LambdaModule& m) {
    return MorphObject(LambdaMorphism::zero(m, LambdaModule::zero(m.ctx())), Kind::F);
}
MorphObject identity_object(const LambdaModule& m, Kind k) { return MorphObject(LambdaMorphism::identity(m), k); }

MorphObject random_s(SplitMix64& rng, const RingCtx& c, unsigned max_dim) {
    const LambdaModule y = random_module(rng, c, max_dim);
    return MorphObject(random_mono(rng, y, unsigned(rng.between(0, 3))), Kind::S);
}

RingCtx random_ctx(SplitMix64& rng, std::uint32_t p, unsigned n_lo, unsigned n_hi) {
    return RingCtx(p, unsigned(rng.between(n_lo, n_hi)));
}

// ------------------------------------------------------------------ dims

void suite_dims(Run& run) {
    const auto& o = run.opts;
    json tables = json::array();
    for (std::uint32_t p : o.primes)
        for (unsigned n = 1; n <= o.n_max; ++n) {
            std::vector<Task> hom, shom, tor;
            for (unsigned a = 1; a <= n; ++a)
                for (unsigned b = 1; b <= n; ++b) {
                    const RingCtx c(p, n);
                    const json inst = {{"ring", ctx_json(c)}, {"a", a}, {"b", b}};
                    hom.push_back([=](json& i) {
                        i = inst;
                        const auto d = hom_dim(jordan_block(c, a), jordan_block(c, b));
                        return Outcome{d == closed_hom(a, b), i, {{"dim", d}, {"expected", closed_hom(a, b)}}};
                    });
                    shom.push_back([=](json& i) {
                        i = inst;
                        const auto d = stable_hom(jordan_block(c, a), jordan_block(c, b)).dim();
                        return Outcome{d == closed_stable(a, b, n), i, {{"dim", d}, {"expected", closed_stable(a, b, n)}}};
                    });
                    tor.push_back([=](json& i) {
                        i = inst;
                        const auto d = tor1(jordan_block(c, a), jordan_block(c, b)).dim;
                        return Outcome{d == closed_tor(a, b, n), i, {{"dim", d}, {"expected", closed_tor(a, b, n)}}};
                    });
                }
            run.check("dim Hom(J_a,J_b) = min(a,b)", hom);
            run.check("dim stable-Hom(J_a,J_b) = min(a,b,n-a,n-b)", shom);
            run.check("dim Tor1(J_a,J_b) = min(a,b) - max(a+b-n,0)", tor);
        }
    for (std::uint32_t p : o.primes)
        for (unsigned n = 2; n <= o.n_max; ++n) {
            const RingCtx c(p, n);
            const std::size_t expected = std::size_t(n - 1) * n * (n + 1) / 6;
            Outcome out{false, {{"command", "gamma-table"}, {"ring", ctx_json(c)}}, {}};
            try {
                const auto alg = gamma_algebra(c); // validates associativity and units
                tables.push_back({{"p", p}, {"n", n}, {"dims", alg->dims()}, {"total_dim", alg->dim()}});
                out.ok = alg->dim() == expected;
                out.evidence = {{"dim", alg->dim()}, {"expected", expected}, {"assoc_checked", true}};
            } catch (const std::exception& e) {
                out.evidence = {{"error", e.what()}};
            }
            run.ledger.add("dim Gamma_n = (n-1)n(n+1)/6, associative and unital", std::move(out));
        }
    run.results["dims"] = {{"gamma", tables}};
}

// ------------------------------------------------------------------ transpose

void suite_transpose(Run& run) {
    const auto& o = run.opts;
    for (std::uint32_t p : o.primes)
        for (unsigned n = 1; n <= o.n_max; ++n) {
            std::vector<Task> om, tr;
            for (unsigned a = 1; a <= n; ++a) {
                const RingCtx c(p, n);
                om.push_back([=](json& i) {
                    i = {{"ring", ctx_json(c)}, {"a", a}};
                    const JordanType t = jordan_type(syzygy(jordan_block(c, a)));
                    const JordanType want{a == n ? std::vector<unsigned>{} : std::vector<unsigned>{n - a}};
                    return Outcome{t == want, i, {{"type", t.blocks}, {"expected", want.blocks}}};
                });
                tr.push_back([=](json& i) {
                    i = {{"ring", ctx_json(c)}, {"a", a}};
                    const JordanType t = stable_type(jordan_type(transpose(jordan_block(c, a))), n);
                    const JordanType want = stable_type(JordanType{{a}}, n);
                    return Outcome{t == want, i, {{"stable_type", t.blocks}, {"expected", want.blocks}}};
                });
            }
            run.check("Omega(J_a) = J_{n-a}", om);
            run.check("Tr(J_a) = J_a stably", tr);
        }
    std::vector<Task> trtr;
    for (std::uint32_t p : o.primes)
        for (unsigned k = 0; k < o.samples; ++k) {
            const std::string label = "transpose/" + std::to_string(p);
            trtr.push_back([=](json& i) {
                SplitMix64 rng = instance_rng(o.seed, label, k);
                const RingCtx c = random_ctx(rng, p, 1, o.n_max);
                const LambdaModule m = random_module(rng, c, 8);
                i = {{"sample", sample_tag(label, k)}, {"command", "transpose"}, {"input", io::module_to_json(m)}};
                const JordanType t = stable_type(jordan_type(transpose(transpose(m))), c.n);
                const JordanType want = stable_type(jordan_type(m), c.n);
                return Outcome{t == want, i, {{"stable_type", t.blocks}, {"expected", want.blocks}}};
            });
        }
    run.check("Tr(Tr(M)) = M stably", trtr);
}

// ------------------------------------------------------------------ bridges

std::vector<MorphObject> ideal_objects(Ideal ideal, const RingCtx& c, SplitMix64& rng) {
    std::vector<MorphObject> out;
    std::vector<LambdaModule> ms;
    for (unsigned a = 1; a <= c.n; ++a)
        ms.push_back(jordan_block(c, a));
    ms.push_back(random_module(rng, c, 7));
    for (const LambdaModule& m : ms) {
        switch (ideal) {
        case Ideal::V:
            out.push_back(zero_into(m));
            out.push_back(identity_object(m, Kind::S));
            break;
        case Ideal::U:
            out.push_back(zero_from(m));
            out.push_back(identity_object(m, Kind::F));
            break;
        case Ideal::X: {
            out.push_back(identity_object(m, Kind::S));
            out.push_back(MorphObject(syzygy_inclusion(m).inclusion, Kind::S));
            const LambdaModule free = free_module(c, unsigned(rng.between(1, 2)));
            out.push_back(MorphObject(random_mono(rng, free, 2), Kind::S));
            break;
        }
        case Ideal::Y:
            out.push_back(identity_object(m, Kind::F));
            out.push_back(MorphObject(projective_cover(m).cover, Kind::F));
            out.push_back(zero_from(free_module(c, 1)));
            break;
        }
    }
    return out;
}

void check_values(Run& run, Bridge b, const std::string& property, const RingCtx& c, const MorphObject& o,
                  const std::vector<std::size_t>& want) {
    if (c.n > run.opts.n_max ||
        std::find(run.opts.primes.begin(), run.opts.primes.end(), c.p) == run.opts.primes.end())
        return;
    run.check(property, {[=](json& i) {
                  i = {{"command", bridge_name(b)}, {"input", io::object_to_json(o)}};
                  const GammaModule g = apply(b, o);
                  return Outcome{g.dims() == want, i, {{"dims", g.dims()}, {"expected", want}}};
              }});
}

MorphObject bottom_inclusion(const RingCtx& c, unsigned a, unsigned b) {
    FpMatrix m(b, a, c.p);
    for (unsigned i = 0; i < a; ++i)
        m.at(b - a + i, i) = 1;
    return MorphObject(LambdaMorphism(jordan_block(c, a), jordan_block(c, b), m), Kind::S);
}

MorphObject top_projection(const RingCtx& c, unsigned b, unsigned a) {
    FpMatrix m(a, b, c.p);
    for (unsigned i = 0; i < a; ++i)
        m.at(i, i) = 1;
    return MorphObject(LambdaMorphism(jordan_block(c, b), jordan_block(c, a), m), Kind::F);
}

void suite_bridge(Run& run, Bridge b) {
    const auto& o = run.opts;
    const std::string name = bridge_name(b);
    const Ideal ideal = kernel_ideal(b);
    if (o.n_max < 2) {
        run.results[name] = {{"skipped", "n_max < 2: the stable category is zero"}};
        return;
    }

    std::vector<Task> kill;
    for (std::uint32_t p : o.primes)
        for (unsigned n = 2; n <= o.n_max; ++n) {
            const std::string label = name + "/objects/" + std::to_string(p) + "/" + std::to_string(n);
            SplitMix64 rng = instance_rng(o.seed, label, 0);
            for (const MorphObject& obj : ideal_objects(ideal, RingCtx(p, n), rng))
                kill.push_back([=](json& i) {
                    i = {{"command", name}, {"input", io::object_to_json(obj)}};
                    const GammaModule g = apply(b, obj);
                    const bool member = in_ideal(ideal, obj);
                    return Outcome{g.is_zero() && member, i, {{"dims", g.dims()}, {"in_ideal", member}}};
                });
        }
    run.check(name + " vanishes on " + ideal_name(ideal) + "-objects", kill);

    switch (b) {
    case Bridge::Psi:
        check_values(run, b, "psi(J_1 -> J_2 socle) over Lambda_2 has dims (1)", RingCtx(5, 2),
                     bottom_inclusion(RingCtx(5, 2), 1, 2), {1});
        check_values(run, b, "psi(J_1 -> J_2) over Lambda_3 has dims (1,0)", RingCtx(5, 3),
                     bottom_inclusion(RingCtx(5, 3), 1, 2), {1, 0});
        break;
    case Bridge::Phi:
        check_values(run, b, "phi(Lambda -> J_1) over Lambda_2 has dims (1)", RingCtx(5, 2),
                     top_projection(RingCtx(5, 2), 2, 1), {1});
        check_values(run, b, "phi(J_2 -> J_1) over Lambda_3 has dims (1,0)", RingCtx(5, 3),
                     top_projection(RingCtx(5, 3), 2, 1), {1, 0});
        break;
    case Bridge::Im:
        for (std::uint32_t p : o.primes)
            check_values(run, b, "im(J_2 -> J_1) over Lambda_3 has dims (0,1)", RingCtx(p, 3),
                         top_projection(RingCtx(p, 3), 2, 1), {0, 1});
        break;
    case Bridge::Theta: {
        std::vector<Task> rep;
        for (std::uint32_t p : o.primes)
            for (unsigned n = 2; n <= o.n_max; ++n)
                for (unsigned a = 1; a <= n; ++a) {
                    const RingCtx c(p, n);
                    rep.push_back([=](json& i) {
                        const MorphObject obj = zero_into(jordan_block(c, a));
                        i = {{"command", name}, {"input", io::object_to_json(obj)}};
                        const IsoResult r =
                            iso_test(theta(obj), stable_representable_contra(gamma_algebra(c), jordan_block(c, a)));
                        return Outcome{r.outcome == IsoOutcome::Iso, i, iso_evidence(r)};
                    });
                }
        run.check("theta(0 -> J_a) = (-, stable J_a)", rep);
        break;
    }
    }

    std::vector<Task> hom;
    for (std::uint32_t p : o.primes)
        for (unsigned k = 0; k < o.samples; ++k) {
            const std::string label = name + "/hom/" + std::to_string(p);
            hom.push_back([=](json& i) {
                SplitMix64 rng = instance_rng(o.seed, label, k);
                const RingCtx c = random_ctx(rng, p, 2, o.n_max);
                MorphObject o1 = random_s(rng, c, 7), o2 = random_s(rng, c, 7);
                if (bridge_kind(b) == Kind::F) {
                    o1 = cok(o1);
                    o2 = cok(o2);
                }
                i = {{"sample", sample_tag(label, k)},
                     {"command", "ideal-test"},
                     {"src", io::object_to_json(o1)},
                     {"dst", io::object_to_json(o2)}};
                const HomMap hm = hom_map(b, o1, o2);
                const Subspace ker = hm.kernel();
                const Subspace fac = factoring_subspace(ideal, o1, o2, hm.source);
                const bool full = hm.surjective();
                return Outcome{full && ker == fac, i,
                               {{"hom_h_dim", hm.source.size()},
                                {"hom_gamma_dim", hm.target.size()},
                                {"rank", rank(hm.matrix)},
                                {"kernel_dim", ker.dim()},
                                {"factoring_dim", fac.dim()},
                                {"kernel_equals_factoring", ker == fac}}};
            });
        }
    run.check(name + " is full with kernel the " + ideal_name(ideal) + "-factoring maps", hom);

    if (b == Bridge::Psi) {
        std::vector<Task> dense, coh;
        for (std::uint32_t p : o.primes)
            for (unsigned k = 0; k < o.samples; ++k) {
                const std::string label = "psi/dense/" + std::to_string(p);
                dense.push_back([=](json& i) {
                    SplitMix64 rng = instance_rng(o.seed, label, k);
                    const RingCtx c = random_ctx(rng, p, 2, o.n_max);
                    const auto alg = gamma_algebra(c);
                    GammaModule g;
                    switch (k % 3) {
                    case 0: g = psi(random_s(rng, c, 7)); break;
                    case 1: g = stable_representable_contra(alg, random_module(rng, c, 7)); break;
                    default:
                        g = direct_sum(psi(random_s(rng, c, 5)),
                                       stable_representable_contra(alg, random_module(rng, c, 5)));
                    }
                    i = {{"sample", sample_tag(label, k)}, {"command", "psi"}, {"inverse", true},
                         {"input", io::gamma_to_json(g)}};
                    const MorphObject pre = psi_inverse(g, k % 2 == 1);
                    const IsoResult r = iso_test(psi(pre), g);
                    json e = iso_evidence(r);
                    e["preimage"] = io::object_to_json(pre);
                    return Outcome{r.outcome == IsoOutcome::Iso, i, e};
                });
                const std::string label2 = "psi/xi/" + std::to_string(p);
                coh.push_back([=](json& i) {
                    SplitMix64 rng = instance_rng(o.seed, label2, k);
                    const RingCtx c = random_ctx(rng, p, 2, o.n_max);
                    const MorphObject s = random_s(rng, c, 7);
                    i = {{"sample", sample_tag(label2, k)}, {"command", "xi"}, {"object", io::object_to_json(s)}};
                    const IsoResult r = iso_test(xi(psi(s)), phi(cok(s)));
                    return Outcome{r.outcome == IsoOutcome::Iso, i, iso_evidence(r)};
                });
            }
        run.check("psi(psi_inverse(G)) = G", dense);
        run.check("xi(psi(s)) = phi(cok(s))", coh);
    }

    if (b == Bridge::Theta || b == Bridge::Im) {
        std::vector<Task> rec;
        for (std::uint32_t p : o.primes)
            for (unsigned k = 0; k < o.samples; ++k) {
                const std::string label = name + "/recollement/" + std::to_string(p);
                rec.push_back([=](json& i) {
                    SplitMix64 rng = instance_rng(o.seed, label, k);
                    const RingCtx c = random_ctx(rng, p, 2, o.n_max);
                    const auto alg = gamma_algebra(c);
                    const MorphObject s = random_s(rng, c, 7);
                    const MorphObject obj = b == Bridge::Theta ? s : cok(s);
                    i = {{"sample", sample_tag(label, k)}, {"command", name}, {"input", io::object_to_json(obj)}};
                    const IsoResult r = b == Bridge::Theta ? iso_test(theta(obj), i_lambda(sigma(obj), alg))
                                                           : iso_test(im_functor(obj), j_rho(sigma_prime(obj), alg));
                    return Outcome{r.outcome == IsoOutcome::Iso, i, iso_evidence(r)};
                });
            }
        run.check(b == Bridge::Theta ? "theta = i_lambda o Sigma" : "im = j_rho o Sigma'", rec);
    }
    run.results[name] = {{"ideal", ideal_name(ideal)}};
}

// ------------------------------------------------------------------ rho

void suite_rho(Run& run) {
    const auto& o = run.opts;
    std::vector<Task> rho, tor;
    auto add = [&](const LambdaModule& m, json tag) {
        rho.push_back([=](json& i) {
            i = {{"command", "rho-check"}, {"input", io::module_to_json(m)}};
            if (!tag.is_null())
                i["sample"] = tag;
            const FunctorComparison r = rho_check(m);
            json e = iso_evidence(r.iso);
            e["dims"] = r.lhs.dims();
            return Outcome{r.holds, i, e};
        });
        tor.push_back([=](json& i) {
            i = {{"command", "xi"}, {"module", io::module_to_json(m)}};
            if (!tag.is_null())
                i["sample"] = tag;
            const FunctorComparison r = tor_compare(m);
            json e = iso_evidence(r.iso);
            e["dims"] = r.lhs.dims();
            if (!r.reason.empty())
                e["reason"] = r.reason;
            return Outcome{r.holds, i, e};
        });
    };
    for (std::uint32_t p : o.primes)
        for (unsigned n = 2; n <= o.n_max; ++n)
            for (const LambdaModule& m : modules_upto(RingCtx(p, n), n))
                add(m, nullptr);
    for (std::uint32_t p : o.primes)
        for (unsigned k = 0; k < o.samples; ++k) {
            if (o.n_max < 2)
                break;
            const std::string label = "rho/" + std::to_string(p);
            SplitMix64 rng = instance_rng(o.seed, label, k);
            const RingCtx c = random_ctx(rng, p, 2, o.n_max);
            add(random_module(rng, c, 8), sample_tag(label, k));
        }
    run.check("rho(M) = Tr(M): xi((-, stable M)) = (stable Tr M, -)", rho);
    run.check("xi((-, stable Z)) = Tor1(-, Z)", tor);
}

// ------------------------------------------------------------------ recollement

void suite_recollement(Run& run) {
    const auto& o = run.opts;
    std::vector<Task> nu_rep, nu_l, th_t, th_r, il_rep, il_l;
    for (std::uint32_t p : o.primes)
        for (unsigned n = 1; n <= o.n_max; ++n)
            for (const LambdaModule& m : modules_upto(RingCtx(p, n), n)) {
                const json inst = {{"module", io::module_to_json(m)}};
                auto iso_task = [=](std::function<LambdaModule()> f) {
                    return [=](json& i) {
                        i = inst;
                        const LambdaModule r = f();
                        return Outcome{is_isomorphic(r, m), i,
                                       {{"type", jordan_type(r).blocks}, {"expected", jordan_type(m).blocks}}};
                    };
                };
                nu_rep.push_back(iso_task([=] { return nu(ContraFunctor::representable(m)); }));
                nu_l.push_back(iso_task([=] { return nu(L0(m)); }));
                th_t.push_back(iso_task([=] { return theta_eval(t(m)); }));
                th_r.push_back(iso_task([=] { return theta_eval(R0(m)); }));
                if (n < 2)
                    continue;
                il_rep.push_back([=](json& i) {
                    i = inst;
                    const auto alg = gamma_algebra(m.ctx());
                    const GammaModule g = i_lambda(ContraFunctor::representable(m), alg);
                    std::vector<std::size_t> want;
                    for (unsigned a = 1; a < n; ++a)
                        want.push_back(stable_hom(jordan_block(m.ctx(), a), m).dim());
                    const IsoResult r = iso_test(g, stable_representable_contra(alg, m));
                    json e = iso_evidence(r);
                    e["dims"] = g.dims();
                    e["expected"] = want;
                    return Outcome{g.dims() == want && r.outcome == IsoOutcome::Iso, i, e};
                });
                il_l.push_back([=](json& i) {
                    i = inst;
                    const GammaModule g = i_lambda(L0(m), gamma_algebra(m.ctx()));
                    return Outcome{g.is_zero(), i, {{"dims", g.dims()}}};
                });
            }
    run.check("nu((-, M)) = M", nu_rep);
    run.check("nu(L0(M)) = M", nu_l);
    run.check("theta_eval(t(M)) = M", th_t);
    run.check("theta_eval(R0(M)) = M", th_r);
    run.check("i_lambda((-, M)) = (-, stable M)", il_rep);
    run.check("i_lambda(L0(M)) = 0", il_l);

    std::vector<Task> adj;
    for (std::uint32_t p : o.primes)
        for (unsigned k = 0; k < o.samples; ++k) {
            const std::string label = "recollement/adjunction/" + std::to_string(p);
            adj.push_back([=](json& i) {
                SplitMix64 rng = instance_rng(o.seed, label, k);
                const RingCtx c = random_ctx(rng, p, 1, std::min(3u, o.n_max));
                const LambdaMorphism u =
                    random_morphism(rng, random_module(rng, c, 5), random_module(rng, c, 5));
                const LambdaModule m = random_module(rng, c, 5);
                i = {{"sample", sample_tag(label, k)},
                     {"functor", io::functor_to_json(ContraFunctor(u))},
                     {"module", io::module_to_json(m)}};
                const ContraFunctor f(u);
                const std::size_t lhs = hom_dim(nu(f), m);
                const std::size_t rhs =
                    nat_basis(c, Variance::Contra, f.data(), ContraFunctor::representable(m).data()).size();
                return Outcome{lhs == rhs, i, {{"dim_hom_nu_F_M", lhs}, {"dim_nat_F_rep_M", rhs}}};
            });
        }
    run.check("dim Hom(nu F, M) = dim Nat(F, (-, M))", adj);
}

// ------------------------------------------------------------------ ideals

void suite_ideals(Run& run) {
    const auto& o = run.opts;
    const std::uint32_t p = 2;
    const unsigned max_dim = 4;
    json counts = json::array();
    for (unsigned n = 2; n <= std::min(3u, o.n_max); ++n) {
        const RingCtx c(p, n);
        const auto monos = enumerate_monos(c, max_dim);
        const auto epis = enumerate_epis(c, max_dim);
        counts.push_back({{"n", n}, {"s_objects", monos.size()}, {"f_objects", epis.size()}});

        std::vector<Task> kc, ck;
        for (const MorphObject& s : monos)
            kc.push_back([=](json& i) {
                i = {{"command", "cok"}, {"input", io::object_to_json(s)}};
                const MorphMap h = ker_cok_comparison(s);
                return Outcome{is_iso(h), i, {{"comparison", io::square_to_json(h)}}};
            });
        for (const MorphObject& g : epis)
            ck.push_back([=](json& i) {
                i = {{"command", "ker"}, {"input", io::object_to_json(g)}};
                const MorphMap h = cok_ker_comparison(g);
                return Outcome{is_iso(h), i, {{"comparison", io::square_to_json(h)}}};
            });
        run.check("ker o cok = id on S", kc);
        run.check("cok o ker = id on F", ck);

        for (Bridge b : {Bridge::Psi, Bridge::Phi, Bridge::Theta, Bridge::Im}) {
            const auto& objs = bridge_kind(b) == Kind::S ? monos : epis;
            const Ideal ideal = kernel_ideal(b);
            const std::string name = bridge_name(b);
            std::vector<Task> obj_tasks, pair_tasks;
            for (const MorphObject& x : objs)
                obj_tasks.push_back([=](json& i) {
                    i = {{"command", name}, {"input", io::object_to_json(x)}};
                    const bool zero = apply(b, x).is_zero();
                    const bool member = in_ideal(ideal, x);
                    return Outcome{zero == member, i, {{"functor_zero", zero}, {"in_ideal", member}}};
                });
            for (const MorphObject& x : objs)
                for (const MorphObject& y : objs)
                    pair_tasks.push_back([=](json& i) {
                        i = {{"command", "ideal-test"}, {"src", io::object_to_json(x)}, {"dst", io::object_to_json(y)}};
                        const HomMap hm = hom_map(b, x, y);
                        const Subspace ker = hm.kernel();
                        bool ok = hm.surjective();
                        // every map killed by the functor factors, with a witness
                        for (std::size_t j = 0; ok && j < ker.dim(); ++j) {
                            MorphMap h = MorphMap::zero(x, y);
                            const FpVector v = ker.basis().col(j);
                            for (std::size_t t = 0; t < v.size(); ++t)
                                if (v[t])
                                    h = add(h, scale(hm.source[t], v[t]));
                            ok = factors_through(ideal, h).has_value();
                        }
                        // and no map outside the kernel does
                        const FpMatrix rest = complement_in(ker, Subspace::full(hm.source.size(), p));
                        for (std::size_t j = 0; ok && j < rest.cols(); ++j) {
                            MorphMap h = MorphMap::zero(x, y);
                            const FpVector v = rest.col(j);
                            for (std::size_t t = 0; t < v.size(); ++t)
                                if (v[t])
                                    h = add(h, scale(hm.source[t], v[t]));
                            ok = !factors_through(ideal, h).has_value();
                        }
                        const Subspace fac = factoring_subspace(ideal, x, y, hm.source);
                        ok = ok && fac == ker;
                        return Outcome{ok, i,
                                       {{"hom_h_dim", hm.source.size()},
                                        {"kernel_dim", ker.dim()},
                                        {"factoring_dim", fac.dim()},
                                        {"surjective", hm.surjective()}}};
                    });
            run.check(name + "(o) = 0 iff o in add " + ideal_name(ideal) + " (exhaustive)", obj_tasks);
            run.check(name + "(h) = 0 iff h factors through " + ideal_name(ideal) + " (exhaustive)", pair_tasks);
        }
    }
    run.results["ideals"] = {{"p", p}, {"max_dim", max_dim}, {"enumerated", counts}};
}

const std::map<std::string, std::function<void(Run&)>>& suites() {
    static const std::map<std::string, std::function<void(Run&)>> s = {
        {"dims", suite_dims},
        {"transpose", suite_transpose},
        {"psi", [](Run& r) { suite_bridge(r, Bridge::Psi); }},
        {"phi", [](Run& r) { suite_bridge(r, Bridge::Phi); }},
        {"theta", [](Run& r) { suite_bridge(r, Bridge::Theta); }},
        {"im", [](Run& r) { suite_bridge(r, Bridge::Im); }},
        {"rho", suite_rho},
        {"recollement", suite_recollement},
        {"ideals", suite_ideals},
    };
    return s;
}

std::uint64_t label_hash(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"dims", "transpose", "psi",         "phi",    "theta",
                                                   "im",   "rho",       "recollement", "ideals", "all"};
    return names;
}

SplitMix64 instance_rng(std::uint64_t seed, const std::string& label, std::uint64_t index) {
    SplitMix64 root(seed);
    SplitMix64 sweep = root.split(label_hash(label));
    return sweep.split(index);
}

nlohmann::json verify(const VerifyOptions& opts) {
    if (std::find(suite_names().begin(), suite_names().end(), opts.suite) == suite_names().end())
        throw InvalidArgument("unknown suite '" + opts.suite + "'");
    if (opts.n_max < 1 || opts.n_max > 8)
        throw InvalidArgument("n-max must lie in 1..8");
    if (opts.primes.empty())
        throw InvalidArgument("at least one prime is required");
    for (std::uint32_t p : opts.primes)
        if (!Field::is_prime(p) || p > 97)
            throw InvalidArgument("primes must be primes below 100");

    const auto start = std::chrono::steady_clock::now();
    Run run{opts, opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency()), {}, {}};
    for (const auto& [name, fn] : suites())
        if (opts.suite == "all" || opts.suite == name)
            fn(run);
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string primes;
    for (std::uint32_t p : opts.primes)
        primes += (primes.empty() ? "" : ",") + std::to_string(p);
    json report;
    report["command"] = "monocat verify --suite " + opts.suite + " --n-max " + std::to_string(opts.n_max) +
                        " --p " + primes + " --seed " + std::to_string(opts.seed) + " --samples " +
                        std::to_string(opts.samples);
    report["ok"] = run.ledger.ok();
    report["options"] = {{"suite", opts.suite},
                         {"n_max", opts.n_max},
                         {"primes", opts.primes},
                         {"seed", opts.seed},
                         {"samples", opts.samples}};
    report["results"] = std::move(run.results);
    report["certificates"] = run.ledger.to_json();
    report["timing_ms"] = ms;
    return report;
}

} // namespace monocat
