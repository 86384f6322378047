#include "monocat/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "monocat/bridges.hpp"
#include "monocat/io.hpp"
#include "monocat/verify.hpp"

namespace monocat {

namespace {

using nlohmann::json;

/// Raised for unreadable input; maps to exit code 2 like every library error.
class InputError : public Error {
public:
    using Error::Error;
};

json read_json(const std::string& path) {
    try {
        if (path == "-")
            return json::parse(std::cin);
        std::ifstream f(path);
        if (!f)
            throw InputError("cannot open '" + path + "'");
        return json::parse(f);
    } catch (const json::parse_error& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
}

json matrices(const std::vector<LambdaMorphism>& fs) {
    json out = json::array();
    for (const auto& f : fs)
        out.push_back(io::matrix_to_json(f.matrix()));
    return out;
}

json iso_json(const IsoResult& r) {
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

std::vector<std::uint32_t> parse_primes(const std::string& s) {
    std::vector<std::uint32_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(item, &used);
            if (used != item.size())
                throw std::invalid_argument(item);
            out.push_back(std::uint32_t(v));
        } catch (const std::logic_error&) {
            throw InvalidArgument("--p expects a comma-separated list of primes, got '" + s + "'");
        }
    }
    return out;
}

json strip_timing(json report) {
    report.erase("timing_ms");
    return report;
}

struct Result {
    json doc;
    int code = 0;
};

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with morphism categories and functor categories over k[x]/(x^n)", "monocat"};
    app.require_subcommand(1);
    app.fallthrough();
    bool pretty = false;
    std::string out_file;
    app.add_flag("--pretty", pretty, "Indent the JSON output");
    app.add_option("--out", out_file, "Write the JSON output to FILE instead of stdout");

    std::string in1, in2;
    std::function<Result()> action;

    auto unary = [&](const char* name, const char* help, std::function<Result(const json&)> f) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("input", in1, "Input JSON file, or - for stdin")->required();
        sub->callback([&, f] { action = [&, f] { return f(read_json(in1)); }; });
        return sub;
    };
    auto binary = [&](const char* name, const char* help, std::function<Result(const json&, const json&)> f) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("first", in1, "First module (JSON file)")->required();
        sub->add_option("second", in2, "Second module (JSON file)")->required();
        sub->callback([&, f] { action = [&, f] { return f(read_json(in1), read_json(in2)); }; });
        return sub;
    };

    unary("jordan", "Jordan type of a module", [](const json& j) {
        const LambdaModule m = io::module_from_json(j);
        return Result{{{"type", jordan_type(m).blocks}, {"dim", m.dim()}}};
    });
    binary("hom", "Basis of Hom(M, N)", [](const json& a, const json& b) {
        const auto basis = hom_basis(io::module_from_json(a), io::module_from_json(b));
        return Result{{{"dim", basis.size()}, {"basis", matrices(basis)}}};
    });
    binary("stable-hom", "Stable Hom(M, N) modulo maps through projectives", [](const json& a, const json& b) {
        const StableHom s = stable_hom(io::module_from_json(a), io::module_from_json(b));
        return Result{{{"dim", s.dim()}, {"hom_dim", s.hom.size()}, {"basis", matrices(s.basis_reps)}}};
    });
    binary("tor", "dim Tor_1(M, N)", [](const json& a, const json& b) {
        return Result{{{"dim", tor1(io::module_from_json(a), io::module_from_json(b)).dim}}};
    });
    unary("transpose", "Auslander-Bridger transpose", [](const json& j) {
        const LambdaModule t = transpose(io::module_from_json(j));
        return Result{{{"type", jordan_type(t).blocks}, {"module", io::module_to_json(t)}}};
    });

    bool inverse = false;
    CLI::App* psi_cmd = unary("psi", "Psi of an S-object, or with --inverse a preimage of a Gamma-module",
                              [&inverse](const json& j) {
                                  if (inverse) {
                                      const MorphObject s = psi_inverse(io::gamma_from_json(j));
                                      return Result{{{"result", io::object_to_json(s)}}};
                                  }
                                  const GammaModule g = psi(io::object_from_json(j));
                                  return Result{{{"dims", g.dims()}, {"result", io::gamma_to_json(g)}}};
                              });
    psi_cmd->add_flag("--inverse", inverse, "Input is a contravariant Gamma-module");
    for (Bridge b : {Bridge::Phi, Bridge::Theta, Bridge::Im})
        unary(bridge_name(b), "Apply the functor to a morphism object", [b](const json& j) {
            const GammaModule g = apply(b, io::object_from_json(j));
            return Result{{{"dims", g.dims()}, {"result", io::gamma_to_json(g)}}};
        });
    unary("xi", "Xi = Phi o Cok o Psi^-1 on a contravariant Gamma-module", [](const json& j) {
        const GammaModule g = xi(io::gamma_from_json(j));
        return Result{{{"dims", g.dims()}, {"result", io::gamma_to_json(g)}}};
    });
    unary("rho-check", "Compare rho(M) with the transpose of M", [](const json& j) {
        const FunctorComparison r = rho_check(io::module_from_json(j));
        return Result{{{"holds", r.holds},
                       {"lhs", io::gamma_to_json(r.lhs)},
                       {"rhs", io::gamma_to_json(r.rhs)},
                       {"iso", iso_json(r.iso)}},
                      r.holds ? 0 : 1};
    });
    unary("cok", "Cokernel object of an S-object", [](const json& j) {
        return Result{{{"result", io::object_to_json(cok(io::object_from_json(j)))}}};
    });
    unary("ker", "Kernel object of an F-object", [](const json& j) {
        return Result{{{"result", io::object_to_json(ker(io::object_from_json(j)))}}};
    });

    std::string ideal = "V";
    CLI::App* ideal_cmd = unary("ideal-test", "Whether a square (or an object's identity) factors through an ideal",
                                [&ideal](const json& j) {
                                    const Ideal id = parse_ideal(ideal);
                                    const MorphMap h = j.contains("sigma1")
                                                           ? io::square_from_json(j)
                                                           : MorphMap::identity(io::object_from_json(j));
                                    const auto w = factors_through(id, h);
                                    json doc = {{"ideal", ideal_name(id)}, {"factors", w.has_value()}};
                                    doc["witness"] = w ? io::square_to_json(*w) : json(nullptr);
                                    return Result{doc};
                                });
    ideal_cmd->add_option("--ideal", ideal, "One of V, U, X, Y")->check(CLI::IsMember({"V", "U", "X", "Y"}));

    unsigned n = 0;
    std::uint32_t p = 0;
    CLI::App* table = app.add_subcommand("gamma-table", "Dimensions of the stable Auslander algebra");
    table->add_option("--n", n, "Nilpotency index")->required()->check(CLI::Range(1, 12));
    table->add_option("--p", p, "Prime")->required();
    table->callback([&] {
        action = [&] {
            if (!Field::is_prime(p))
                throw InvalidArgument("--p must be prime");
            const auto alg = gamma_algebra(RingCtx(p, n));
            return Result{{{"n", n},
                           {"p", p},
                           {"dims", alg->dims()},
                           {"total_dim", alg->dim()},
                           {"assoc_checked", true}}};
        };
    });

    VerifyOptions vo;
    std::string primes = "2,5";
    std::string replay;
    CLI::App* ver = app.add_subcommand("verify", "Run the seeded verification suites");
    ver->add_option("--suite", vo.suite, "Suite name")->check(CLI::IsMember(suite_names()));
    ver->add_option("--n-max", vo.n_max, "Largest n")->check(CLI::Range(1, 8));
    ver->add_option("--p", primes, "Comma-separated primes");
    ver->add_option("--seed", vo.seed, "Seed");
    ver->add_option("--samples", vo.samples, "Random samples per sweep and prime");
    ver->add_option("--threads", vo.threads, "Worker threads (0: all cores)");
    ver->add_option("--replay", replay, "Rerun the options recorded in a report and compare");
    ver->callback([&] {
        action = [&] {
            if (!replay.empty()) {
                const json old = read_json(replay);
                const json& o = old.at("options");
                VerifyOptions ro;
                ro.suite = o.at("suite").get<std::string>();
                ro.n_max = o.at("n_max").get<unsigned>();
                ro.primes = o.at("primes").get<std::vector<std::uint32_t>>();
                ro.seed = o.at("seed").get<std::uint64_t>();
                ro.samples = o.at("samples").get<unsigned>();
                ro.threads = vo.threads;
                const json fresh = verify(ro);
                const bool same = strip_timing(fresh) == strip_timing(old);
                const bool ok = fresh.at("ok").get<bool>();
                return Result{{{"replayed", replay}, {"identical", same}, {"ok", ok}}, same && ok ? 0 : 1};
            }
            vo.primes = parse_primes(primes);
            json report = verify(vo);
            const bool ok = report.at("ok").get<bool>();
            return Result{report, ok ? 0 : 1};
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "monocat: " << e.what() << "\n";
        return 2;
    }

    Result r;
    try {
        r = action();
    } catch (const InternalError& e) {
        err << "monocat: internal check failed: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << "monocat: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "monocat: malformed input: " << e.what() << "\n";
        return 2;
    }

    const std::string text = r.doc.dump(pretty ? 2 : -1) + "\n";
    if (out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(out_file);
        if (!f) {
            err << "monocat: cannot write '" << out_file << "'\n";
            return 2;
        }
        f << text;
    }
    return r.code;
}

} // namespace monocat
