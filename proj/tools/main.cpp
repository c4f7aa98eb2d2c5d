#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "jamesloop/acceptance.hpp"
#include "jamesloop/errors.hpp"
#include "jamesloop/homology.hpp"
#include "jamesloop/io.hpp"
#include "jamesloop/james.hpp"
#include "jamesloop/loop_algebra.hpp"
#include "jamesloop/straightening.hpp"
#include "jamesloop/suspension_paths.hpp"

using namespace jamesloop;

namespace
{

// Options shared by the subcommands.
struct RunConfig
{
    std::string field = "q";
    int degree = 10;
    std::string epsilon = "1/4";
    int samples = 5;
    std::string x_structure = "directed";
    std::uint64_t seed = default_seed;
};

struct Inputs
{
    std::string input;
    std::string complex;
    bool reduced = false;
    bool contract = false;
    std::string time = "0";
    std::string sign = "minus";
    std::string t = "1";
    std::optional<std::string> delta;
    std::optional<std::string> moore;
};

void emit(const Json& doc)
{
    std::cout << doc.dump() << "\n";
}

CubicalSet load_complex(const std::string& path)
{
    return complex_from_json(load_json_file(path));
}

void require_valid(const CubicalSet& complex)
{
    auto report = validate(complex);
    if (!report.empty())
        throw DomainError("the complex violates the cubical relations (first at cube \"" +
                          report.front().cube + "\", i=" + std::to_string(report.front().i) +
                          ", j=" + std::to_string(report.front().j) + ")");
}

SuspensionSpace load_space(const std::string& path)
{
    CubicalSet base = load_complex(path);
    require_valid(base);
    return SuspensionSpace(std::move(base));
}

MoorePath load_path(const SuspensionSpace& space, const std::string& path)
{
    MoorePath p = path_from_json(load_json_file(path), space.base());
    if (!space.verify_directed(p, XStructure::total))
        throw DomainError("the path is not directed: segments must join up and heights must "
                          "be nondecreasing");
    return p;
}

XStructure parse_structure(const std::string& text)
{
    if (text == "directed")
        return XStructure::directed;
    if (text == "total")
        return XStructure::total;
    throw ParseError("--x-structure must be \"directed\" or \"total\"");
}

Json endpoint_json(const EndpointInfo& info)
{
    static const char* labels[] = {"star", "L_zero", "L_minus", "L_plus"};
    return Json{{"class", labels[static_cast<int>(info.label)]},
                {"in_minus", info.in_minus},
                {"in_plus", info.in_plus},
                {"in_zero", info.in_zero},
                {"end", to_json(info.end)}};
}

Json frames_json(const std::vector<MoorePath>& frames)
{
    Json arr = Json::array();
    for (const MoorePath& f : frames)
        arr.push_back(to_json(f));
    return arr;
}

using Action = std::function<void()>;

// Registers one path operation under `parent` as `name`.
void add_path_op(CLI::App& parent, const std::string& name, const std::string& op, Inputs& in,
                 RunConfig& cfg, Action& action)
{
    auto* sub = parent.add_subcommand(name, "path " + op);
    sub->add_option("path", in.input, "Path JSON file")->required();
    sub->add_option("--complex", in.complex, "Base complex JSON file")->required();

    if (op == "eval")
    {
        sub->description("Evaluate a path at a time");
        sub->add_option("--time", in.time, "Time in [0, duration]")->required();
        sub->callback([&] {
            action = [&] {
                SuspensionSpace space = load_space(in.complex);
                MoorePath p = load_path(space, in.input);
                emit(Json{{"point", to_json(space.evaluate(p, parse_rational(in.time)))}});
            };
        });
    }
    else if (op == "verify")
    {
        sub->description("Check directedness, loop and strict-increase predicates");
        sub->add_option("--x-structure", cfg.x_structure, "directed or total")
            ->capture_default_str();
        sub->callback([&] {
            action = [&] {
                SuspensionSpace space = load_space(in.complex);
                MoorePath p = path_from_json(load_json_file(in.input), space.base());
                bool directed = space.verify_directed(p, parse_structure(cfg.x_structure));
                Json out{{"directed", directed}, {"duration", format_rational(p.duration())}};
                if (directed)
                {
                    out["loop"] = space.is_loop(p);
                    out["strictly_increasing"] = space.is_strictly_increasing(p);
                    out["endpoint"] = endpoint_json(space.classify_endpoint(p));
                }
                emit(out);
            };
        });
    }
    else if (op == "phi")
    {
        sub->description("Apply the height shift phi^-_t or phi^+_t");
        sub->add_option("--sign", in.sign, "minus or plus")->capture_default_str();
        sub->add_option("--t", in.t, "Homotopy parameter in [0,1]")->capture_default_str();
        sub->callback([&] {
            action = [&] {
                SuspensionSpace space = load_space(in.complex);
                MoorePath p = load_path(space, in.input);
                if (in.sign != "minus" && in.sign != "plus")
                    throw ParseError("--sign must be \"minus\" or \"plus\"");
                Rational t = parse_rational(in.t);
                if (t < 0 || t > 1)
                    throw DomainError("--t must lie in [0,1]");
                emit(to_json(space.apply_phi(p, in.sign == "minus" ? Sign::minus : Sign::plus, t)));
            };
        });
    }
    else if (op == "increase")
    {
        sub->description("Make a directed loop strictly increasing");
        sub->add_option("--epsilon", cfg.epsilon, "Tilt in (0,1)")->capture_default_str();
        sub->callback([&] {
            action = [&] {
                SuspensionSpace space = load_space(in.complex);
                MoorePath p = load_path(space, in.input);
                emit(to_json(space.make_increasing(p, parse_rational(cfg.epsilon))));
            };
        });
    }
    else if (op == "truncate")
    {
        sub->description("Replace excursions near * by *, or cut a Moore path at a fraction");
        sub->add_option("--delta", in.delta, "Height threshold: |h| > 1 - delta counts as near *");
        sub->add_option("--moore", in.moore, "Keep the initial fraction s of the path instead");
        sub->callback([&] {
            action = [&] {
                SuspensionSpace space = load_space(in.complex);
                MoorePath p = load_path(space, in.input);
                if (in.delta && in.moore)
                    throw ParseError("--delta and --moore are exclusive");
                if (in.moore)
                    emit(to_json(space.truncate_moore(p, parse_rational(*in.moore))));
                else if (in.delta)
                    emit(to_json(space.truncate_near_basepoint(
                        p, HeightThreshold{parse_rational(*in.delta)})));
                else
                    emit(to_json(space.truncate_near_basepoint(p, ModelNeighborhood{})));
            };
        });
    }
    else if (op == "jbeta")
    {
        sub->description("Build J(beta') of a word; letters may be {\"interval\":\"t\"}");
        sub->callback([&] {
            action = [&] {
                SuspensionSpace space = load_space(in.complex);
                auto word = xprime_word_from_json(load_json_file(in.input), space.base());
                emit(to_json(j_beta_prime(space, word)));
            };
        });
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Directed loops on directed suspensions of cubical complexes"};
    app.require_subcommand(1);
    RunConfig cfg;
    Inputs in;
    Action action;

    auto* validate_cmd = app.add_subcommand("validate", "Check the cubical relations");
    validate_cmd->add_option("complex", in.input, "Complex JSON file")->required();
    validate_cmd->callback([&] {
        action = [&] {
            CubicalSet complex = load_complex(in.input);
            auto report = validate(complex);
            emit(Json{{"valid", report.empty()}, {"violations", to_json(report)}});
        };
    });

    auto* homology_cmd = app.add_subcommand("homology", "Homology dimensions over a field");
    homology_cmd->add_option("complex", in.input, "Complex JSON file")->required();
    homology_cmd->add_option("--field", cfg.field, "q or zp:<p>")->capture_default_str();
    homology_cmd->add_flag("--reduced", in.reduced, "Reduced homology");
    homology_cmd->callback([&] {
        action = [&] {
            FieldSpec field = parse_field(cfg.field);
            CubicalSet complex = load_complex(in.input);
            require_valid(complex);
            GradedDims dims = betti(complex, field);
            emit(to_json(in.reduced ? reduced(dims) : dims));
        };
    });

    auto* suspension_cmd =
        app.add_subcommand("suspension", "Cubical model of the directed suspension");
    suspension_cmd->add_option("complex", in.input, "Complex JSON file")->required();
    suspension_cmd->callback([&] {
        action = [&] {
            CubicalSet complex = load_complex(in.input);
            require_valid(complex);
            SuspensionModel model = suspension_model(complex);
            emit(Json{{"complex", to_json(model.complex)},
                      {"minus", to_json(model.minus)},
                      {"plus", to_json(model.plus)},
                      {"star", model.star}});
        };
    });

    auto* loop_cmd =
        app.add_subcommand("loop-homology", "Homology of the directed loop space of the suspension");
    loop_cmd->add_option("complex", in.input, "Complex JSON file")->required();
    loop_cmd->add_option("--field", cfg.field, "q or zp:<p>")->capture_default_str();
    loop_cmd->add_option("--degree", cfg.degree, "Highest degree")
        ->capture_default_str()
        ->check(CLI::NonNegativeNumber);
    loop_cmd->callback([&] {
        action = [&] {
            FieldSpec field = parse_field(cfg.field);
            CubicalSet complex = load_complex(in.input);
            require_valid(complex);
            emit(to_json(loop_space_homology(complex, field, cfg.degree)));
        };
    });

    auto* sec_cmd = app.add_subcommand("sec", "Read the James word of a directed loop");
    sec_cmd->add_option("path", in.input, "Loop JSON file")->required();
    sec_cmd->add_option("--complex", in.complex, "Base complex JSON file")->required();
    sec_cmd->callback([&] {
        action = [&] {
            SuspensionSpace space = load_space(in.complex);
            emit(to_json(sec(space, load_path(space, in.input))));
        };
    });

    auto* straighten_cmd =
        app.add_subcommand("straighten", "Deform a strictly increasing loop to J(beta') form");
    straighten_cmd->add_option("path", in.input, "Loop JSON file")->required();
    straighten_cmd->add_option("--complex", in.complex, "Base complex JSON file")->required();
    straighten_cmd->add_option("--samples", cfg.samples, "Number of evenly spaced frames")
        ->capture_default_str()
        ->check(CLI::Range(2, 1000));
    straighten_cmd->add_flag("--contract", in.contract, "Also contract to the constant loop");
    straighten_cmd->callback([&] {
        action = [&] {
            SuspensionSpace space = load_space(in.complex);
            MoorePath loop = load_path(space, in.input);
            StraightenResult res = full_straighten(space, loop, uniform_samples(cfg.samples));
            Json out{{"result", to_json(res.result)},
                     {"frames", frames_json(res.frames)},
                     {"sec", to_json(sec(space, loop))}};
            if (in.contract)
                out["contraction"] = frames_json(contract_to_constant(space, loop));
            emit(out);
        };
    });

    auto* contract_cmd =
        app.add_subcommand("contract", "Discrete homotopy from a loop to the constant loop");
    contract_cmd->add_option("path", in.input, "Loop JSON file")->required();
    contract_cmd->add_option("--complex", in.complex, "Base complex JSON file")->required();
    contract_cmd->callback([&] {
        action = [&] {
            SuspensionSpace space = load_space(in.complex);
            emit(Json{{"frames",
                       frames_json(contract_to_constant(space, load_path(space, in.input)))}});
        };
    });

    const std::vector<std::string> path_ops{"eval", "verify", "phi", "increase", "truncate", "jbeta"};
    auto* path_cmd = app.add_subcommand("path", "Operations on PL Moore paths");
    path_cmd->require_subcommand(1);
    for (const std::string& op : path_ops)
    {
        add_path_op(*path_cmd, op, op, in, cfg, action);
        add_path_op(app, "path-" + op, op, in, cfg, action);
    }

    bool all_passed = true;
    auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");
    selftest_cmd->add_option("--seed", cfg.seed, "Corpus seed")->capture_default_str();
    selftest_cmd->callback([&] {
        action = [&] {
            auto results = run_acceptance(cfg.seed);
            std::cout << format_report(results);
            for (const auto& r : results)
                all_passed = all_passed && r.passed;
        };
    });

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp& e)
    {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e)
    {
        app.exit(e);
        return 2;
    }

    try
    {
        action();
    }
    catch (const ParseError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const DomainError& e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return all_passed ? 0 : 1;
}
