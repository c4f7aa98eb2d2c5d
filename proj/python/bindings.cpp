#include <cstdint>
#include <functional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "jamesloop/acceptance.hpp"
#include "jamesloop/errors.hpp"
#include "jamesloop/homology.hpp"
#include "jamesloop/io.hpp"
#include "jamesloop/james.hpp"
#include "jamesloop/loop_algebra.hpp"
#include "jamesloop/straightening.hpp"
#include "jamesloop/suspension_paths.hpp"

namespace py = pybind11;
using namespace jamesloop;

// Documents cross the boundary as JSON text; the Python package wraps them in dicts.
namespace
{

CubicalSet complex_of(const std::string& text)
{
    return complex_from_json(Json::parse(text));
}

SuspensionSpace space_of(const std::string& text)
{
    CubicalSet base = complex_of(text);
    if (!validate(base).empty())
        throw DomainError("the complex violates the cubical relations");
    return SuspensionSpace(std::move(base));
}

MoorePath loop_of(const SuspensionSpace& space, const std::string& text)
{
    MoorePath p = path_from_json(Json::parse(text), space.base());
    if (!space.verify_directed(p, XStructure::total))
        throw DomainError("the path is not directed");
    return p;
}

Json frames(const std::vector<MoorePath>& paths)
{
    Json arr = Json::array();
    for (const auto& p : paths)
        arr.push_back(to_json(p));
    return arr;
}

std::string wrap_json(const std::function<Json()>& body)
{
    try
    {
        return body().dump();
    }
    catch (const Json::exception& e)
    {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Directed loops on directed suspensions of cubical complexes";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

    m.def("validate", [](const std::string& complex) {
        return wrap_json([&] {
            auto report = validate(complex_of(complex));
            return Json{{"valid", report.empty()}, {"violations", to_json(report)}};
        });
    });

    m.def(
        "homology",
        [](const std::string& complex, const std::string& field, bool reduced_dims) {
            return wrap_json([&] {
                FieldSpec f = parse_field(field);
                CubicalSet c = space_of(complex).base();
                GradedDims dims = betti(c, f);
                return to_json(reduced_dims ? reduced(dims) : dims);
            });
        },
        py::arg("complex"), py::arg("field") = "q", py::arg("reduced") = false);

    m.def(
        "loop_homology",
        [](const std::string& complex, const std::string& field, int degree) {
            return wrap_json([&] {
                FieldSpec f = parse_field(field);
                return to_json(loop_space_homology(space_of(complex).base(), f, degree));
            });
        },
        py::arg("complex"), py::arg("field") = "q", py::arg("degree") = 10);

    m.def("suspension", [](const std::string& complex) {
        return wrap_json([&] {
            SuspensionModel model = suspension_model(space_of(complex).base());
            return Json{{"complex", to_json(model.complex)},
                        {"minus", to_json(model.minus)},
                        {"plus", to_json(model.plus)},
                        {"star", model.star}};
        });
    });

    m.def("sec", [](const std::string& path, const std::string& complex) {
        return wrap_json([&] {
            SuspensionSpace space = space_of(complex);
            return to_json(sec(space, loop_of(space, path)));
        });
    });

    m.def(
        "make_increasing",
        [](const std::string& path, const std::string& complex, const std::string& epsilon) {
            return wrap_json([&] {
                SuspensionSpace space = space_of(complex);
                return to_json(space.make_increasing(loop_of(space, path), parse_rational(epsilon)));
            });
        },
        py::arg("path"), py::arg("complex"), py::arg("epsilon") = "1/4");

    m.def("j_beta_prime", [](const std::string& word, const std::string& complex) {
        return wrap_json([&] {
            SuspensionSpace space = space_of(complex);
            return to_json(j_beta_prime(space, xprime_word_from_json(Json::parse(word), space.base())));
        });
    });

    m.def(
        "evaluate",
        [](const std::string& path, const std::string& complex, const std::string& time) {
            return wrap_json([&] {
                SuspensionSpace space = space_of(complex);
                return to_json(space.evaluate(loop_of(space, path), parse_rational(time)));
            });
        },
        py::arg("path"), py::arg("complex"), py::arg("time"));

    m.def(
        "straighten",
        [](const std::string& path, const std::string& complex, int samples) {
            return wrap_json([&] {
                SuspensionSpace space = space_of(complex);
                MoorePath loop = loop_of(space, path);
                StraightenResult r = full_straighten(space, loop, uniform_samples(samples));
                return Json{{"result", to_json(r.result)},
                            {"frames", frames(r.frames)},
                            {"sec", to_json(sec(space, loop))}};
            });
        },
        py::arg("path"), py::arg("complex"), py::arg("samples") = 5);

    m.def("contract", [](const std::string& path, const std::string& complex) {
        return wrap_json([&] {
            SuspensionSpace space = space_of(complex);
            return Json{{"frames", frames(contract_to_constant(space, loop_of(space, path)))}};
        });
    });

    m.def(
        "selftest",
        [](std::uint64_t seed) {
            py::list out;
            for (const CriterionResult& r : run_acceptance(seed))
            {
                py::dict d;
                d["number"] = r.number;
                d["name"] = r.name;
                d["passed"] = r.passed;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("seed") = default_seed);
}
