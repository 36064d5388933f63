#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bsf/aim.hpp"
#include "bsf/catalog.hpp"
#include "bsf/cli.hpp"
#include "bsf/error.hpp"
#include "bsf/formula.hpp"
#include "bsf/shooting.hpp"

namespace py = pybind11;
using namespace bsf;

namespace {

struct Bound {
    const ModelSpec* spec;
    ParameterSet params;
    QuantumNumbers qn;
};

Bound bind_model(const std::string& model, int n, double l, const ParameterSet& params, std::optional<int> m,
                 std::optional<double> j) {
    const auto& spec = find_model(model);
    auto p = spec.resolve(params);
    auto qn = spec.prepare(p, QuantumNumbers{n, l, m, j});
    return {&spec, p, qn};
}

py::dict to_dict(const EigenResult& r) {
    py::dict d;
    d["value"] = r.value;
    d["n"] = r.n;
    d["engine"] = to_string(r.engine);
    if (r.params) {
        d["k4"] = r.params->k4;
        d["k5"] = r.params->k5;
    } else {
        d["k4"] = py::none();
        d["k5"] = py::none();
    }
    d["residual_formula"] = r.residual_formula;
    d["residual_ode"] = r.residual_ode;
    d["node_count"] = r.node_count ? py::cast(*r.node_count) : py::none();
    return d;
}

}  // namespace

PYBIND11_MODULE(bsf, mod) {
    mod.doc() = "Bound-state spectra of exactly solvable wave equations";

    static py::exception<Error> error(mod, "BsfError", PyExc_RuntimeError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            py::object exc = error;
            py::object inst = exc(e.what());
            inst.attr("kind") = std::string(to_string(e.kind()));
            PyErr_SetObject(error.ptr(), inst.ptr());
        }
    });

    mod.def("catalog", [] {
        py::list out;
        for (const auto& m : catalog_list()) {
            py::dict d;
            d["id"] = m.id;
            d["description"] = m.description;
            d["equation"] = to_string(m.kind);
            d["unknown"] = m.unknown_name;
            d["parameters"] = m.defaults();
            d["closed_form"] = m.has_closed_form();
            out.append(d);
        }
        return out;
    });

    mod.def(
        "solve",
        [](const std::string& model, int n, double l, const ParameterSet& params, std::optional<int> m,
           std::optional<double> j, const std::string& engine) {
            const auto b = bind_model(model, n, l, params, m, j);
            const auto map = b.spec->bind(b.params, b.qn);
            const auto unknown = b.spec->unknown(b.params, b.qn);
            py::list out;
            if (engine == "formula") {
                for (const auto& r : solve_eigenvalue(map, unknown, n)) out.append(to_dict(r));
            } else if (engine == "aim") {
                out.append(to_dict(aim_solve(map, unknown, n)));
            } else if (engine == "shooting") {
                const auto rp = b.spec->radial_problem(b.params, b.qn, Centrifugal::Approximated);
                if (!rp) throw Error(ErrorKind::InvalidArgument, "no radial problem for " + model);
                const auto [lo, hi] = b.spec->shooting_bracket(b.params, b.qn);
                out.append(to_dict(shoot_eigenvalue(*rp, n, lo, hi)));
            } else {
                throw Error(ErrorKind::InvalidArgument, "unknown engine '" + engine + "'");
            }
            return out;
        },
        py::arg("model"), py::arg("n") = 0, py::arg("l") = 0.0, py::arg("params") = ParameterSet{},
        py::arg("m") = py::none(), py::arg("j") = py::none(), py::arg("engine") = "formula");

    mod.def(
        "closed_form",
        [](const std::string& model, int n, double l, const ParameterSet& params, std::optional<int> m,
           std::optional<double> j) -> std::optional<double> {
            const auto b = bind_model(model, n, l, params, m, j);
            if (!b.spec->has_closed_form()) return std::nullopt;
            return b.spec->closed_form(b.params, b.qn);
        },
        py::arg("model"), py::arg("n") = 0, py::arg("l") = 0.0, py::arg("params") = ParameterSet{},
        py::arg("m") = py::none(), py::arg("j") = py::none());

    mod.def(
        "wavefunction",
        [](const std::string& model, const std::vector<double>& r, int n, double l, const ParameterSet& params,
           std::optional<int> m, std::optional<double> j) {
            const auto b = bind_model(model, n, l, params, m, j);
            const auto root = solve_eigenvalue(b.spec->bind(b.params, b.qn), b.spec->unknown(b.params, b.qn), n).front();
            const auto psi = build_wavefunction(b.spec->coefficients(root.value, b.params, b.qn), *root.params, n);
            std::vector<double> out;
            out.reserve(r.size());
            for (double x : r) out.push_back(psi(b.spec->to_s(x, b.params)));
            return out;
        },
        py::arg("model"), py::arg("r"), py::arg("n") = 0, py::arg("l") = 0.0, py::arg("params") = ParameterSet{},
        py::arg("m") = py::none(), py::arg("j") = py::none(),
        "Unnormalized wavefunction at the radii r.");

    mod.def(
        "normalize",
        [](const std::vector<double>& r, const std::vector<double>& values, const std::string& measure) {
            const auto res = normalize(r, values, measure == "r2dr" ? Measure::R2DR : Measure::DR);
            return py::make_tuple(res.values, res.constant);
        },
        py::arg("r"), py::arg("values"), py::arg("measure") = "dr");

    mod.def(
        "effective_l_noncentral", &effective_l_noncentral, py::arg("m"), py::arg("beta"), py::arg("gamma"),
        py::arg("n_theta"));

    mod.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "bsf");
            std::vector<const char*> argv;
            for (const auto& a : args) argv.push_back(a.c_str());
            std::ostringstream out, err;
            const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command-line front end; returns (exit_code, stdout, stderr).");
}
