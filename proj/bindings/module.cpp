#include "surfcount/closed.hpp"
#include "surfcount/engine.hpp"
#include "surfcount/fit.hpp"
#include "surfcount/oracles.hpp"
#include "surfcount/series.hpp"
#include "surfcount/sums.hpp"
#include "surfcount/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace surfcount;

namespace {

// Exact values cross the boundary as Python int and fractions.Fraction.
py::object to_py(const Integer& v) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(v.get_str().c_str(), nullptr, 10));
}

py::object to_py(const Rational& v) {
    static py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py(Integer(v.get_num())), to_py(Integer(v.get_den())));
}

py::dict fit_dict(const FitReport& r) {
    py::dict d;
    d["json"] = r.to_json();
    d["degree"] = r.degree;
    d["validated"] = r.validation.size();
    bool gvars = r.target == FitTarget::Gpoly || r.target == FitTarget::GpolyRefined;
    d["polynomial"] = r.poly().to_string(var_names(gvars ? "m" : "b", r.branches.nvars));
    return d;
}

}  // namespace

PYBIND11_MODULE(_surfcount, m) {
    m.doc() = "Exact counts of arc diagrams on surfaces with boundary";

    py::register_exception<Unsupported>(m, "Unsupported");

    py::class_<Engine>(m, "Engine")
        .def(py::init<>())
        .def("G", [](Engine& e, int g, std::vector<long> b) { return to_py(e.G(g, std::move(b))); })
        .def("N", [](Engine& e, int g, std::vector<long> b) { return to_py(e.N(g, std::move(b))); })
        .def("G_r", [](Engine& e, int g, std::vector<long> b, long r) { return to_py(e.G_r(g, std::move(b), r)); })
        .def("G_t", [](Engine& e, int g, std::vector<long> b, long t) { return to_py(e.G_t(g, b, t)); })
        .def("N_t", [](Engine& e, int g, std::vector<long> b, long t) { return to_py(e.N_t(g, std::move(b), t)); })
        .def("N_r", [](Engine& e, int g, std::vector<long> b, long r) { return to_py(e.N_r(g, std::move(b), r)); })
        .def("lattice", [](Engine& e, int g, std::vector<long> b) { return to_py(e.lattice(g, std::move(b))); })
        .def("convolve_G_from_N",
             [](Engine& e, int g, std::vector<long> b) { return to_py(e.convolve_G_from_N(g, b)); })
        .def("memo_size", &Engine::memo_size)
        .def("clear", &Engine::clear)
        .def("save_cache", &Engine::save_cache)
        .def("load_cache", [](Engine& e, const std::string& path) { return e.load_cache(path); });

    m.def("catalan", [](long k) { return to_py(catalan(k)); });
    m.def("closed_G", [](int g, int n, std::vector<long> b) { return to_py(closed_G(g, n, b)); });
    m.def("closed_N", [](int g, int n, std::vector<long> b) { return to_py(closed_N(g, n, b)); });

    m.def("sum_direct", [](const std::string& family, int i, int j, long k) {
        return to_py(sum_direct({parse_family(family), i, j}, k));
    });
    m.def(
        "fit_sum",
        [](const std::string& family, int i, int j) {
            QuasiPoly q = fit_sum({parse_family(family), i, j});
            py::dict d;
            for (const auto& [sig, p] : q.branches) d[py::str(sig)] = p.to_string({"k"});
            return d;
        },
        py::arg("family"), py::arg("m"), py::arg("n") = 0);

    m.def(
        "fit_nhat",
        [](Engine& e, int g, int n, const std::string& parity, int threads) {
            FitOptions opt;
            opt.threads = threads;
            return fit_dict(fit_Nhat(e, g, n, parse_parity(parity, n), opt));
        },
        py::arg("engine"), py::arg("g"), py::arg("n"), py::arg("parity"), py::arg("threads") = 1);
    m.def(
        "fit_g_poly",
        [](Engine& e, int g, int n, const std::string& parity, std::optional<long> t) {
            return fit_dict(fit_G_poly(e, g, n, parse_parity(parity, n), t));
        },
        py::arg("engine"), py::arg("g"), py::arg("n"), py::arg("parity"), py::arg("t") = py::none());
    m.def("extract_psi", [](Engine& e, int g, int n) {
        py::list out;
        for (const auto& v : extract_psi(e, g, n)) out.append(py::make_tuple(py::cast(v.d), to_py(v.value)));
        return out;
    });

    m.def(
        "series_json",
        [](Engine& e, const std::string& which, int g, int n, int order, std::optional<long> t) {
            if (which == "fN") return build_fN(e, g, n, order, t).to_json();
            if (which == "fG") return build_fG(e, g, n, order, t).to_json();
            if (which == "pullback") return pullback_check(e, g, n, order, t).to_json();
            throw std::invalid_argument("which must be fN, fG or pullback");
        },
        py::arg("engine"), py::arg("which"), py::arg("g"), py::arg("n"), py::arg("order"), py::arg("t") = py::none());
    m.def("closed_form_names", &closed_form_names);
    m.def("closed_form_matches", [](Engine& e, const std::string& name, int order) {
        return expand_closed_form(name, order) == closed_form_counterpart(e, name, order);
    });

    m.def("disc_matchings", [](int k) {
        py::list out;
        for (const auto& x : enumerate_disc(k)) out.append(x.pairs);
        return out;
    });
    m.def("pants_search", [](long b1, long b2, long b3) {
        py::list out;
        for (const auto& p : pants_search(b1, b2, b3)) out.append(p.to_string());
        return out;
    });

    m.def("suite_names", &suite_names);
    m.def(
        "run_suite",
        [](const std::string& name, int threads) {
            Engine e;
            VerifyOptions opt;
            opt.threads = threads;
            SuiteReport rep = run_suite(name, e, opt);
            py::list out;
            for (const auto& r : rep.results) {
                py::dict d;
                d["id"] = r.id;
                d["criterion"] = r.criterion;
                d["pass"] = r.pass;
                d["detail"] = r.detail;
                out.append(d);
            }
            return out;
        },
        py::arg("name"), py::arg("threads") = 1);
}
