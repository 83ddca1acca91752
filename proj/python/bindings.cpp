#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fpl/cli.hpp"
#include "fpl/fusion.hpp"
#include "fpl/grassmannian.hpp"

namespace py = pybind11;
using namespace fpl;

namespace {

Field field_arg(const std::string& name) { return parse_field(name); }

py::dict report_dict(const PotentialReport& r) {
    py::dict d;
    d["functional"] = std::string(to_string(r.functional));
    d["value"] = r.value;
    d["bound"] = r.bound;
    d["meets_bound"] = r.meets_bound;
    d["equality_within"] = r.equality_within;
    return d;
}

FusionFrame fusion_arg(const std::vector<Matrix>& bases, const std::string& field) {
    return make_fusion_frame(bases, field_arg(field));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Finite frame potentials, dual frames and fusion frames";

    static py::exception<Error> fp_error(m, "FpError", PyExc_ValueError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const Error& e) {
            const std::string msg = e.what();
            if (is_input_error(e.code())) {
                py::set_error(fp_error, msg.c_str());
            } else {
                py::set_error(PyExc_RuntimeError, msg.c_str());
            }
        }
    });

    py::class_<Frame>(m, "Frame")
        .def(py::init([](const Matrix& synthesis, const std::string& field) {
                 return make_frame(synthesis, field_arg(field));
             }),
             py::arg("synthesis"), py::arg("field") = "real")
        .def_property_readonly("n", &Frame::n)
        .def_property_readonly("k", &Frame::k)
        .def_property_readonly("field", [](const Frame& f) { return std::string(to_string(f.field())); })
        .def_property_readonly("synthesis", &Frame::synthesis)
        .def_property_readonly("frame_operator", [](const Frame& f) { return f.frame_operator().S; })
        .def_property_readonly("bounds", [](const Frame& f) {
            return py::make_tuple(f.frame_operator().lower, f.frame_operator().upper);
        });

    m.def("canonical_dual", &canonical_dual, py::arg("frame"));
    m.def("is_dual", &is_dual, py::arg("frame"), py::arg("other"), py::arg("tol") = tol::dual);
    m.def("is_tight", py::overload_cast<const Frame&, double>(&is_tight), py::arg("frame"), py::arg("tol") = tol::tight);
    m.def("cross_gramian", [](const Frame& f, const Frame& g) { return cross_gramian(f, g).entries; });
    m.def("frame_potential", &frame_potential);
    m.def("frame_potential_bound", [](const Frame& f) { return report_dict(frame_potential_bound(f)); });
    m.def("cross_frame_potential", &cross_frame_potential);
    m.def("cross_potential_bound",
          [](const Frame& f, const Frame& h) { return report_dict(cross_potential_bound(f, h)); });
    m.def("pth_cross_potential", py::overload_cast<const Frame&, const Frame&, double>(&pth_cross_potential));
    m.def("pth_bound", &pth_bound, py::arg("n"), py::arg("k"), py::arg("p"));
    m.def("welch_constant", &welch_constant, py::arg("n"), py::arg("k"));
    m.def("max_offdiagonal", [](const Frame& f, const Frame& g) { return max_offdiagonal(cross_gramian(f, g)); });
    m.def("log_phi_offdiagonal",
          [](const Frame& f, const Frame& g, double eta) { return log_phi_offdiagonal(cross_gramian(f, g), eta); },
          py::arg("frame"), py::arg("other"), py::arg("eta"));

    m.def(
        "minimize_mu",
        [](const Frame& f, std::uint64_t seed) {
            SolverConfig config;
            config.seed = seed;
            const SearchResult r = minimize_mu(f, config);
            const ExclusivityEvidence e = exclusivity_probe(f, r);
            py::dict d;
            d["mu_min"] = r.mu_min;
            d["canonical_mu"] = r.canonical_mu;
            d["family_dim"] = r.family_dim;
            d["exclusive"] = e.exclusive;
            d["minimizer_dual"] = r.minimizer_dual ? py::cast(*r.minimizer_dual) : py::none();
            return d;
        },
        py::arg("frame"), py::arg("seed") = SolverConfig{}.seed);

    m.def(
        "conjecture_harness",
        [](Index n, Index k, std::uint64_t trials, std::uint64_t seed, double scale, bool canonical_only) {
            HarnessOptions options;
            options.param_scale = scale;
            options.canonical_only = canonical_only;
            HarnessSummary s;
            {
                py::gil_scoped_release release;
                s = conjecture_harness(n, k, trials, seed, options);
            }
            py::dict d;
            d["n"] = s.n;
            d["k"] = s.k;
            d["trials"] = s.trials;
            d["seed"] = s.seed;
            d["violations"] = s.violations;
            d["min_ratio"] = s.min_ratio;
            d["case_a_count"] = s.case_a_count;
            return d;
        },
        py::arg("n"), py::arg("k"), py::arg("trials"), py::arg("seed"), py::arg("scale") = 1.0,
        py::arg("canonical_only") = false);

    m.def(
        "fusion_potential",
        [](const std::vector<Matrix>& bases, const std::string& field) {
            return report_dict(fusion_potential(fusion_arg(bases, field)));
        },
        py::arg("bases"), py::arg("field") = "real");
    m.def(
        "cross_fusion_potential",
        [](const std::vector<Matrix>& p, const std::vector<Matrix>& q, const std::string& field) {
            return cross_fusion_potential(fusion_arg(p, field), fusion_arg(q, field));
        },
        py::arg("p"), py::arg("q"), py::arg("field") = "real");
    m.def(
        "canonical_dual_fusion",
        [](const std::vector<Matrix>& bases, const std::string& field) {
            const FusionFrame q = canonical_dual_fusion(fusion_arg(bases, field));
            std::vector<Matrix> out;
            for (const auto& s : q.subspaces()) out.push_back(s.basis());
            return out;
        },
        py::arg("bases"), py::arg("field") = "real");

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out;
            std::ostringstream err;
            const int code = cli::run(args, out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"));
}
