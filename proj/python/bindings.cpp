// Python bindings. Ring elements cross the boundary as their canonical
// literals ("3", "(1,0)", "2+1i", "[[1,0],[0,1]]", table names).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cychom/cohomology.hpp"
#include "cychom/commands.hpp"
#include "cychom/concrete_rings.hpp"
#include "cychom/errors.hpp"
#include "cychom/operators.hpp"
#include "cychom/sampling.hpp"

namespace py = pybind11;
using namespace cychom;

namespace {

struct py_ring {
    ring_instance ring;

    ring_element el(const std::string& s) const { return ring.parse_element(s); }
    std::string str(const ring_element& e) const { return ring.format(e); }
};

py::dict summary_dict(const quotient_summary& q) {
    py::dict census;
    for (const auto& [ord, count] : q.census) census[py::int_(ord)] = count;
    py::dict d;
    d["order"] = q.order;
    d["census"] = census;
    return d;
}

run_options options(std::uint64_t seed, std::uint64_t max_enumerate) {
    run_options o;
    o.seed = seed;
    o.max_enumerate = max_enumerate;
    return o;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Cyclic-action ring identities, homotopies and Tate quotients";
    m.attr("__version__") = tool_version;
    m.attr("DEFAULT_SEED") = default_seed;

    auto base = py::register_exception<error>(m, "CychomError", PyExc_RuntimeError);
    py::register_exception<input_error>(m, "InputError", base.ptr());
    py::register_exception<math_error>(m, "MathError", base.ptr());

    py::enum_<family>(m, "Family").value("X", family::X).value("A", family::A);

    py::class_<free_poly>(m, "FreePoly")
        .def(py::init<int>(), py::arg("n"))
        .def_static("parse", &free_poly::parse, py::arg("text"), py::arg("n"))
        .def_static("generator", &free_poly::generator, py::arg("family"), py::arg("index"), py::arg("n"))
        .def_static("one", &free_poly::one, py::arg("n"))
        .def_property_readonly("n", &free_poly::n)
        .def("is_zero", &free_poly::is_zero)
        .def("term_count", &free_poly::term_count)
        .def("shifted", &free_poly::shifted, py::arg("k"))
        .def("__add__", [](const free_poly& a, const free_poly& b) { return a + b; })
        .def("__sub__", [](const free_poly& a, const free_poly& b) { return a - b; })
        .def("__mul__", [](const free_poly& a, const free_poly& b) { return a * b; })
        .def("__mul__", [](const free_poly& a, long long c) { return a * integer(c); })
        .def("__rmul__", [](const free_poly& a, long long c) { return a * integer(c); })
        .def("__neg__", [](const free_poly& a) { return -a; })
        .def("__eq__", [](const free_poly& a, const free_poly& b) { return a == b; })
        .def("__str__", &free_poly::to_string)
        .def("__repr__", [](const free_poly& p) { return "FreePoly(" + p.to_string() + ")"; });

    py::class_<verification_report>(m, "Report")
        .def_readonly("campaign", &verification_report::campaign)
        .def_property_readonly("passed", &verification_report::passed)
        .def_property_readonly("failed", &verification_report::failed)
        .def_property_readonly("all_passed", &verification_report::all_passed)
        .def("text", &verification_report::to_text)
        .def("json", [](const verification_report& r) { return r.to_json().dump(2); });

    py::class_<command_outcome>(m, "Outcome")
        .def_readonly("report", &command_outcome::report)
        .def_readonly("exit_code", &command_outcome::exit_code);

    m.def(
        "verify_universal",
        [](int n_min, int n_max, std::vector<std::string> checks, int max_n) {
            run_options o;
            o.max_n = max_n;
            return cmd_verify_universal(n_min, n_max, std::move(checks), o);
        },
        py::arg("n_min") = 2, py::arg("n_max") = 8, py::arg("checks") = std::vector<std::string>{},
        py::arg("max_n") = 8);

    m.def(
        "ring_verify",
        [](const std::string& spec, std::vector<std::string> checks, std::optional<std::string> x,
           std::uint64_t seed, std::uint64_t cap) {
            return cmd_ring_verify(ring_spec::parse(spec), std::move(checks), x, options(seed, cap));
        },
        py::arg("spec"), py::arg("checks") = std::vector<std::string>{}, py::arg("x") = py::none(),
        py::arg("seed") = default_seed, py::arg("max_enumerate") = default_enumerate_cap);

    m.def(
        "cohomology",
        [](const std::string& spec, std::uint64_t cap) {
            return cmd_cohomology(ring_spec::parse(spec), options(default_seed, cap));
        },
        py::arg("spec"), py::arg("max_enumerate") = default_enumerate_cap);

    m.def(
        "special_case",
        [](const std::string& spec) { return cmd_special_case(ring_spec::parse(spec), run_options{}); },
        py::arg("spec"));

    py::class_<py_ring>(m, "Ring")
        .def(py::init([](const std::string& spec) { return py_ring{build_ring(ring_spec::parse(spec))}; }),
             py::arg("spec_json"))
        .def_static("load", [](const std::string& path) { return py_ring{build_ring(ring_spec::load(path))}; })
        .def_property_readonly("kind", [](const py_ring& r) { return std::string(to_string(r.ring.kind())); })
        .def_property_readonly("order", [](const py_ring& r) { return r.ring.order(); })
        .def_property_readonly("size", [](const py_ring& r) { return r.ring.size(); })
        .def("spec_json", [](const py_ring& r) { return r.ring.spec().to_json().dump(); })
        .def("elements",
             [](const py_ring& r, std::uint64_t cap) {
                 std::vector<std::string> out;
                 for (const auto& e : enumerate(r.ring, cap)) out.push_back(r.str(e));
                 return out;
             },
             py::arg("max_enumerate") = default_enumerate_cap)
        .def("canonical", [](const py_ring& r, const std::string& a) { return r.str(r.el(a)); })
        .def("zero", [](const py_ring& r) { return r.str(r.ring.zero()); })
        .def("one", [](const py_ring& r) { return r.str(r.ring.one()); })
        .def("add", [](const py_ring& r, const std::string& a, const std::string& b) {
            return r.str(r.ring.add(r.el(a), r.el(b)));
        })
        .def("mul", [](const py_ring& r, const std::string& a, const std::string& b) {
            return r.str(r.ring.mul(r.el(a), r.el(b)));
        })
        .def("t", [](const py_ring& r, const std::string& a) { return r.str(r.ring.act(r.el(a))); })
        .def("T", [](const py_ring& r, const std::string& a) { return r.str(op_T(r.ring, r.el(a))); })
        .def("N", [](const py_ring& r, const std::string& a) { return r.str(op_N(r.ring, r.el(a))); })
        .def("h", [](const py_ring& r, const std::string& x, const std::string& a) {
            return r.str(op_hx(r.ring, r.el(x), r.el(a)));
        })
        .def("hp", [](const py_ring& r, const std::string& x, const std::string& a) {
            return r.str(op_hpx(r.ring, r.el(x), r.el(a)));
        })
        .def("find_norm_one",
             [](const py_ring& r) -> std::optional<std::string> {
                 auto x = find_norm_one(r.ring);
                 if (!x) return std::nullopt;
                 return r.str(*x);
             })
        .def("norm_preimage", [](const py_ring& r, const std::string& x, const std::string& a) {
            return r.str(norm_preimage(r.ring, r.el(x), r.el(a)));
        })
        .def("t_preimage",
             [](const py_ring& r, const std::string& x, const std::string& a) {
                 auto [h, hp] = t_preimage(r.ring, r.el(x), r.el(a));
                 return std::make_pair(r.str(h), r.str(hp));
             })
        .def("check_homotopy",
             [](const py_ring& r, const std::string& x) {
                 const auto samples = draw_samples(r.ring, sample_policy{});
                 return check_homotopy(r.ring, r.el(x), std::span<const ring_element>(samples.elements)).pass;
             })
        .def("tate",
             [](const py_ring& r, std::uint64_t cap) {
                 const auto rep = tate_quotients(r.ring, cap);
                 py::dict d;
                 d["even"] = summary_dict(rep.even);
                 d["odd"] = summary_dict(rep.odd);
                 d["vanishing"] = rep.vanishing();
                 d["norm_one"] = rep.norm_one ? py::object(py::str(r.str(*rep.norm_one))) : py::object(py::none());
                 d["invariants_order"] = rep.invariants_order;
                 d["coinvariants_order"] = rep.coinvariants_order;
                 return d;
             },
             py::arg("max_enumerate") = default_enumerate_cap)
        .def("__repr__", [](const py_ring& r) { return "Ring(" + r.ring.describe() + ")"; });
}
