#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "origamikz/report.hpp"

namespace py = pybind11;
using namespace origamikz;

namespace {

std::string int_str(const Int& x) { return x.get_str(); }

py::list intmat_to_py(const IntMat& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) row.append(py::int_(py::str(m(i, j).get_str())));
        rows.append(row);
    }
    return rows;
}

py::list ratmat_to_py(const RatMat& m) {
    py::list rows;
    for (int i = 0; i < m.rows(); ++i) {
        py::list row;
        for (int j = 0; j < m.cols(); ++j) {
            const Rat& x = m(i, j);
            if (x.get_den() == 1)
                row.append(py::int_(py::str(x.get_num().get_str())));
            else {
                std::ostringstream os;
                os << x;
                row.append(py::str(os.str()));
            }
        }
        rows.append(row);
    }
    return rows;
}

Origami origami_from_args(const std::string& h, const std::string& v, int n) {
    if (n <= 0) {
        std::string text = "h = " + h + "\nv = " + v + "\n";
        return parse_origami_text(text);
    }
    return Origami(parse_cycles(h, n), parse_cycles(v, n));
}

}  // namespace

PYBIND11_MODULE(_origamikz, m) {
    m.doc() = "Veech groups, Kontsevich-Zorich monodromies and arithmeticity "
              "certificates of square-tiled surfaces";

    py::register_exception<Error>(m, "OrigamiError");

    py::class_<Origami>(m, "Origami")
        .def(py::init(&origami_from_args), py::arg("h"), py::arg("v"), py::arg("n") = 0)
        .def_property_readonly("degree", &Origami::degree)
        .def_property_readonly("h", [](const Origami& o) { return format_cycles(o.h()); })
        .def_property_readonly("v", [](const Origami& o) { return format_cycles(o.v()); })
        .def("__eq__", [](const Origami& a, const Origami& b) { return a == b; })
        .def("__repr__", [](const Origami& o) {
            return "Origami(h=\"" + format_cycles(o.h()) + "\", v=\"" + format_cycles(o.v()) +
                   "\", n=" + std::to_string(o.degree()) + ")";
        });

    m.def("family", &make_family, py::arg("name"), py::arg("params") = std::vector<long>{},
          "catalog origami by family name");
    m.def("family_names", &family_names);

    m.def("stratum", [](const Origami& o) {
        Stratum st = stratum(o);
        return py::make_tuple(st.zero_orders, st.genus);
    });
    m.def("is_reduced", &is_reduced);
    m.def("canonical_form", &canonical_form);
    m.def("monodromy", [](const Origami& o) {
        return std::string(to_string(monodromy_class({o.h(), o.v()}, o.degree())));
    });
    m.def("group_order", [](const Origami& o) {
        return py::int_(py::str(group_order({o.h(), o.v()}, o.degree()).get_str()));
    });
    m.def("hlk_invariant", [](const Origami& o) -> py::object {
        auto phi = anti_automorphism(o);
        if (!phi) return py::none();
        HLKInvariant inv = hlk_invariant(o, *phi);
        return py::make_tuple(inv.l0, inv.triple);
    });

    m.def(
        "veech_index",
        [](const Origami& o, long budget) { return veech_group(o, budget).index; },
        py::arg("origami"), py::arg("orbit_budget") = 1000000);

    m.def(
        "shadow_index_sl2",
        [](const Origami& o, long orbit_budget, long coset_budget) {
            return genus2_shadow_index(o, orbit_budget, coset_budget);
        },
        py::arg("origami"), py::arg("orbit_budget") = 1000000,
        py::arg("coset_budget") = 10000000,
        "index of the shadow Veech group in SL(2,Z) for a genus-2 origami");

    m.def(
        "cylinders",
        [](const Origami& o, long p, long q) {
            HomologyModel hm(o);
            CylinderDecomposition d = decompose(hm, p, q);
            py::list out;
            for (const Cylinder& c : d.cyls)
                out.append(py::make_tuple(c.circumference, c.height));
            return out;
        },
        py::arg("origami"), py::arg("p"), py::arg("q"),
        "list of (circumference, height) pairs in the direction (p, q)");

    m.def(
        "shadow_action",
        [](const Origami& o, long a, long b, long c, long d) {
            HomologyModel hm(o);
            return ratmat_to_py(affine_action_of_matrix(hm, mat2(a, b, c, d)).shadow);
        },
        py::arg("origami"), py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"),
        "shadow matrix of the Veech-group element [[a,b],[c,d]]");

    m.def(
        "certify",
        [](const std::string& family, const std::vector<long>& params) {
            Certificate cert = build_certificate(family_certificate_request(family, params));
            json j = certificate_to_json(cert);
            py::module_ jsonmod = py::module_::import("json");
            return jsonmod.attr("loads")(j.dump());
        },
        py::arg("family"), py::arg("params"),
        "pinned arithmeticity certificate for a catalog family, as a dict");

    m.def("check_certificate", [](const py::dict& cert) {
        py::module_ jsonmod = py::module_::import("json");
        std::string dumped = py::cast<std::string>(jsonmod.attr("dumps")(cert));
        json result = check_certificate(json::parse(dumped));
        return jsonmod.attr("loads")(result.dump());
    });

    m.def(
        "galois_pinching",
        [](long a, long b) {
            PinchingReport r = galois_pinching_quartic(Int(a), Int(b));
            py::dict out;
            out["delta1"] = py::int_(py::str(int_str(r.delta1)));
            out["delta2"] = py::int_(py::str(int_str(r.delta2)));
            out["verdict"] = r.verdict;
            return out;
        },
        py::arg("a"), py::arg("b"),
        "Galois-pinching test for x^4 + a x^3 + b x^2 + a x + 1");

    m.attr("__version__") = "1.0.0";
}
