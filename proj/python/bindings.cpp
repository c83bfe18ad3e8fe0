#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qehrhart/corpus.hpp"
#include "qehrhart/suites.hpp"

namespace py = pybind11;
using namespace qeh;

namespace {

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

py::object rat(const Rat& x) {
    if (x.get_den() == 1) return py::int_(py::str(x.get_num().get_str()));
    return py::module_::import("fractions").attr("Fraction")(to_string(x));
}

py::list qpoly(const QPoly& p) {
    py::list out;
    for (const auto& c : p.coeffs()) out.append(rat(c));
    return out;
}

py::list series(const TQSeries& s) {
    py::list out;
    for (int m = 0; m <= s.T; ++m) out.append(qpoly(s[m]));
    return out;
}

LatticePolytope poly(const std::vector<Point>& vertices, const std::string& name = "") {
    if (vertices.empty()) throw std::invalid_argument("empty vertex list");
    return LatticePolytope(vertices, name);
}

PointLocus locus(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("empty locus");
    return PointLocus(static_cast<int>(pts[0].size()), pts);
}

SearchBounds bounds(const LatticePolytope& p, std::optional<int> b, std::optional<int> a, std::optional<int> nu) {
    auto sb = default_bounds(p);
    if (b) sb.bMax = *b;
    if (a) sb.aMax = *a;
    if (nu) sb.nuMax = *nu;
    return sb;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "q-Ehrhart series of lattice polytopes";

    m.def("lattice_points", [](const std::vector<Point>& v, long long k) { return poly(v).lattice_points(k).points; },
          py::arg("vertices"), py::arg("m") = 1);
    m.def("interior_lattice_points", [](const std::vector<Point>& v, long long k) { return poly(v).interior_lattice_points(k).points; },
          py::arg("vertices"), py::arg("m") = 1);
    m.def("iq", [](const std::vector<Point>& v, int k) { return qpoly(iq(poly(v), k)); }, py::arg("vertices"), py::arg("m"));
    m.def("iq_interior", [](const std::vector<Point>& v, int k) { return qpoly(iq_interior(poly(v), k)); }, py::arg("vertices"),
          py::arg("m"));
    m.def("series_E", [](const std::vector<Point>& v, int T, int jobs) { return series(series_E(poly(v), T, jobs)); },
          py::arg("vertices"), py::arg("T"), py::arg("jobs") = 1);
    m.def("series_Ebar", [](const std::vector<Point>& v, int T, int jobs) { return series(series_Ebar(poly(v), T, jobs)); },
          py::arg("vertices"), py::arg("T"), py::arg("jobs") = 1);
    m.def("hilbert_series", [](const std::vector<Point>& pts) { return qpoly(hilbert_series(locus(pts))); }, py::arg("points"));
    m.def("harmonic_basis",
          [](const std::vector<Point>& pts) {
              py::list out;
              for (const auto& sp : harmonic_basis(locus(pts)).by_degree) {
                  py::list deg;
                  for (const auto& f : sp.basis()) deg.append(f.to_string('y'));
                  out.append(deg);
              }
              return out;
          },
          py::arg("points"));
    m.def("guess",
          [](const std::vector<Point>& v, int T, std::optional<int> b, std::optional<int> a, std::optional<int> nu) {
              const auto P = poly(v);
              return from_json(record_json(guess(P, T, bounds(P, b, a, nu))));
          },
          py::arg("vertices"), py::arg("T") = 10, py::arg("b_max") = py::none(), py::arg("a_max") = py::none(),
          py::arg("nu_max") = py::none());
    m.def("expand", [](const std::string& form, int T) { return series(expand(parse_ratfun(form), T)); }, py::arg("form"),
          py::arg("T"));
    m.def("same_function", [](const std::string& a, const std::string& b) { return same_function(parse_ratfun(a), parse_ratfun(b)); });
    m.def("reciprocity_check", [](const std::string& e, const std::string& eb, int d) {
        return reciprocity_check(parse_ratfun(e), parse_ratfun(eb), d);
    });
    m.def("closure_check",
          [](const std::vector<Point>& a, const std::vector<Point>& b) {
              const auto r = closure_check(locus(a), locus(b));
              py::dict d;
              d["holds"] = r.holds;
              d["proper"] = r.proper;
              d["witness"] = r.witness ? py::object(py::str(r.witness->to_string('y'))) : py::none();
              return d;
          });
    m.def("closure_check_modp", [](const std::vector<Point>& a, const std::vector<Point>& b, std::uint64_t p) {
        return closure_check_modp(locus(a), locus(b), p).holds;
    });
    m.def("harmonic_dims_modp", [](const std::vector<Point>& pts, std::uint64_t p) { return harmonic_basis_modp(locus(pts), p).dims(); });
    m.def("beta_bound", &beta_bound, py::arg("r"), py::arg("r2"), py::arg("p") = 0);
    m.def("generation_check",
          [](const std::vector<Point>& v, int m0, int T) { return from_json(generation_json(generation_check(poly(v), m0, T))); },
          py::arg("vertices"), py::arg("m0"), py::arg("T"));
    m.def("equivariant_series",
          [](const std::vector<Point>& v, const std::vector<std::pair<std::string, IntMatrix>>& elements, int T) {
              std::vector<GroupElement> g;
              for (const auto& [id, mat] : elements) g.push_back({id, mat});
              return from_json(character_json(equivariant_series(poly(v), g, T)));
          },
          py::arg("vertices"), py::arg("elements"), py::arg("T"));
    m.def("chain_order_equality", [](int n, const std::vector<std::pair<int, int>>& covers, int M) {
        return chain_order_equality(Poset(n, covers), M);
    });
    m.def("corpus_names", &corpus_names);
    m.def("corpus", [](const std::string& name) {
        py::list out;
        for (const auto& r : corpus(name)) {
            py::dict d;
            d["id"] = r.id;
            d["vertices"] = r.vertices;
            d["form"] = r.form ? py::object(py::str(*r.form)) : py::none();
            d["hstar"] = r.hstar ? py::cast(*r.hstar) : py::none();
            d["provenance"] = r.provenance;
            out.append(d);
        }
        return out;
    });
    m.def("verify", [](const std::string& what, std::uint64_t seed, int trials) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.trials = trials;
        if (what == "closure") return from_json(suite_closure(cfg).to_json());
        if (what == "modp") return from_json(suite_modp(cfg).to_json());
        if (what == "chainorder") return from_json(suite_chainorder(3, 2, false).to_json());
        if (what == "equivariant") return from_json(suite_equivariant(4).to_json());
        throw std::invalid_argument("unknown suite " + what);
    }, py::arg("what"), py::arg("seed") = 0, py::arg("trials") = 20);
}
