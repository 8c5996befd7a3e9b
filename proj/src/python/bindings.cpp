#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "og4/cli.hpp"
#include "og4/constructions.hpp"

namespace py = pybind11;
using namespace og4;

namespace {

py::object order_to_pyint(Order v) {
  return py::module_::import("builtins").attr("int")(order_to_string(v));
}

py::object json_loads(const std::string &text) {
  return py::module_::import("json").attr("loads")(text);
}

FamilyParams params_of(long long p, long long n) {
  FamilyParams params;
  params.p = p;
  params.n = n;
  return params;
}

} // namespace

PYBIND11_MODULE(og4core, m) {
  m.doc() = "4-valent oriented graph constructions with biquasiprimitive-type "
            "symmetry, and the machinery that verifies them";

  py::register_exception<Error>(m, "Og4Error");

  py::class_<Permutation>(m, "Permutation")
      .def(py::init<std::vector<Point>>(), py::arg("images"))
      .def_static("identity", &Permutation::identity, py::arg("degree"))
      .def_property_readonly("degree", &Permutation::degree)
      .def_property_readonly("images",
                             [](const Permutation &p) { return p.images(); })
      .def("__getitem__",
           [](const Permutation &p, Point x) {
             if (x >= p.degree())
               throw py::index_error();
             return p[x];
           })
      .def("inverse", &Permutation::inverse)
      .def("order",
           [](const Permutation &p) { return order_to_pyint(p.element_order()); })
      .def("is_identity", &Permutation::is_identity)
      .def("cycles", &Permutation::cycle_string)
      .def("__mul__",
           [](const Permutation &p, const Permutation &q) { return compose(p, q); })
      .def("__eq__",
           [](const Permutation &p, const Permutation &q) { return p == q; })
      .def("__hash__", &Permutation::hash)
      .def("__repr__",
           [](const Permutation &p) { return "Permutation" + p.cycle_string(); });

  m.def("compose", &compose, py::arg("p"), py::arg("q"),
        "product acting left to right: x^(pq) = (x^p)^q");
  m.def("conjugated", &conjugated, py::arg("p"), py::arg("x"), "x^-1 p x");

  py::class_<PermGroup>(m, "PermGroup")
      .def(py::init([](Point degree, const std::vector<std::vector<Point>> &gens) {
             std::vector<Permutation> perms;
             perms.reserve(gens.size());
             for (const auto &imgs : gens)
               perms.push_back(Permutation(imgs));
             return PermGroup(degree, std::move(perms));
           }),
           py::arg("degree"), py::arg("generators"))
      .def_property_readonly("degree", &PermGroup::degree)
      .def_property_readonly("generators",
                             [](const PermGroup &g) { return g.generators(); })
      .def("order", [](const PermGroup &g) { return order_to_pyint(g.order()); })
      .def("contains", &PermGroup::contains, py::arg("p"))
      .def("orbit", &PermGroup::orbit, py::arg("point"))
      .def("orbits", &PermGroup::orbits)
      .def("stabilizer", &PermGroup::stabilizer, py::arg("point"))
      .def("__repr__", [](const PermGroup &g) {
        return "PermGroup(degree=" + std::to_string(g.degree()) + ", " +
               std::to_string(g.generators().size()) + " generators)";
      });

  m.def("normal_closure", &normal_closure, py::arg("group"), py::arg("seeds"));
  m.def("is_core_free", &is_core_free, py::arg("group"), py::arg("subgroup"));

  m.def(
      "psl2",
      [](int p) {
        auto pair = psl2_on_projective_line(p);
        return py::make_tuple(pair.group, pair.a, pair.b);
      },
      py::arg("p"),
      "PSL(2,p) on the projective line with the standard generating pair");

  m.def(
      "alt_pair",
      [](unsigned n, const std::string &kind) {
        AltPairKind k;
        if (kind == "k1")
          k = AltPairKind::k1_pair;
        else if (kind == "k2")
          k = AltPairKind::k2_pair;
        else
          throw Error(ErrorKind::BadParameters, "kind must be 'k1' or 'k2'");
        auto pair = alt_with_pair(n, k);
        return py::make_tuple(pair.group, pair.a, pair.b);
      },
      py::arg("n"), py::arg("kind"));

  m.def("cyclic_elementary", &cyclic_and_elementary, py::arg("p"), py::arg("k"));

  m.def(
      "build_family",
      [](const std::string &family, long long p, long long n) {
        auto inst = build_family(family_from_string(family), params_of(p, n));
        py::dict d;
        d["family"] = family_name(inst.family);
        d["construction"] = inst.construction;
        d["tier"] = inst.tier;
        if (inst.pair) {
          d["vertex_count"] = inst.pair->graph.vertex_count;
          d["group_order"] = order_to_pyint(inst.group_order);
        }
        if (inst.bundle) {
          d["h_order"] = order_to_pyint(inst.bundle->h_order);
          d["k"] = inst.bundle->k;
        }
        return d;
      },
      py::arg("family"), py::arg("p") = 0, py::arg("n") = 0);

  m.def(
      "verify_family",
      [](const std::string &family, long long p, long long n) {
        auto inst = build_family(family_from_string(family), params_of(p, n));
        auto report = verify_family_instance(inst);
        return json_loads(report_to_json_string(report));
      },
      py::arg("family"), py::arg("p") = 0, py::arg("n") = 0,
      "build one instance and run its full check list; returns the report");

  m.def(
      "table2",
      [](const std::vector<std::string> &families, int jobs) {
        SweepRequest request;
        if (families.empty()) {
          request = SweepRequest::defaults();
        } else {
          std::vector<FamilyId> ids;
          for (const auto &f : families)
            ids.push_back(family_from_string(f));
          request = SweepRequest::for_families(ids);
        }
        auto rows = table2_sweep(request, {}, jobs);
        return json_loads(sweep_to_json_string(rows));
      },
      py::arg("families") = std::vector<std::string>{}, py::arg("jobs") = 1,
      "verify family rows and return the aggregated report");

  m.def(
      "export_family_graph",
      [](const std::string &family, long long p, long long n,
         const std::string &format) {
        auto inst = build_family(family_from_string(family), params_of(p, n));
        if (!inst.pair)
          throw Error(ErrorKind::BudgetExceeded,
                      "graph too large to build; certificate tier only");
        ExportFormat fmt = export_format_from_string(format);
        const std::vector<std::pair<Point, Point>> *orientation = nullptr;
        OrientedCheck oc;
        if (fmt == ExportFormat::dot_oriented) {
          oc = check_oriented(*inst.pair);
          orientation = &oc.orientation;
        }
        return export_graph(inst.pair->graph, fmt, orientation);
      },
      py::arg("family"), py::arg("p") = 0, py::arg("n") = 0,
      py::arg("format") = "edge_list");
}
