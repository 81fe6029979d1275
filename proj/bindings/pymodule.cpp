// Python bindings: a thin, copy-friendly surface over the C++ core.
// Transformations and semigroups cross the boundary by value; graphs
// hold a shared copy of their semigroup.

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>

#include "commsemi/commgraph.hpp"
#include "commsemi/constructions.hpp"
#include "commsemi/lpaths.hpp"
#include "commsemi/verify.hpp"

namespace py = pybind11;
using namespace commsemi;

namespace {

std::shared_ptr<FiniteSemigroup const> share(FiniteSemigroup const& s) {
  return std::make_shared<FiniteSemigroup const>(s);
}

std::vector<int> one_based(std::vector<Point> const& pts) {
  std::vector<int> out;
  out.reserve(pts.size());
  for (Point p : pts) {
    out.push_back(p + 1);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_commsemi, m) {
  m.doc() = "finite-semigroup and commuting-graph engine";
  m.attr("__version__") = kToolVersion;

  py::class_<Transformation>(m, "Transformation")
      .def(py::init([](std::vector<int> const& img) {
             return Transformation::from_one_based(img);
           }),
           py::arg("image"), "Build from a 1-based image list.")
      .def_static("parse", &Transformation::parse, py::arg("literal"))
      .def_static("identity", &Transformation::identity, py::arg("n"))
      .def_static("constant", &Transformation::constant, py::arg("n"),
                  py::arg("x"))
      .def_property_readonly("degree", &Transformation::degree)
      .def_property_readonly("rank", &Transformation::rank)
      .def_property_readonly(
          "image", [](Transformation const& t) { return one_based(t.image()); })
      .def_property_readonly("kernel",
                             [](Transformation const& t) {
                               std::vector<std::vector<int>> blocks;
                               auto kernel = t.kernel();
                               for (auto const& b : kernel.blocks()) {
                                 blocks.push_back(one_based(b));
                               }
                               return blocks;
                             })
      .def_property_readonly("is_idempotent", &Transformation::is_idempotent)
      .def_property_readonly("is_permutation", &Transformation::is_permutation)
      .def_property_readonly("is_constant", &Transformation::is_constant)
      .def("idempotent_power", &Transformation::idempotent_power)
      .def("power", &Transformation::power, py::arg("p"))
      .def("commutes", &Transformation::commutes, py::arg("other"))
      .def("cycles",
           [](Transformation const& t) {
             std::vector<std::vector<int>> out;
             auto cycle_set = t.cycles();
             for (auto const& c : cycle_set.cycles()) {
               out.push_back(one_based(c));
             }
             return out;
           })
      .def("__mul__", &Transformation::operator*)
      .def("__getitem__",
           [](Transformation const& t, int x) {
             if (x < 1 || x > t.degree()) {
               throw py::index_error("point out of range");
             }
             return t[x - 1] + 1;
           })
      .def("__len__", &Transformation::degree)
      .def("__str__", &Transformation::to_string)
      .def("__repr__",
           [](Transformation const& t) {
             return "Transformation(\"" + t.to_string() + "\")";
           })
      .def("__hash__",
           [](Transformation const& t) { return TransformationHash{}(t); })
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::class_<FiniteSemigroup>(m, "FiniteSemigroup")
      .def_static("full", &FiniteSemigroup::full, py::arg("n"))
      .def_static("ideal", &FiniteSemigroup::ideal, py::arg("n"), py::arg("r"))
      .def_static("closure", &FiniteSemigroup::closure, py::arg("n"),
                  py::arg("generators"), py::arg("max_size") = 1000000)
      .def_static("from_table_json",
                  [](std::string const& text) {
                    return FiniteSemigroup::from_table(
                        CayleyTable::from_json(text));
                  })
      .def("__len__", &FiniteSemigroup::size)
      .def_property_readonly("degree", &FiniteSemigroup::degree)
      .def("mul", &FiniteSemigroup::mul, py::arg("i"), py::arg("j"))
      .def("element", &FiniteSemigroup::element, py::arg("i"))
      .def("index_of",
           [](FiniteSemigroup const& s, Transformation const& t) {
             return s.index_of(t);
           })
      .def("index_of_label", &FiniteSemigroup::index_of_label)
      .def("label", &FiniteSemigroup::label, py::arg("i"))
      .def("center", &FiniteSemigroup::center)
      .def_property_readonly("is_band", &FiniteSemigroup::is_band)
      .def_property_readonly("is_commutative",
                             &FiniteSemigroup::is_commutative)
      .def("cayley_table_json",
           [](FiniteSemigroup const& s) { return s.cayley_table().to_json(); });

  py::class_<DistanceResult>(m, "DistanceResult")
      .def_readonly("infinite", &DistanceResult::infinite)
      .def_readonly("value", &DistanceResult::value)
      .def_readonly("witness", &DistanceResult::witness)
      .def("__repr__", [](DistanceResult const& d) {
        return "DistanceResult(" + d.to_string() + ")";
      });

  py::class_<CommutingGraph>(m, "CommutingGraph")
      .def_static(
          "of",
          [](FiniteSemigroup const& s) { return CommutingGraph::of(share(s)); },
          py::arg("semigroup"))
      .def_static(
          "idempotent",
          [](FiniteSemigroup const& s) {
            return CommutingGraph::idempotent(share(s));
          },
          py::arg("semigroup"))
      .def_property_readonly("num_vertices", &CommutingGraph::num_vertices)
      .def_property_readonly("empty", &CommutingGraph::empty)
      .def("vertex_label", &CommutingGraph::vertex_label)
      .def("distance",
           [](CommutingGraph const& g, uint32_t u, uint32_t w) {
             return g.distance(u, w);
           },
           py::arg("elem_u"), py::arg("elem_w"))
      .def("diameter",
           [](CommutingGraph const& g, size_t budget) {
             GraphBudget b;
             b.max_materialized_vertices = budget;
             return g.diameter(b);
           },
           py::arg("budget") = size_t{100000})
      .def("is_connected",
           [](CommutingGraph const& g) { return g.is_connected(); })
      .def("validate_path", &CommutingGraph::validate_path)
      .def("to_dot", &CommutingGraph::to_dot)
      .def("to_json", &CommutingGraph::to_json);

  m.def("knit_degree",
        [](FiniteSemigroup const& s) -> py::object {
          auto kd = knit_degree(s);
          if (!kd) {
            return py::none();
          }
          return py::make_tuple(kd->degree, kd->witness);
        },
        py::arg("semigroup"),
        "Knit degree and a shortest l-path witness, or None.");
  m.def("check_quasi_identity_1", [](FiniteSemigroup const& s) {
    auto r = check_quasi_identity_1(s);
    return py::make_tuple(r.holds, r.witness);
  });
  m.def("check_an",
        [](FiniteSemigroup const& s, uint64_t n, std::string const& engine) {
          AnEngine e = engine == "lpath" ? AnEngine::LPath : AnEngine::Naive;
          auto r = check_An(s, n, e);
          return py::make_tuple(r.holds, r.witness);
        },
        py::arg("semigroup"), py::arg("n"), py::arg("engine") = "naive");

  m.def("s0_band", &s0_band, py::arg("k"));
  m.def("s1_band", &s1_band, py::arg("k"));
  m.def("small_semigroup_names", &small_semigroup_names);
  m.def("small_semigroup", &small_semigroup, py::arg("name"));
  m.def("tdia2_witnesses", &tdia2_witnesses, py::arg("n"), py::arg("r"));
  m.def("tdia3_witnesses", &tdia3_witnesses, py::arg("n"));
  m.def("distance4_witnesses", &distance4_witnesses, py::arg("n"));
  m.def("lower_bound_certificate", &lower_bound_certificate, py::arg("n"),
        py::arg("a"), py::arg("b"));

  m.def("verify",
        [](std::string const& suite, int max_n, int max_k, uint64_t budget,
           unsigned threads) {
          VerifyConfig cfg{max_n, max_k, budget, threads};
          Report r;
          if (suite == "tdia") {
            r = verify_tdia(cfg);
          } else if (suite == "tdia2") {
            r = verify_tdia2(cfg);
          } else if (suite == "tdia3") {
            std::vector<int> cases;
            for (int n = 2; n <= std::min(max_n, 8); ++n) {
              cases.push_back(n);
            }
            r = verify_tdia3(cfg, cases);
          } else if (suite == "bands") {
            r = verify_bands(cfg);
          } else if (suite == "schein") {
            r = verify_schein(cfg);
          } else if (suite == "all") {
            r = verify_all(cfg);
          } else {
            throw std::invalid_argument("unknown suite: " + suite);
          }
          return r.to_json();
        },
        py::arg("suite"), py::arg("max_n") = 5, py::arg("max_k") = 3,
        py::arg("budget") = uint64_t{100000}, py::arg("threads") = 1u,
        "Run a verification suite and return the JSON report.");
}
