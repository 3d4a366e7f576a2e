#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qdw/cauchy.hpp"
#include "qdw/encoding.hpp"
#include "qdw/io.hpp"
#include "qdw/verify.hpp"

namespace py = pybind11;
using namespace qdw;

namespace {

// Quantales are immutable shared values; the handle keeps the const
// shared_ptr out of the holder machinery.
struct QHandle {
  QuantalePtr p;
};

py::object json_to_py(const Json& j) {
  auto loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

}  // namespace

PYBIND11_MODULE(pyqdw, m) {
  m.doc() = "Finite quantale-enriched Priestley duality workbench";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError,
                      (std::string(error_kind_name(e.kind)) + ": " + e.what()).c_str());
    }
  });

  py::class_<QHandle>(m, "Quantale")
      .def_property_readonly("size", [](const QHandle& q) { return q.p->size(); })
      .def_property_readonly("unit", [](const QHandle& q) { return q.p->unit(); })
      .def_property_readonly("bot", [](const QHandle& q) { return q.p->bot(); })
      .def_property_readonly("top", [](const QHandle& q) { return q.p->top(); })
      .def_property_readonly("labels", [](const QHandle& q) { return q.p->labels(); })
      .def("leq", [](const QHandle& q, int u, int v) { return q.p->leq(u, v); })
      .def("join", [](const QHandle& q, int u, int v) { return q.p->join(u, v); })
      .def("meet", [](const QHandle& q, int u, int v) { return q.p->meet(u, v); })
      .def("tensor", [](const QHandle& q, int u, int v) { return q.p->tensor(u, v); })
      .def("hom", [](const QHandle& q, int u, int v) { return q.p->hom(u, v); })
      .def("totally_below", [](const QHandle& q, int v, int u) { return q.p->below(v, u); },
           py::arg("v"), py::arg("u"))
      .def("is_chain", [](const QHandle& q) { return q.p->is_chain(); })
      .def("is_completely_distributive",
           [](const QHandle& q) { return q.p->is_completely_distributive(); })
      .def("is_girard", [](const QHandle& q) { return q.p->is_girard(); })
      .def("assumption3_holds", [](const QHandle& q) { return q.p->assumption3_holds(); })
      .def("scott_subbase", [](const QHandle& q) { return q.p->scott_subbase(); })
      .def("dual_scott_subbase", [](const QHandle& q) { return q.p->dual_scott_subbase(); })
      .def("lawson_subbase", [](const QHandle& q) { return q.p->lawson_subbase(); })
      .def("summary", [](const QHandle& q) { return json_to_py(quantale_summary(*q.p)); })
      .def("__repr__", [](const QHandle& q) {
        return "<Quantale " + (q.p->name().empty() ? "anonymous" : q.p->name()) +
               " n=" + std::to_string(q.p->size()) + ">";
      });

  m.def("build_two", [] { return QHandle{Quantale::build_two()}; });
  m.def(
      "build_chain",
      [](int levels, const std::string& kind) {
        if (kind == "lukasiewicz")
          return QHandle{Quantale::build_chain(levels, TensorKind::Lukasiewicz)};
        if (kind == "minimum") return QHandle{Quantale::build_chain(levels, TensorKind::Minimum)};
        fail(ErrorKind::BadDocument, "tensor kind must be lukasiewicz or minimum");
      },
      py::arg("levels"), py::arg("kind") = "lukasiewicz");
  m.def(
      "build_df_quantale",
      [](int time_points, int value_levels, const std::string& kind) {
        return QHandle{Quantale::build_df_quantale(
            time_points, value_levels,
            kind == "minimum" ? TensorKind::Minimum : TensorKind::Lukasiewicz)};
      },
      py::arg("time_points"), py::arg("value_levels"), py::arg("kind") = "lukasiewicz");
  m.def(
      "build_table",
      [](std::vector<std::vector<bool>> leq, std::vector<std::vector<int>> tensor, int unit,
         std::vector<std::string> labels) {
        return QHandle{
            Quantale::build_table(std::move(leq), std::move(tensor), unit, std::move(labels))};
      },
      py::arg("leq"), py::arg("tensor"), py::arg("unit"),
      py::arg("labels") = std::vector<std::string>{});

  py::class_<VCat>(m, "VCat")
      .def(py::init([](const QHandle& q, const std::vector<std::vector<int>>& a,
                       std::vector<std::string> labels, std::string name) {
             return VCat::make(q.p, a, std::move(labels), std::move(name));
           }),
           py::arg("quantale"), py::arg("a"), py::arg("labels") = std::vector<std::string>{},
           py::arg("name") = std::string{})
      .def_property_readonly("points", [](const VCat& X) { return X.m; })
      .def_property_readonly("quantale", [](const VCat& X) { return QHandle{X.q}; })
      .def_property_readonly("labels", [](const VCat& X) { return X.labels; })
      .def("at", [](const VCat& X, int x, int y) { return X.at(x, y); })
      .def("is_valid", &VCat::is_valid)
      .def("is_separated", &VCat::is_separated)
      .def("dual", &VCat::dual)
      .def("summary", [](const VCat& X) { return json_to_py(vcat_summary(X)); })
      .def("__repr__", [](const VCat& X) { return "<VCat m=" + std::to_string(X.m) + ">"; });

  m.def("discrete", [](const QHandle& q, int pts) { return discrete(q.p, pts); });
  m.def("indiscrete", [](const QHandle& q, int pts) { return indiscrete(q.p, pts); });

  m.def("separated_reflection", [](const VCat& X) {
    auto [q, S] = separated_reflection(X);
    return py::make_tuple(q.map, S);
  });

  m.def(
      "count_vfunctors",
      [](const VCat& X, const VCat& Y) { return enumerate_vfunctors(X, Y).size(); },
      py::arg("dom"), py::arg("cod"));

  m.def("is_priestley",
        [](const VCat& X) { return json_to_py(priestley_report_json(X, is_priestley(X))); });
  m.def("reflect_pi0", [](const VCat& X) {
    auto [q, P] = reflect_pi0(X);
    return py::make_tuple(q.map, P);
  });

  m.def("dual_object", [](const VCat& X) {
    DualObject cx = DualObject::build(X);
    py::dict d;
    d["carrier_size"] = cx.size();
    py::list carrier;
    for (int i = 0; i < cx.size(); ++i) carrier.append(cx.member(i));
    d["carrier"] = carrier;
    d["tensor_closed"] = cx.tensor_closed();
    return d;
  });
  m.def("verify_j_iso",
        [](const VCat& X) { return json_to_py(jiso_report_json(X, verify_j_iso(X))); });

  m.def("l_closure", [](const VCat& X, std::vector<int> M) { return l_closure(X, M); });
  m.def("cauchy_completion", [](const VCat& X) {
    auto c = cauchy_completion(X);
    return py::make_tuple(c.completed, c.yoneda.map);
  });
  m.def("is_cauchy_complete", [](const VCat& X) { return is_cauchy_complete(X); });

  m.def(
      "encode_levels",
      [](const std::vector<int>& phi, const QHandle& q) {
        auto fam = encode(phi, q.p);
        py::list sets;
        for (std::size_t i = 0; i < fam.family.size(); ++i) {
          py::list members;
          for (int x = 0; x < fam.base_size; ++x)
            if ((fam.family[i].rows[0] >> x) & 1) members.append(x);
          sets.append(members);
        }
        return sets;
      },
      py::arg("phi"), py::arg("quantale"));

  m.def(
      "verify",
      [](const std::string& suite, std::uint64_t seed, int max_size, std::uint64_t budget) {
        verify::Options opt;
        opt.seed = seed;
        opt.max_size = max_size;
        if (budget) opt.budget.max_maps = budget;
        auto rs = verify::run_suite(suite, opt);
        return json_to_py(verify::summary_json(suite, opt, rs));
      },
      py::arg("suite") = "all", py::arg("seed") = 1, py::arg("max_size") = 0, py::arg("budget") = 0);

  m.def("load_documents", [](const std::vector<std::string>& paths) {
    Workspace ws;
    load_files(paths, ws);
    py::dict d;
    py::dict qs, xs;
    for (const auto& [name, q] : ws.quantales) qs[name.c_str()] = QHandle{q};
    for (const auto& [name, X] : ws.vcats) xs[name.c_str()] = X;
    d["quantales"] = qs;
    d["vcategories"] = xs;
    return d;
  });
}
