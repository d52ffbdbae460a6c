#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strandbox/errors.hpp"
#include "strandbox/verify.hpp"

namespace py = pybind11;
using namespace strandbox;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::string> names(const Presentation& p, const std::vector<ModuleRef>& ms) {
  std::vector<std::string> out;
  for (const auto& m : ms) out.push_back(format_module(p, m));
  return out;
}

class Algebra {
 public:
  Algebra(int n, const std::string& orientation)
      : p_(build_type_C_algebra(n, orientation.empty() ? Orientation::linear(n) : Orientation::parse(orientation))) {}

  int n() const { return p_.n(); }
  std::string orientation() const { return p_.type_c_orientation().to_string(); }

  std::vector<std::string> strings(int max_len) const {
    std::vector<std::string> out;
    for (const auto& w : enumerate_strings(p_, max_len)) out.push_back(format_word(p_, w));
    return out;
  }

  std::vector<std::string> bands(int max_dl) const {
    std::vector<std::string> out;
    for (const auto& b : enumerate_bands(p_, max_dl)) out.push_back(format_module(p_, ModuleRef::band(p_, b)));
    return out;
  }

  std::string tau(const std::string& m, int power) const {
    return format_module(p_, tau_power(p_, parse_module(p_, m), power));
  }

  std::vector<int> dim_vector(const std::string& m) const { return strandbox::dim_vector(p_, parse_module(p_, m)); }

  std::optional<RootVector> rank_vector(const std::string& m) const {
    const ModuleRef x = parse_module(p_, m);
    if (!is_locally_free(p_, x)) return std::nullopt;
    return strandbox::rank_vector(p_, x);
  }

  bool is_tau_locally_free(const std::string& m, int window) const {
    return strandbox::is_tau_locally_free(p_, parse_module(p_, m), window);
  }

  py::dict ar_sequence(const std::string& m) const {
    py::dict d;
    auto s = ar_sequence_starting_at(p_, parse_module(p_, m));
    if (!s) return d;
    d["left"] = format_module(p_, s->left);
    d["middle"] = names(p_, s->middle);
    d["right"] = format_module(p_, s->right);
    d["case"] = to_string(s->tag);
    return d;
  }

  std::pair<int, int> index(const std::string& m) const {
    const Index i = strandbox::index(p_, parse_module(p_, m));
    return {i.left, i.right};
  }

  std::map<std::pair<int, int>, std::vector<std::string>> minimal(int max_len) const {
    std::map<std::pair<int, int>, std::vector<std::string>> out;
    for (const auto& [i, ms] : minimal_strings(p_, max_len)) out[{i.left, i.right}] = names(p_, ms);
    return out;
  }

  std::vector<std::string> tube_bottom() const { return names(p_, strandbox::tube_bottom(p_)); }

  std::string classify(const std::string& m) const {
    return to_string(classify_component(p_, parse_module(p_, m)));
  }

  py::object component(const std::string& seed, int radius) const {
    return to_python(component_to_json(p_, build_component(p_, parse_module(p_, seed), radius)));
  }

  std::string component_dot(const std::string& seed, int radius) const {
    return component_to_dot(p_, build_component(p_, parse_module(p_, seed), radius));
  }

  py::object check_gls(long long bound) const { return to_python(gls_report_to_json(p_, strandbox::check_gls(p_, bound))); }

  py::object check_coxeter(const std::vector<int>& order, const std::string& polarity, int depth) const {
    if (polarity != "+" && polarity != "-") throw DomainError("polarity must be '+' or '-'");
    AdmissibleSeq seq{order, polarity == "-" ? Polarity::Minus : Polarity::Plus};
    if (!is_admissible(p_.type_c_orientation(), seq)) throw DomainError("sequence is not admissible");
    return to_python(check_report_to_json(check_coxeter_compatibility(p_, seq, depth)));
  }

 private:
  Presentation p_;
};

std::vector<RootVector> positive_roots(int n, long long bound) {
  auto s = enumerate_positive_roots(cartan(n), bound);
  return {s.begin(), s.end()};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "String and band modules over type C~ string algebras";

  py::class_<Algebra>(m, "Algebra")
      .def(py::init<int, const std::string&>(), py::arg("n"), py::arg("orientation") = "")
      .def_property_readonly("n", &Algebra::n)
      .def_property_readonly("orientation", &Algebra::orientation)
      .def("strings", &Algebra::strings, py::arg("max_len"))
      .def("bands", &Algebra::bands, py::arg("max_dl"))
      .def("tau", &Algebra::tau, py::arg("module"), py::arg("power") = 1)
      .def("dim_vector", &Algebra::dim_vector, py::arg("module"))
      .def("rank_vector", &Algebra::rank_vector, py::arg("module"))
      .def("is_tau_locally_free", &Algebra::is_tau_locally_free, py::arg("module"), py::arg("window") = 10)
      .def("ar_sequence", &Algebra::ar_sequence, py::arg("module"))
      .def("index", &Algebra::index, py::arg("module"))
      .def("minimal_strings", &Algebra::minimal, py::arg("max_len") = 12)
      .def("tube_bottom", &Algebra::tube_bottom)
      .def("classify", &Algebra::classify, py::arg("module"))
      .def("component", &Algebra::component, py::arg("seed"), py::arg("radius") = 3)
      .def("component_dot", &Algebra::component_dot, py::arg("seed"), py::arg("radius") = 3)
      .def("check_gls", &Algebra::check_gls, py::arg("bound"))
      .def("check_coxeter", &Algebra::check_coxeter, py::arg("order"), py::arg("polarity") = "+",
           py::arg("depth") = 6);

  m.def("positive_roots", &positive_roots, py::arg("n"), py::arg("bound"));
  m.def("delta", &delta, py::arg("n"));
}
