#include "symsum/symsum.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

namespace py = pybind11;

// Exact integers cross the boundary as Python ints, serialized through
// decimal strings so magnitude never truncates.
namespace pybind11 {
namespace detail {

template <>
struct type_caster<symsum::Int> {
 public:
  PYBIND11_TYPE_CASTER(symsum::Int, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    PyObject* text = PyObject_Str(src.ptr());
    if (!text) return false;
    const char* digits = PyUnicode_AsUTF8(text);
    if (!digits) {
      Py_DECREF(text);
      return false;
    }
    value = symsum::Int(digits);
    Py_DECREF(text);
    return true;
  }

  static handle cast(const symsum::Int& src, return_value_policy, handle) {
    return PyLong_FromString(src.str().c_str(), nullptr, 10);
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

std::string repr_element(const symsum::RingElement& a) {
  return "RingElement(" + a.value().str() + " mod " + a.modulus().str() + ")";
}

std::string repr_exponents(const symsum::ExponentMultiset& a) {
  std::string out = "ExponentMultiset([";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) out += ", ";
    out += a.at(i).str();
  }
  return out + "])";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Symmetric sums of monomials over pairwise-distinct elements of a "
      "subgroup of units of Z/mZ";

  py::register_exception<symsum::parse_error>(m, "ParseError", PyExc_ValueError);

  py::class_<symsum::RingElement>(m, "RingElement")
      .def(py::init<symsum::Int, symsum::Int>(), py::arg("value"), py::arg("modulus"))
      .def_property_readonly("value", &symsum::RingElement::value)
      .def_property_readonly("modulus", &symsum::RingElement::modulus)
      .def("__add__",
           [](const symsum::RingElement& a, const symsum::RingElement& b) { return a + b; })
      .def("__mul__",
           [](const symsum::RingElement& a, const symsum::RingElement& b) { return a * b; })
      .def("__neg__", [](const symsum::RingElement& a) { return -a; })
      .def("__eq__",
           [](const symsum::RingElement& a, const symsum::RingElement& b) { return a == b; })
      .def("__hash__",
           [](const symsum::RingElement& a) {
             return py::hash(py::make_tuple(a.value(), a.modulus()));
           })
      .def("__repr__", &repr_element)
      .def("__int__", [](const symsum::RingElement& a) { return a.value(); });

  py::class_<symsum::ModRing>(m, "ModRing")
      .def(py::init<symsum::Int>(), py::arg("modulus"))
      .def_property_readonly("modulus", &symsum::ModRing::modulus)
      .def("size", &symsum::ModRing::size)
      .def("element", &symsum::ModRing::element, py::arg("value"))
      .def("zero", &symsum::ModRing::zero)
      .def("one", &symsum::ModRing::one)
      .def("is_unit", &symsum::ModRing::is_unit, py::arg("value"))
      .def("inverse", &symsum::ModRing::inverse, py::arg("a"))
      .def("is_regular", &symsum::ModRing::is_regular, py::arg("a"))
      .def("is_regular_by_scan", &symsum::ModRing::is_regular_by_scan, py::arg("a"))
      .def("unit_count", &symsum::ModRing::unit_count)
      .def("non_regular_count", &symsum::ModRing::non_regular_count)
      .def("unit_values", &symsum::ModRing::unit_values)
      .def("pow", &symsum::ModRing::pow, py::arg("base"), py::arg("exponent"))
      .def("__eq__",
           [](const symsum::ModRing& a, const symsum::ModRing& b) { return a == b; })
      .def("__repr__",
           [](const symsum::ModRing& r) { return "ModRing(" + r.modulus().str() + ")"; });

  py::class_<symsum::UnitSubgroup>(m, "UnitSubgroup")
      .def_property_readonly("ring", &symsum::UnitSubgroup::ring)
      .def("elements", &symsum::UnitSubgroup::elements)
      .def("__len__", &symsum::UnitSubgroup::size)
      .def("size", &symsum::UnitSubgroup::size)
      .def("exponent", &symsum::UnitSubgroup::exponent)
      .def("contains", &symsum::UnitSubgroup::contains, py::arg("value"))
      .def("__contains__", &symsum::UnitSubgroup::contains)
      .def("order_of",
           [](const symsum::UnitSubgroup& g, const symsum::Int& v) { return g.order_of(v); },
           py::arg("value"))
      .def("max_order_element", &symsum::UnitSubgroup::max_order_element)
      .def("pow", &symsum::UnitSubgroup::pow, py::arg("base"), py::arg("exponent"))
      .def("__repr__", [](const symsum::UnitSubgroup& g) {
        return "UnitSubgroup(" + std::to_string(g.size()) + " elements mod " +
               g.ring().modulus().str() + ")";
      });

  m.def("make_ring", &symsum::make_ring, py::arg("modulus"));
  m.def("full_unit_group", &symsum::full_unit_group, py::arg("ring"));
  m.def("nth_residue_subgroup", &symsum::nth_residue_subgroup, py::arg("ring"),
        py::arg("n"));
  m.def("generated_subgroup", &symsum::generated_subgroup, py::arg("ring"),
        py::arg("generators"));
  m.def("element_order", &symsum::element_order, py::arg("group"), py::arg("g"));
  m.def("group_exponent", &symsum::group_exponent, py::arg("group"));

  py::class_<symsum::ExponentMultiset>(m, "ExponentMultiset")
      .def(py::init<std::vector<symsum::Int>>(), py::arg("exponents"))
      .def("__len__", &symsum::ExponentMultiset::size)
      .def("__getitem__",
           [](const symsum::ExponentMultiset& a, std::size_t i) {
             if (i >= a.size()) throw py::index_error();
             return a.at(i);
           })
      .def_property_readonly("exponents", &symsum::ExponentMultiset::exponents)
      .def("subset_sum",
           [](const symsum::ExponentMultiset& a, const std::vector<std::size_t>& positions) {
             return a.subset_sum(positions);
           },
           py::arg("positions"))
      .def("total", &symsum::ExponentMultiset::total)
      .def("residues", &symsum::ExponentMultiset::residues, py::arg("lambda_"))
      .def("without", &symsum::ExponentMultiset::without, py::arg("position"))
      .def("__eq__",
           [](const symsum::ExponentMultiset& a, const symsum::ExponentMultiset& b) {
             return a == b;
           })
      .def("__repr__", &repr_exponents);
  py::implicitly_convertible<py::list, symsum::ExponentMultiset>();

  py::class_<symsum::Reduction>(m, "Reduction")
      .def_readonly("reduced", &symsum::Reduction::reduced)
      .def_readonly("kept", &symsum::Reduction::kept)
      .def_readonly("prefactor", &symsum::Reduction::prefactor);

  m.def("reduce", &symsum::reduce, py::arg("exponents"), py::arg("lambda_"),
        py::arg("group_order"));
  m.def("chi", &symsum::chi, py::arg("block_size"), py::arg("group_order"));
  m.def("canonical_partition", &symsum::canonical_partition, py::arg("partition"));
  m.def(
      "valid_partitions",
      [](const symsum::ExponentMultiset& exponents, std::int64_t lambda) {
        return symsum::valid_partitions(exponents, lambda).partitions;
      },
      py::arg("exponents"), py::arg("lambda_"));
  m.def(
      "valid_partitions_naive",
      [](const symsum::ExponentMultiset& exponents, std::int64_t lambda) {
        return symsum::valid_partitions_naive(exponents, lambda).partitions;
      },
      py::arg("exponents"), py::arg("lambda_"));
  m.def("closed_form_weight", &symsum::closed_form_weight, py::arg("exponents"),
        py::arg("lambda_"), py::arg("group_order"));
  m.def("closed_form_weight_enumerated", &symsum::closed_form_weight_enumerated,
        py::arg("exponents"), py::arg("lambda_"), py::arg("group_order"));
  m.def("closed_form_p", &symsum::closed_form_p, py::arg("group"), py::arg("exponents"));
  m.def("brute_force_p", &symsum::brute_force_p, py::arg("group"), py::arg("exponents"));
  m.def("brute_force_p_sharp", &symsum::brute_force_p_sharp, py::arg("group"),
        py::arg("exponents"));

  py::class_<symsum::InclusionExclusionCheck>(m, "InclusionExclusionCheck")
      .def_readonly("holds", &symsum::InclusionExclusionCheck::holds)
      .def_readonly("lhs", &symsum::InclusionExclusionCheck::lhs)
      .def_readonly("rhs", &symsum::InclusionExclusionCheck::rhs);
  m.def("check_inclusion_exclusion", &symsum::check_inclusion_exclusion, py::arg("group"),
        py::arg("exponents"));

  py::class_<symsum::NicenessReport>(m, "NicenessReport")
      .def_readonly("nice", &symsum::NicenessReport::nice)
      .def_readonly("threshold", &symsum::NicenessReport::threshold)
      .def_readonly("worst_subset", &symsum::NicenessReport::worst_subset)
      .def_readonly("worst_value", &symsum::NicenessReport::worst_value)
      .def_readonly("family_size", &symsum::NicenessReport::family_size)
      .def_readonly("vacuous", &symsum::NicenessReport::vacuous);
  m.def("is_a_nice", &symsum::is_a_nice, py::arg("group"), py::arg("exponents"));
  m.def("minimax_fast", &symsum::minimax_fast, py::arg("group"), py::arg("subset_sum"));
  m.def("minimax_scan", &symsum::minimax_scan, py::arg("group"), py::arg("subset_sum"));

  py::class_<symsum::VanishingWitness>(m, "VanishingWitness")
      .def_readonly("base", &symsum::VanishingWitness::base)
      .def_readonly("power", &symsum::VanishingWitness::power);
  m.def("vanishing_witness", &symsum::vanishing_witness, py::arg("group"), py::arg("t"));

  m.def("example1_condition", &symsum::example1_condition, py::arg("p"), py::arg("m"),
        py::arg("q"), py::arg("exponents"));
  m.def("example2_condition", &symsum::example2_condition, py::arg("p"), py::arg("q"),
        py::arg("exponents"));

  py::enum_<symsum::Method>(m, "Method")
      .value("closed_form", symsum::Method::closed_form)
      .value("vanishing", symsum::Method::vanishing)
      .value("brute_force", symsum::Method::brute_force);
  m.def("method_name", &symsum::method_name, py::arg("method"));

  py::class_<symsum::Evaluation>(m, "Evaluation")
      .def_readonly("value", &symsum::Evaluation::value)
      .def_readonly("method", &symsum::Evaluation::method)
      .def_readonly("nice", &symsum::Evaluation::nice)
      .def_readonly("prefactor", &symsum::Evaluation::prefactor)
      .def_readonly("niceness", &symsum::Evaluation::niceness);
  m.def("evaluate", &symsum::evaluate, py::arg("group"), py::arg("exponents"),
        py::arg("force_closed_form") = false);

  py::class_<symsum::Monomial>(m, "Monomial")
      .def_readonly("coefficient", &symsum::Monomial::coefficient)
      .def_readonly("exponents", &symsum::Monomial::exponents);
  py::class_<symsum::MonomialPolynomial>(m, "MonomialPolynomial")
      .def_readonly("arity", &symsum::MonomialPolynomial::arity)
      .def_readonly("terms", &symsum::MonomialPolynomial::terms)
      .def("__str__", [](const symsum::MonomialPolynomial& f) { return to_string(f); });
  m.def("parse_polynomial", &symsum::parse_polynomial, py::arg("text"), py::arg("arity"));
  m.def("polynomial_to_string",
        [](const symsum::MonomialPolynomial& f) { return to_string(f); }, py::arg("f"));

  py::class_<symsum::TermEvaluation>(m, "TermEvaluation")
      .def_readonly("coefficient", &symsum::TermEvaluation::coefficient)
      .def_readonly("contribution", &symsum::TermEvaluation::contribution)
      .def_readonly("details", &symsum::TermEvaluation::details);
  py::class_<symsum::PolynomialEvaluation>(m, "PolynomialEvaluation")
      .def_readonly("value", &symsum::PolynomialEvaluation::value)
      .def_readonly("terms", &symsum::PolynomialEvaluation::terms);
  m.def("eval_sum", &symsum::eval_sum, py::arg("group"), py::arg("f"));
}
