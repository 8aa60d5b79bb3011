// Python bindings for the selfdual library: fields, polynomials, constacyclic
// codes, the classification engine, the brute-force oracle, and the claims
// report. Polynomials cross the boundary in their canonical textual form.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "selfdual/catalog.hpp"
#include "selfdual/claims.hpp"
#include "selfdual/codes.hpp"
#include "selfdual/cyclo.hpp"
#include "selfdual/errors.hpp"
#include "selfdual/gf.hpp"
#include "selfdual/oracle.hpp"
#include "selfdual/poly.hpp"

namespace py = pybind11;
using namespace selfdual;
using u64 = std::uint64_t;

namespace {

std::vector<std::string> poly_strings(const std::vector<Poly>& ps) {
  std::vector<std::string> out;
  out.reserve(ps.size());
  for (const Poly& p : ps) out.push_back(p.str());
  return out;
}

py::dict factorization_dict(const Factorization& fx) {
  py::list factors;
  for (const auto& fe : fx.factors)
    factors.append(py::make_tuple(fe.poly.str(), fe.multiplicity));
  py::dict d;
  d["target"] = fx.target.str();
  d["factors"] = factors;
  d["self_paired"] = fx.self_paired;
  d["mirror_pairs"] = fx.mirror_pairs;
  return d;
}

py::dict verdict_dict(const ClaimVerdict& v) {
  py::dict d;
  d["claim_id"] = v.claim_id;
  d["statement"] = v.statement;
  d["instance"] = v.instance;
  d["claimed"] = v.claimed;
  d["engine"] = v.engine;
  d["oracle"] = v.oracle;
  d["status"] = v.status;
  d["authoritative"] = v.authoritative;
  d["engine_oracle_mismatch"] = v.engine_oracle_mismatch;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact-arithmetic classification of self-dual repeated-root "
            "cyclic and negacyclic codes over finite fields";

  py::register_exception<Error>(m, "SelfdualError");

  py::classh<Field>(m, "Field")
      .def_property_readonly("p", &Field::characteristic)
      .def_property_readonly("s", &Field::extension_degree)
      .def_property_readonly("order", &Field::order)
      .def_property_readonly("modulus", &Field::modulus)
      .def("__repr__",
           [](const Field& f) { return "F_" + std::to_string(f.order()); });

  py::class_<Poly>(m, "Poly")
      .def_property_readonly("degree", &Poly::degree)
      .def_property_readonly("coefficient_codes", &Poly::codes)
      .def("is_monic", &Poly::is_monic)
      .def("monic", &Poly::monic)
      .def("pow", &Poly::pow, py::arg("e"))
      .def("__add__", [](const Poly& a, const Poly& b) { return a + b; })
      .def("__sub__", [](const Poly& a, const Poly& b) { return a - b; })
      .def("__mul__", [](const Poly& a, const Poly& b) { return a * b; })
      .def("__mod__", [](const Poly& a, const Poly& b) { return a % b; })
      .def("__eq__", [](const Poly& a, const Poly& b) { return a == b; })
      .def("__hash__", [](const Poly& a) {
        std::size_t h = 1469598103934665603ULL;
        for (u64 c : a.codes()) h = (h ^ c) * 1099511628211ULL;
        return h;
      })
      .def("__str__", &Poly::str)
      .def("__repr__", [](const Poly& p) { return "Poly(" + p.str() + ")"; });

  m.def("make_field", &make_field, py::arg("p"), py::arg("s") = 1,
        "Field F_{p^s} with the lexicographically smallest irreducible modulus");
  m.def("parse_poly", &Poly::parse, py::arg("field"), py::arg("text"),
        "Parse a polynomial from its textual form");
  m.def(
      "poly",
      [](const FieldPtr& f, const std::vector<std::int64_t>& coeffs) {
        return Poly::from_ints(f, coeffs);
      },
      py::arg("field"), py::arg("coeffs"),
      "Polynomial from integer coefficients, constant term first");

  m.def("reciprocal", &reciprocal, py::arg("f"),
        "Monic reciprocal x^deg(f) * f(1/x); requires a nonzero constant term");
  m.def("is_self_reciprocal", &is_self_reciprocal, py::arg("f"));
  m.def("is_irreducible", &is_irreducible, py::arg("f"));

  m.def("mult_order", &mult_order, py::arg("q"), py::arg("m"),
        "Least k >= 1 with q^k = 1 (mod m)");
  m.def(
      "cosets",
      [](u64 q, u64 m, const std::string& scope) {
        CosetScope sc;
        if (scope == "all")
          sc = CosetScope::all_residues;
        else if (scope == "odd")
          sc = CosetScope::odd_residues;
        else
          fail(Errc::invalid_input, "scope must be 'all' or 'odd'");
        std::vector<std::vector<u64>> out;
        for (const Coset& c : cosets(q, m, sc)) out.push_back(c.members);
        return out;
      },
      py::arg("q"), py::arg("m"), py::arg("scope") = "all",
      "q-cyclotomic cosets modulo m, each as its sorted member list");

  m.def(
      "factor_xn_minus_a",
      [](const FieldPtr& f, u64 n, int a) {
        return factorization_dict(factor_xn_minus_a(f, n, a));
      },
      py::arg("field"), py::arg("n"), py::arg("a"),
      "Factor x^n - a with multiplicities and reciprocal-pairing annotations");

  m.def(
      "exists_selfdual_negacyclic",
      [](const FieldPtr& f, u64 n) {
        PairingEvidence ev;
        const bool ok = negacyclic_selfdual_exists(f, n, &ev);
        py::dict d;
        d["exists"] = ok;
        d["self_reciprocal"] = ev.self_reciprocal;
        d["mirror_pairs"] = ev.mirror_pairs;
        d["multiplicity"] = ev.multiplicity;
        return d;
      },
      py::arg("field"), py::arg("n"),
      "Existence of self-dual negacyclic codes, with the pairing evidence");
  m.def("count_selfdual_negacyclic", &count_selfdual_negacyclic,
        py::arg("field"), py::arg("n"));
  m.def(
      "enumerate_selfdual_negacyclic",
      [](const FieldPtr& f, u64 n) {
        return poly_strings(enumerate_selfdual_negacyclic(f, n));
      },
      py::arg("field"), py::arg("n"),
      "Generators of every self-dual negacyclic code of length n");
  m.def("count_selfdual_cyclic_char2", &count_selfdual_cyclic_char2,
        py::arg("field"), py::arg("n"));
  m.def(
      "enumerate_selfdual_cyclic_char2",
      [](const FieldPtr& f, u64 n) {
        return poly_strings(enumerate_selfdual_cyclic_char2(f, n));
      },
      py::arg("field"), py::arg("n"),
      "Generators of every self-dual cyclic code over a char-2 field");

  py::class_<ConstacyclicCode>(m, "Code")
      .def_property_readonly("n", [](const ConstacyclicCode& c) { return c.n; })
      .def_property_readonly("a", [](const ConstacyclicCode& c) { return c.a; })
      .def_property_readonly("dimension",
                             [](const ConstacyclicCode& c) { return c.dimension; })
      .def_property_readonly(
          "generator", [](const ConstacyclicCode& c) { return c.generator.str(); })
      .def("__repr__", [](const ConstacyclicCode& c) {
        return "Code(n=" + std::to_string(c.n) + ", a=" + std::to_string(c.a) +
               ", dim=" + std::to_string(c.dimension) + ", g=" +
               c.generator.str() + ")";
      });

  m.def(
      "make_code",
      [](const FieldPtr& f, u64 n, int a, const std::string& generator) {
        return make_code(f, n, a, Poly::parse(f, generator));
      },
      py::arg("field"), py::arg("n"), py::arg("a"), py::arg("generator"),
      "Constacyclic code from a textual generator polynomial");
  m.def("dual", &dual, py::arg("code"));
  m.def("is_self_dual", &is_self_dual, py::arg("code"));

  m.def(
      "oracle_selfdual_search",
      [](const FieldPtr& f, u64 n, int a) {
        return poly_strings(oracle_selfdual_search(f, n, a));
      },
      py::arg("field"), py::arg("n"), py::arg("a"),
      "Brute-force census of self-dual length-n constacyclic codes");

  m.def(
      "classify_instance",
      [](const FieldPtr& f, u64 n, int a, bool verify) {
        bool disagreed = false;
        CatalogRecord r = classify_instance(f, n, a, verify, &disagreed);
        py::dict d;
        d["p"] = r.key.p;
        d["s"] = r.key.s;
        d["n"] = r.key.n;
        d["a"] = r.key.a;
        d["exists"] = r.exists;
        d["count"] = r.count;
        d["pairing_self"] = r.pairing_self;
        d["pairing_mirror"] = r.pairing_mirror;
        d["generators_complete"] = r.generators_complete;
        d["generators"] = r.generators;
        d["oracle_checked"] = r.oracle_checked;
        d["oracle_disagreed"] = disagreed;
        return d;
      },
      py::arg("field"), py::arg("n"), py::arg("a") = -1,
      py::arg("verify") = false,
      "Full classification record for one (field, n, a) instance");

  m.def(
      "claims_report",
      []() {
        py::list rows;
        for (const ClaimVerdict& v : run_claims_report()) rows.append(verdict_dict(v));
        return rows;
      },
      "Adjudicate every built-in claim instance; list of verdict dicts");
  m.def(
      "claims_table",
      []() { return claims_table(run_claims_report()); },
      "Aligned-column text rendering of the claims report");

  m.attr("__version__") = kEngineVersion;
}
