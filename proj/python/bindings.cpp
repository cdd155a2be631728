// Python bindings: thin wrappers around the library entry points.  Groups are
// referenced by name (or inline JSON) and reconstructed per call; compound
// results come back as plain lists/dicts so no C++ object graph leaks out.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "msat/error.hpp"
#include "msat/hecke.hpp"
#include "msat/mv_oracle.hpp"
#include "msat/root_datum.hpp"
#include "msat/satake_params.hpp"
#include "msat/serialization.hpp"

namespace py = pybind11;
using namespace msat;

namespace {

DatumPtr group_of(const std::string& spec) {
  if (!spec.empty() && spec[0] == '{') return datum_from_json(Json::parse(spec));
  return build_standard(spec);
}

Levi levi_from_opt(const BasedRootDatum& rd, const std::optional<std::vector<int>>& levi,
                   bool default_full) {
  if (!levi) return default_full ? Levi::full(rd.num_simple()) : Levi::torus();
  Levi out;
  for (int v : *levi) {
    if (v < 1) throw invalid_input("levi indices are 1-based");
    out.indices.push_back(v - 1);
  }
  check_levi(rd, out);
  return out;
}

std::vector<int> levi_to_py(const Levi& levi) {
  std::vector<int> out;
  for (int i : levi.indices) out.push_back(i + 1);
  return out;
}

Basis basis_of(const std::string& name) {
  if (name == "std") return Basis::Std;
  if (name == "ic") return Basis::IC;
  throw invalid_input("basis must be std or ic");
}

std::string basis_name(Basis b) { return b == Basis::Std ? "std" : "ic"; }

using PyValues = std::vector<std::pair<Coweight, std::vector<Int>>>;

SatakeParameter classify_py(const std::string& group, Int p, int k, const PyValues& values,
                            Int bound) {
  DatumPtr rd = group_of(group);
  FieldPtr f = make_field(p, k);
  std::vector<std::pair<Coweight, FiniteField::Elem>> native;
  for (const auto& [g, coeffs] : values) {
    std::vector<uint32_t> c(coeffs.begin(), coeffs.end());
    native.emplace_back(g, f->from_coeffs(c));
  }
  return classify(rd, f, native, bound);
}

std::vector<Int> elem_coeffs(const FiniteField& f, FiniteField::Elem v) {
  std::vector<Int> out;
  for (uint32_t c : f.coeffs(v)) out.push_back(c);
  return out;
}

py::dict count_row_py(const CountRow& r) {
  py::dict d;
  d["q"] = r.q;
  d["lambda"] = r.lambda;
  d["nu"] = r.nu;
  d["raw"] = r.raw;
  d["mod_p"] = r.mod_p;
  return d;
}

py::dict conv_row_py(const ConvolutionRow& r) {
  py::dict d;
  d["q"] = r.q;
  d["mu1"] = r.mu1;
  d["mu2"] = r.mu2;
  d["lambda"] = r.lambda;
  d["raw"] = r.raw;
  d["mod_p"] = r.mod_p;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "mod-p spherical Hecke algebras, Satake parameters and the lattice oracle";

  py::register_exception<verification_error>(m, "VerificationError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const verification_error&) {
      throw;  // handled by the registered exception above
    } catch (const invalid_input& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def(
      "group_info",
      [](const std::string& spec) {
        DatumPtr rd = group_of(spec);
        py::dict d;
        d["name"] = rd->name();
        d["cochar_rank"] = rd->cochar_rank();
        std::vector<IntVec> roots, coroots;
        for (int i = 0; i < rd->num_simple(); ++i) {
          roots.push_back(rd->simple_root(i));
          coroots.push_back(rd->simple_coroot(i));
        }
        d["simple_roots"] = roots;
        d["simple_coroots"] = coroots;
        d["positive_roots"] = rd->positive_roots();
        d["weyl_order"] = weyl_group_order(*rd);
        return d;
      },
      py::arg("group"), "Rank, roots and Weyl group size for a named group");

  m.def(
      "is_dominant",
      [](const std::string& group, const Coweight& nu) {
        return is_dominant(*group_of(group), nu);
      },
      py::arg("group"), py::arg("coweight"));
  m.def(
      "dominance_leq",
      [](const std::string& group, const Coweight& mu, const Coweight& lam) {
        return dominance_leq(*group_of(group), mu, lam);
      },
      py::arg("group"), py::arg("mu"), py::arg("lam"));
  m.def(
      "dominant_interval",
      [](const std::string& group, const Coweight& lam) {
        return dominant_interval(*group_of(group), lam);
      },
      py::arg("group"), py::arg("lam"), "Dominant coweights below lam");
  m.def(
      "translation_length",
      [](const std::string& group, const Coweight& nu) {
        DatumPtr rd = group_of(group);
        return length(*rd, AffineWeylElement{nu, weyl_identity(*rd)});
      },
      py::arg("group"), py::arg("nu"), "Iwahori-Weyl length of t^nu");
  m.def(
      "component_group",
      [](const std::string& group, const std::optional<std::vector<int>>& levi) {
        DatumPtr rd = group_of(group);
        ComponentGroup cg = component_group(*rd, levi_from_opt(*rd, levi, true));
        return py::make_tuple(cg.free_rank, cg.torsion);
      },
      py::arg("group"), py::arg("levi") = py::none(),
      "(free rank, torsion orders) of X_* modulo the Levi's coroot lattice");

  m.def(
      "antidominant_generators",
      [](const std::string& group) { return antidominant_monoid(group_of(group)).generators; },
      py::arg("group"));
  m.def(
      "monoid_relations",
      [](const std::string& group, Int bound, bool dominant) {
        AntidominantMonoid mon =
            dominant ? dominant_monoid(group_of(group)) : antidominant_monoid(group_of(group));
        py::list out;
        for (const auto& rel : monoid_relations(mon, bound)) {
          py::dict d;
          d["left"] = rel.left;
          d["right"] = rel.right;
          d["pretty"] = relation_to_string(rel);
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("bound") = 4, py::arg("dominant") = false);
  m.def(
      "factor_over_generators",
      [](const std::string& group, const Coweight& target, bool dominant) {
        AntidominantMonoid mon =
            dominant ? dominant_monoid(group_of(group)) : antidominant_monoid(group_of(group));
        return factor_over_generators(mon, target);
      },
      py::arg("group"), py::arg("target"), py::arg("dominant") = false,
      "Exponents over the generator list, or None if outside the monoid");
  m.def(
      "strata",
      [](const std::string& group) {
        py::list out;
        for (const Stratum& s : strata(*group_of(group)))
          out.append(py::make_tuple(levi_to_py(s.levi), s.rank));
        return out;
      },
      py::arg("group"), "All (levi, rank) strata of the parameter space");
  m.def(
      "coset_decomposition",
      [](const std::string& group, Int bound) {
        py::list out;
        for (const CosetClass& c : coset_decomposition(*group_of(group), bound)) {
          py::dict d;
          d["representative"] = c.representative;
          d["label"] = c.label;
          d["members"] = c.members;
          out.append(d);
        }
        return out;
      },
      py::arg("group"), py::arg("bound"));

  py::class_<HeckeElement>(m, "HeckeElement")
      .def(py::init([](const std::string& group, const std::vector<std::pair<Coweight, Int>>& terms,
                       Int p, const std::string& basis,
                       const std::optional<std::vector<int>>& levi) {
             DatumPtr rd = group_of(group);
             return make_hecke(rd, levi_from_opt(*rd, levi, true), p, basis_of(basis), terms);
           }),
           py::arg("group"), py::arg("terms"), py::arg("p") = 2, py::arg("basis") = "std",
           py::arg("levi") = py::none())
      .def_property_readonly("group", [](const HeckeElement& f) { return f.datum->name(); })
      .def_property_readonly("levi", [](const HeckeElement& f) { return levi_to_py(f.levi); })
      .def_property_readonly("p", [](const HeckeElement& f) { return f.p; })
      .def_property_readonly("basis", [](const HeckeElement& f) { return basis_name(f.basis); })
      .def_property_readonly("terms",
                             [](const HeckeElement& f) {
                               std::vector<std::pair<Coweight, uint32_t>> out(f.coeffs.begin(),
                                                                              f.coeffs.end());
                               return out;
                             })
      .def("to_basis",
           [](const HeckeElement& f, const std::string& basis) {
             return in_basis(f, basis_of(basis));
           })
      .def("satake",
           [](const HeckeElement& f, const std::optional<std::vector<int>>& levi,
              const std::optional<std::string>& out_basis) {
             Levi target = levi_from_opt(*f.datum, levi, false);
             Basis out = out_basis ? basis_of(*out_basis) : f.basis;
             return satake_transform(f, target, out);
           },
           py::arg("levi") = py::none(), py::arg("out_basis") = py::none(),
           "Transform to a sub-Levi (default: the torus)")
      .def("convolve",
           [](const HeckeElement& f, const HeckeElement& g,
              const std::optional<std::string>& out_basis) {
             return convolve(f, g, out_basis ? basis_of(*out_basis) : f.basis);
           },
           py::arg("other"), py::arg("out_basis") = py::none())
      .def("__mul__", [](const HeckeElement& f,
                         const HeckeElement& g) { return convolve(f, g, f.basis); })
      .def("__eq__", [](const HeckeElement& f, const HeckeElement& g) { return f == g; })
      .def("to_json", [](const HeckeElement& f) { return hecke_to_json(f).dump(); })
      .def_static("from_json",
                  [](const std::string& text) { return hecke_from_json(Json::parse(text)); })
      .def("__repr__", [](const HeckeElement& f) {
        return "HeckeElement(" + hecke_to_json(f).dump() + ")";
      });

  py::class_<SatakeParameter>(m, "SatakeParameter")
      .def(py::init(&classify_py), py::arg("group"), py::arg("p"), py::arg("k"),
           py::arg("values"), py::arg("bound") = 6,
           "Classify generator values (field elements as little-endian base-p coefficient "
           "lists) into a stratified parameter")
      .def_property_readonly("group",
                             [](const SatakeParameter& chi) { return chi.datum()->name(); })
      .def_property_readonly("p", [](const SatakeParameter& chi) { return chi.field()->p(); })
      .def_property_readonly("k", [](const SatakeParameter& chi) { return chi.field()->k(); })
      .def_property_readonly("stratum",
                             [](const SatakeParameter& chi) { return levi_to_py(chi.stratum()); })
      .def_property_readonly("rank", &SatakeParameter::rank)
      .def_property_readonly("basis", &SatakeParameter::basis)
      .def_property_readonly("values",
                             [](const SatakeParameter& chi) {
                               std::vector<std::vector<Int>> out;
                               for (FiniteField::Elem v : chi.values_on_basis())
                                 out.push_back(elem_coeffs(*chi.field(), v));
                               return out;
                             })
      .def("evaluate",
           [](const SatakeParameter& chi, const Coweight& nu) {
             return elem_coeffs(*chi.field(), evaluate(chi, nu));
           },
           py::arg("nu"), "Character value on an antidominant coweight")
      .def("generator_values",
           [](const SatakeParameter& chi) {
             std::vector<std::pair<Coweight, std::vector<Int>>> out;
             for (const auto& [g, v] : generator_values(chi))
               out.emplace_back(g, elem_coeffs(*chi.field(), v));
             return out;
           })
      .def("character",
           [](const SatakeParameter& chi, const HeckeElement& f) {
             return elem_coeffs(*chi.field(), hecke_character(chi, f));
           },
           py::arg("element"), "Value of the algebra character on a Hecke element")
      .def("__mul__",
           [](const SatakeParameter& a, const SatakeParameter& b) { return multiply(a, b); })
      .def("__eq__",
           [](const SatakeParameter& a, const SatakeParameter& b) { return a == b; })
      .def_property_readonly("is_unit", [](const SatakeParameter& chi) { return is_unit(chi); })
      .def_property_readonly("is_supersingular",
                             [](const SatakeParameter& chi) { return is_supersingular(chi); })
      .def("inverse", [](const SatakeParameter& chi) { return inverse(chi); })
      .def_static("unit",
                  [](const std::string& group, Int p, int k) {
                    return unit_parameter(group_of(group), make_field(p, k));
                  },
                  py::arg("group"), py::arg("p"), py::arg("k") = 1)
      .def("to_json", [](const SatakeParameter& chi) { return parameter_to_json(chi).dump(); })
      .def_static("from_json",
                  [](const std::string& text, Int bound) {
                    return parameter_from_json(Json::parse(text), bound);
                  },
                  py::arg("text"), py::arg("bound") = 6)
      .def("__repr__", [](const SatakeParameter& chi) {
        return "SatakeParameter(" + parameter_to_json(chi).dump() + ")";
      });

  m.def(
      "mv_count",
      [](int n, Int q, int radius, const Coweight& lam, const Coweight& nu, bool closure,
         int jobs) {
        TruncationWindow w(n, q, radius);
        return mv_count(w, lam, nu, closure, jobs);
      },
      py::arg("n"), py::arg("q"), py::arg("radius"), py::arg("lam"), py::arg("nu"),
      py::arg("closure") = true, py::arg("jobs") = 1,
      "Number of F_q-lattices in S_nu with relative position (in the closure of) lam");
  m.def(
      "satake_table",
      [](int n, Int q, int radius, const Coweight& lam, bool closure, int jobs) {
        TruncationWindow w(n, q, radius);
        py::list out;
        for (const CountRow& r : satake_transform_oracle(w, lam, closure, jobs))
          out.append(count_row_py(r));
        return out;
      },
      py::arg("n"), py::arg("q"), py::arg("radius"), py::arg("lam"), py::arg("closure") = true,
      py::arg("jobs") = 1, "Counted Satake transform of [lam], one row per Iwasawa component");
  m.def(
      "convolution_table",
      [](int n, Int q, int radius, const Coweight& mu1, const Coweight& mu2, int jobs) {
        TruncationWindow w(n, q, radius);
        py::list out;
        for (const ConvolutionRow& r : convolution_oracle(w, mu1, mu2, jobs))
          out.append(conv_row_py(r));
        return out;
      },
      py::arg("n"), py::arg("q"), py::arg("radius"), py::arg("mu1"), py::arg("mu2"),
      py::arg("jobs") = 1, "Counted convolution structure constants, one row per lambda");
}
