#include <optional>
#include <string>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gkmod/job.hpp"

namespace py = pybind11;
using namespace gkmod;

namespace {

py::object fraction(const Rational& x) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(to_string(x));
}

// int, Fraction or "p/q"; floats are refused by parse_rational.
Rational rational_from(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) throw ParseError("floats are not exact; pass int, Fraction or 'p/q'");
  return parse_rational(py::str(obj).cast<std::string>());
}

RVector vector_from(const py::handle& obj) {
  RVector out;
  if (py::isinstance<py::int_>(obj) || py::isinstance<py::str>(obj)) return {rational_from(obj)};
  for (const auto& item : py::iter(obj)) out.push_back(rational_from(item));
  return out;
}

py::list vector_to(const RVector& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

template <class W>
py::list weight_to(const W& w) {
  return vector_to(w.coords());
}

template <class W>
py::list weights_to(const std::vector<W>& ws) {
  py::list out;
  for (const auto& w : ws) out.append(weight_to(w));
  return out;
}

py::list matrix_to(const RMatrix& m) {
  py::list out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.append(vector_to(m.row(i)));
  return out;
}

// [(weight, multiplicity), ...] in canonical order.
py::list multiset_to(const WeightMultiset<TWeight>& ms) {
  py::list out;
  for (const auto& [w, m] : ms) out.append(py::make_tuple(weight_to(w), m));
  return out;
}

WeightMultiset<TWeight> multiset_from(const py::handle& obj) {
  WeightMultiset<TWeight> out;
  for (const auto& item : py::iter(obj)) {
    if (py::isinstance<py::tuple>(item) && py::len(item) == 2) {
      auto t = item.cast<py::tuple>();
      out.add(TWeight(vector_from(t[0])), t[1].cast<int>());
    } else {
      out.add(TWeight(vector_from(item)));
    }
  }
  return out;
}

py::dict parabolic_to(const ReductivePair& p, const CompatibleParabolic& par) {
  py::dict d;
  d["lambda"] = weight_to(par.lambda);
  d["regular"] = is_regular(p, par.lambda);
  d["minimal"] = par.minimal;
  d["n_roots"] = weights_to(par.n_roots);
  d["m_roots"] = weights_to(par.m_roots);
  d["ch_t_n"] = multiset_to(par.ch_t_n);
  d["ch_t_n_cap_k"] = multiset_to(par.ch_t_n_cap_k);
  d["ch_t_n_cap_kperp"] = multiset_to(par.ch_t_n_cap_kperp);
  d["rho_n"] = weight_to(par.rho_n);
  d["rho_n_perp"] = weight_to(par.rho_n_perp);
  d["s"] = par.s;
  d["r"] = par.r;
  return d;
}

py::object optional_weight(const std::optional<TWeight>& w) {
  return w ? py::object(weight_to(*w)) : py::object(py::none());
}

py::dict genericity_to(const ReductivePair& p, const GenericityReport& g) {
  py::dict d;
  d["holds"] = g.holds;
  d["condition1"] = g.condition1_ok;
  d["condition2"] = g.condition2_ok;
  d["failing_root"] = optional_weight(g.failing_root);
  d["failing_subset"] = g.failing_subset ? py::object(multiset_to(*g.failing_subset)) : py::object(py::none());
  d["failing_rho_s"] = optional_weight(g.failing_rho_s);
  d["failing_value"] = g.failing_value ? fraction(*g.failing_value) : py::object(py::none());
  d["parabolic"] = parabolic_to(p, g.parabolic);
  return d;
}

RootSystem root_system_of(const std::string& type) { return build_root_system(LieType::parse(type)); }

}  // namespace

PYBIND11_MODULE(_gkmod, m) {
  m.doc() = "Exact k-type computations for fundamental series of reductive pairs";

  static py::exception<Error> base(m, "Error");
  static py::exception<ParseError> parse_exc(m, "ParseError", base.ptr());
  static py::exception<ValidationError> validation_exc(m, "ValidationError", base.ptr());
  static py::exception<CapExceeded> cap_exc(m, "CapExceeded", base.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_exc.ptr(), e.what());
    } catch (const ValidationError& e) {
      PyErr_SetString(validation_exc.ptr(), e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(cap_exc.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(base.ptr(), e.what());
    }
  });

  py::class_<RootSystem>(m, "RootSystem")
      .def(py::init(&root_system_of), py::arg("lie_type"))
      .def_property_readonly("lie_type", [](const RootSystem& rs) { return rs.lie_type().to_string(); })
      .def_property_readonly("rank", &RootSystem::rank)
      .def_property_readonly("form", [](const RootSystem& rs) { return matrix_to(rs.form()); })
      .def_property_readonly("simple_roots", [](const RootSystem& rs) { return weights_to(rs.simple_roots()); })
      .def_property_readonly("positive_roots", [](const RootSystem& rs) { return weights_to(rs.positive_roots()); })
      .def_property_readonly("rho_tilde", [](const RootSystem& rs) { return weight_to(rs.rho_tilde()); })
      .def("cartan", [](const RootSystem& rs, std::size_t i, std::size_t j) { return rs.cartan(i, j); })
      .def(
          "weyl_group",
          [](const RootSystem& rs, std::size_t max_order) {
            WeylLimits limits;
            limits.max_order = max_order;
            py::list out;
            for (const auto& w : weyl_group(rs, limits)) out.append(py::make_tuple(w.word, w.length));
            return out;
          },
          py::arg("max_order") = WeylLimits{}.max_order)
      .def("weyl_dim", [](const RootSystem& rs, const py::object& highest) {
        return weyl_dim(rs, GWeight(vector_from(highest)));
      });

  py::class_<ReductivePair>(m, "ReductivePair")
      .def_property_readonly("g", &ReductivePair::g)
      .def_property_readonly("rank_t", &ReductivePair::rank_t)
      .def_property_readonly("embedding", [](const ReductivePair& p) { return to_string(p.embedding_kind()); })
      .def_property_readonly("labels", &ReductivePair::labels)
      .def_property_readonly("restriction", [](const ReductivePair& p) { return matrix_to(p.restriction()); })
      .def_property_readonly("t_form", [](const ReductivePair& p) { return matrix_to(p.t_form()); })
      .def_property_readonly("k_positive_roots",
                             [](const ReductivePair& p) { return weights_to(p.k_positive_roots()); })
      .def_property_readonly("rho", [](const ReductivePair& p) { return weight_to(p.rho()); })
      .def_property_readonly("delta_t", [](const ReductivePair& p) { return weights_to(p.delta_t()); })
      .def("restrict", [](const ReductivePair& p, const py::object& x) {
        return weight_to(p.restrict(GWeight(vector_from(x))));
      })
      .def("lift", [](const ReductivePair& p, const py::object& y) {
        return weight_to(p.lift(TWeight(vector_from(y))));
      })
      .def("t_pair", [](const ReductivePair& p, const py::object& x, const py::object& y) {
        return fraction(p.t_pair(TWeight(vector_from(x)), TWeight(vector_from(y))));
      });

  m.def(
      "sl2_pair",
      [](const std::string& type, const std::vector<int>& labels) {
        return make_sl2_pair(root_system_of(type), labels);
      },
      py::arg("lie_type"), py::arg("labels"));
  m.def(
      "cartan_pair", [](const std::string& type) { return make_cartan_pair(root_system_of(type)); },
      py::arg("lie_type"));
  m.def(
      "levi_pair",
      [](const std::string& type, const std::set<int>& simple) { return make_levi_pair(root_system_of(type), simple); },
      py::arg("lie_type"), py::arg("simple_roots"));
  m.def(
      "explicit_pair",
      [](const std::string& type, const py::list& restriction, const py::list& k_simple_roots,
         const py::list& k_coroots) {
        RootSystem g = root_system_of(type);
        std::vector<RVector> rows;
        for (const auto& r : restriction) rows.push_back(vector_from(r));
        std::vector<TWeight> roots;
        for (const auto& r : k_simple_roots) roots.emplace_back(vector_from(r));
        std::vector<RVector> coroots;
        for (const auto& c : k_coroots) coroots.push_back(vector_from(c));
        return make_explicit_pair(g, RMatrix::from_rows(rows, g.rank()), std::move(roots), std::move(coroots));
      },
      py::arg("lie_type"), py::arg("restriction"), py::arg("k_simple_roots"), py::arg("k_coroots"));

  m.def(
      "compatible_parabolic",
      [](const ReductivePair& p, const py::object& lambda) {
        return parabolic_to(p, compatible_parabolic(p, TWeight(vector_from(lambda))));
      },
      py::arg("pair"), py::arg("lam"));
  m.def(
      "is_generic",
      [](const ReductivePair& p, const py::object& mu) { return genericity_to(p, is_generic(p, TWeight(vector_from(mu)))); },
      py::arg("pair"), py::arg("mu"));
  m.def("sl2_threshold", &sl2_threshold, py::arg("pair"));
  m.def(
      "norm2_shifted",
      [](const ReductivePair& p, const py::object& mu) { return fraction(norm2_shifted(p, TWeight(vector_from(mu)))); },
      py::arg("pair"), py::arg("mu"));
  m.def(
      "partition_count",
      [](const ReductivePair& p, const py::object& generators, const py::object& target, const py::object& grading) {
        return partition_count(p, multiset_from(generators), TWeight(vector_from(target)),
                               TWeight(vector_from(grading)));
      },
      py::arg("pair"), py::arg("generators"), py::arg("target"), py::arg("grading"));
  m.def(
      "kostant_weights",
      [](const ReductivePair& p, const py::object& delta) {
        py::list out;
        for (const auto& t : kostant_weights(p, TWeight(vector_from(delta)))) out.append(py::make_tuple(t.length, weight_to(t.weight)));
        return out;
      },
      py::arg("pair"), py::arg("delta"));

  m.def(
      "fundseries",
      [](const ReductivePair& p, const py::object& nu, const py::object& omega, const py::object& lam,
         const py::object& cutoff) {
        if (nu.is_none() == omega.is_none()) throw ValidationError("give exactly one of nu and omega");
        GWeight weight = nu.is_none() ? p.lift(TWeight(vector_from(omega))) : GWeight(vector_from(nu));
        CompatibleParabolic par =
            lam.is_none() ? fundamental_parabolic(p, weight) : compatible_parabolic(p, TWeight(vector_from(lam)));
        InducingModule e = make_inducing_module(p, par, weight);
        Rational c = cutoff.is_none() ? norm2_shifted(p, e.mu) + 10 * p.t_pair(par.rho_n, par.rho_n)
                                      : rational_from(cutoff);
        MultiplicityTable table = ktype_table(p, par, e, c);
        py::list entries;
        for (const auto& entry : table.entries)
          entries.append(py::make_tuple(weight_to(entry.delta), entry.value, fraction(entry.norm2)));
        auto check = verify_minimal_ktype(table, e, p);
        py::dict d;
        d["parabolic"] = parabolic_to(p, par);
        d["omega"] = weight_to(e.omega);
        d["mu"] = weight_to(e.mu);
        d["dim_e"] = e.dim_e;
        d["cutoff"] = fraction(table.cutoff);
        d["s"] = table.s;
        d["r"] = table.r;
        d["interpretation"] = table.interpretation();
        d["entries"] = entries;
        d["infinitesimal_character"] = weight_to(infinitesimal_character(p.g(), e).representative);
        d["minimal_ktype_ok"] = check.passed();
        return d;
      },
      py::arg("pair"), py::arg("nu") = py::none(), py::arg("omega") = py::none(), py::arg("lam") = py::none(),
      py::arg("cutoff") = py::none());

  m.def(
      "run_job",
      [](const std::string& config, const std::string& command) {
        JobSpec job = parse_job(config);
        if (!command.empty()) {
          if (!job.command.empty() && job.command != command)
            throw ParseError("config command '" + job.command + "' conflicts with '" + command + "'");
          job.command = command;
        }
        JobResult r = run_job(job);
        return py::make_tuple(r.exit_code, r.human, r.machine);
      },
      py::arg("config"), py::arg("command") = "");
}
