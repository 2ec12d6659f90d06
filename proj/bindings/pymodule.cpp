// Python bindings for the main operations. Arbitrary-precision values cross
// the boundary as Python ints (via decimal strings); orbit counts come back
// as fractions.Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dold/congruence.hpp"
#include "dold/conjectures.hpp"
#include "dold/errors.hpp"
#include "dold/realizability.hpp"
#include "dold/reports.hpp"
#include "dold/sequence.hpp"
#include "dold/stirling.hpp"
#include "dold/transforms.hpp"

namespace py = pybind11;
using namespace dold;

namespace {

py::int_ to_py(const Integer& z) {
  return py::reinterpret_steal<py::int_>(
      PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

Integer from_py(py::handle h) {
  if (!py::isinstance<py::int_>(h)) {
    throw py::type_error("expected an int");
  }
  return Integer(py::str(h).cast<std::string>(), 10);
}

py::object to_fraction(const Rational& q) {
  static py::object Fraction =
      py::module_::import("fractions").attr("Fraction");
  return Fraction(to_py(q.num()), to_py(q.den()));
}

std::vector<Integer> values_from_list(const py::sequence& values) {
  std::vector<Integer> out;
  out.reserve(py::len(values));
  for (py::handle h : values) out.push_back(from_py(h));
  return out;
}

IntegerSequencePrefix prefix_from_list(const py::sequence& values) {
  return IntegerSequencePrefix(values_from_list(values), "python");
}

py::list to_int_list(std::span<const Integer> values) {
  py::list out;
  for (const Integer& v : values) out.append(to_py(v));
  return out;
}

StirlingKind kind_from_name(const std::string& name) {
  if (name == "first" || name == "first-unsigned") {
    return StirlingKind::first_unsigned;
  }
  if (name == "first-signed") return StirlingKind::first_signed;
  if (name == "second") return StirlingKind::second;
  throw std::invalid_argument("kind must be first, first-signed, or second");
}

py::dict dold_report_dict(const DoldReport& report) {
  py::dict out;
  out["horizon"] = report.horizon;
  out["realizable"] = report.realizable_up_to_horizon();
  out["first_dold_violation"] =
      report.first_dold_violation ? py::object(py::int_(*report.first_dold_violation))
                                  : py::object(py::none());
  out["first_sign_violation"] =
      report.first_sign_violation ? py::object(py::int_(*report.first_sign_violation))
                                  : py::object(py::none());
  py::list denominators;
  for (const Integer& d : report.denominators) denominators.append(to_py(d));
  out["denominators"] = denominators;
  return out;
}

py::dict failure_dict(const FailureResult& result) {
  py::dict out;
  out["horizon"] = result.horizon;
  out["failure"] = to_py(result.value);
  out["sign_ok"] = result.sign_ok;
  py::list witnesses;
  for (const PrimePowerWitness& w : result.witnesses) {
    py::dict entry;
    entry["prime"] = w.prime;
    entry["exponent"] = w.exponent;
    entry["n"] = w.index;
    witnesses.append(entry);
  }
  out["witnesses"] = witnesses;
  return out;
}

}  // namespace

PYBIND11_MODULE(_dold, m) {
  m.doc() = "exact realizability checks and Stirling sequence generators";

  py::register_exception<NotRealizableError>(m, "NotRealizable",
                                             PyExc_ValueError);
  py::register_exception<IngestError>(m, "IngestError", PyExc_ValueError);

  m.def("mobius", &mobius, py::arg("n"));
  m.def(
      "radical", [](py::int_ m_) { return to_py(radical(from_py(m_))); },
      py::arg("m"));
  m.def(
      "binomial", [](uint64_t n, uint64_t k) { return to_py(binomial(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "factorial", [](uint64_t n) { return to_py(factorial(n)); },
      py::arg("n"));
  m.def(
      "falling_factorial",
      [](py::int_ x, uint64_t n) {
        return to_py(falling_factorial(from_py(x), n));
      },
      py::arg("x"), py::arg("n"));
  m.def(
      "p_adic_valuation",
      [](py::int_ x, uint64_t p) { return p_adic_valuation(from_py(x), p); },
      py::arg("x"), py::arg("p"));

  m.def(
      "stirling1",
      [](uint64_t n, uint64_t k) { return to_py(stirling1_unsigned(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "stirling1_signed",
      [](uint64_t n, uint64_t k) { return to_py(stirling1_signed(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "stirling2",
      [](uint64_t n, uint64_t k) { return to_py(stirling2(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def(
      "sequence_prefix",
      [](const std::string& kind, uint64_t k, uint64_t n) {
        return to_int_list(sequence_prefix(kind_from_name(kind), k, n).values());
      },
      py::arg("kind"), py::arg("k"), py::arg("n"));

  m.def(
      "mobius_transform",
      [](const py::sequence& values) {
        auto out = mobius_transform(prefix_from_list(values));
        return to_int_list(out);
      },
      py::arg("values"));
  m.def(
      "orbit_counts",
      [](const py::sequence& values) {
        auto counts = orbit_counts(prefix_from_list(values));
        py::list out;
        for (const Rational& q : counts.values) out.append(to_fraction(q));
        return out;
      },
      py::arg("values"));
  m.def(
      "fix_counts_from_orbits",
      [](const py::sequence& orbits) {
        auto prefix = fix_counts_from_orbits(values_from_list(orbits));
        return to_int_list(prefix.values());
      },
      py::arg("orbits"));

  m.def(
      "dold_check",
      [](const py::sequence& values) {
        return dold_report_dict(dold_check(prefix_from_list(values)));
      },
      py::arg("values"));
  m.def(
      "failure_truncated",
      [](const py::sequence& values) {
        return failure_dict(failure_truncated(prefix_from_list(values)));
      },
      py::arg("values"));
  m.def(
      "repair",
      [](const py::sequence& values, py::int_ multiplier) {
        auto repaired = repair(prefix_from_list(values), from_py(multiplier));
        return to_int_list(repaired.values());
      },
      py::arg("values"), py::arg("multiplier"));
  m.def(
      "realize",
      [](const py::sequence& values) {
        return to_int_list(realize(prefix_from_list(values)));
      },
      py::arg("values"));
  m.def(
      "ingest_bfile",
      [](const std::string& path) {
        auto prefix = ingest_bfile(std::filesystem::path(path));
        return py::make_tuple(prefix.label(), to_int_list(prefix.values()));
      },
      py::arg("path"));
  m.def(
      "growth_sufficiency",
      [](const py::sequence& values) {
        auto result = growth_sufficiency(prefix_from_list(values));
        return py::make_tuple(result.ok,
                              result.first_counterexample
                                  ? py::object(py::int_(*result.first_counterexample))
                                  : py::object(py::none()));
      },
      py::arg("values"));
  m.def(
      "verify_scaled_second_kind_dold",
      [](uint64_t k, py::int_ multiplier, uint64_t horizon) -> py::object {
        auto violation =
            verify_scaled_second_kind_dold(k, from_py(multiplier), horizon);
        return violation ? py::object(py::int_(*violation))
                         : py::object(py::none());
      },
      py::arg("k"), py::arg("multiplier"), py::arg("horizon"));

  m.def("lemma3_residue", &lemma3_residue, py::arg("p"), py::arg("k"));
  m.def("lemma3_one_criterion", &lemma3_one_criterion, py::arg("p"),
        py::arg("k"));
  m.def("lemma4_residue", &lemma4_residue, py::arg("p"), py::arg("k"));
  m.def("lemma4_one_criterion", &lemma4_one_criterion, py::arg("p"),
        py::arg("k"));
  m.def("witness_prime_second_kind", &witness_prime_second_kind, py::arg("k"));
  m.def(
      "witness_prime_first_kind",
      [](uint64_t k, uint64_t prime_bound) {
        py::list out;
        for (const auto& cert : witness_prime_first_kind(k, prime_bound)) {
          py::dict entry;
          entry["k"] = cert.k;
          entry["p"] = cert.p;
          entry["residue"] = cert.residue;
          entry["orbit_valuation"] = cert.orbit_valuation;
          out.append(entry);
        }
        return out;
      },
      py::arg("k"), py::arg("prime_bound"));
  m.def(
      "sigma_orbit_oracle",
      [](uint64_t p, uint64_t a, uint64_t b) {
        auto result = sigma_orbit_oracle(p, a, b);
        py::dict out;
        out["fixed_subsets"] = result.fixed_subsets;
        out["residue_mod_p"] = result.residue_mod_p;
        out["binomial_mod_p"] = result.binomial_mod_p;
        out["power_is_identity"] = result.power_is_identity;
        out["subset_count"] = result.subset_count;
        return out;
      },
      py::arg("p"), py::arg("a"), py::arg("b"));
  m.def("scaled_dold_claim_check", &scaled_dold_claim_check, py::arg("k"),
        py::arg("p"), py::arg("n"));

  m.def(
      "repair_table",
      [](uint64_t k_max, uint64_t horizon) {
        PrefixProvider provider;
        SecondKindScanContext ctx(provider);
        py::list out;
        for (const RepairTableRow& row : repair_table(ctx, k_max, horizon)) {
          py::dict entry;
          entry["k"] = row.k;
          entry["failure"] = to_py(row.failure);
          py::list factors;
          for (const auto& [p, e] : row.factorization) {
            factors.append(py::make_tuple(p, e));
          }
          entry["factorization"] = factors;
          entry["ratio"] = to_fraction(row.ratio);
          out.append(entry);
        }
        return out;
      },
      py::arg("k_max"), py::arg("horizon"));
}
