#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <gmpxx.h>

#include "fdpi/bench.hpp"
#include "fdpi/divisibility.hpp"
#include "fdpi/error.hpp"
#include "fdpi/factor_base.hpp"
#include "fdpi/fdpi.hpp"
#include "fdpi/field_builder.hpp"
#include "fdpi/resultant.hpp"
#include "fdpi/verify.hpp"

namespace py = pybind11;

// Python int <-> mpz_class through the decimal string form.
namespace pybind11::detail {
template <>
struct type_caster<mpz_class> {
  PYBIND11_TYPE_CASTER(mpz_class, const_name("int"));

  bool load(handle src, bool) {
    if (!PyLong_Check(src.ptr())) return false;
    value = mpz_class(py::str(src).cast<std::string>());
    return true;
  }

  static handle cast(const mpz_class& v, return_value_policy, handle) {
    return PyLong_FromString(v.get_str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

using Coeffs = std::vector<mpz_class>;

fdpi::IntPoly poly(const Coeffs& c) { return fdpi::IntPoly(c); }
Coeffs coeffs(const fdpi::IntPoly& p) { return p.coeffs(); }

fdpi::CompositeFieldSpec compositum(const std::vector<Coeffs>& fields) {
  std::vector<fdpi::IntPoly> polys;
  for (const auto& c : fields) polys.push_back(poly(c));
  return fdpi::build_compositum(polys);
}

}  // namespace

PYBIND11_MODULE(_fdpi, m) {
  m.doc() = "First-degree prime ideals in composite number fields";

  static py::handle error = py::exception<fdpi::Error>(m, "Error", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fdpi::Error& e) {
      py::object exc = py::reinterpret_borrow<py::object>(error)(e.what());
      exc.attr("kind") = fdpi::to_string(e.kind());
      PyErr_SetObject(error.ptr(), exc.ptr());
    }
  });

  m.def(
      "composite_resultant", [](const Coeffs& f, const Coeffs& g) { return coeffs(fdpi::composite_resultant(poly(f), poly(g))); },
      py::arg("f"), py::arg("g"), "Res_x(f(x), g(y - x)) as ascending coefficients in y.");
  m.def(
      "discriminant", [](const Coeffs& f) { return fdpi::discriminant(poly(f)); }, py::arg("f"));

  m.def(
      "roots_mod_p",
      [](const Coeffs& f, const mpz_class& p) {
        return fdpi::roots_mod_p(fdpi::reduce_mod(poly(f), fdpi::Prime(p)));
      },
      py::arg("f"), py::arg("p"), "Distinct roots of f modulo the prime p, ascending.");

  m.def(
      "build_compositum",
      [](const std::vector<Coeffs>& fields) {
        const auto spec = compositum(fields);
        py::dict out;
        out["polynomial"] = coeffs(spec.compositum_poly());
        out["degree"] = spec.degree();
        out["certified"] = spec.certified();
        py::list reasons;
        if (const auto* c = std::get_if<fdpi::CertifiedDisjoint>(&spec.disjointness()))
          for (const auto& w : c->witnesses) reasons.append(w.reason());
        out["certificates"] = reasons;
        return out;
      },
      py::arg("fields"));

  m.def(
      "factor_base",
      [](const std::vector<Coeffs>& fields, std::uint64_t bound, const std::string& strategy) {
        const auto fb = fdpi::generate_factor_base(compositum(fields), bound, fdpi::parse_strategy(strategy));
        std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
        for (const auto& e : fb.entries) out.emplace_back(e.p, e.r);
        return out;
      },
      py::arg("fields"), py::arg("bound"), py::arg("strategy") = "standard",
      "Sorted (p, r) pairs with p <= bound.");

  m.def(
      "bench_census",
      [](const std::vector<Coeffs>& fields, std::uint64_t bound, unsigned buckets, std::uint64_t lower,
         unsigned threads) {
        fdpi::BenchOptions opt;
        opt.lo = lower;
        opt.hi = bound;
        opt.buckets = buckets;
        opt.threads = threads;
        const auto report = fdpi::bench_compare(compositum(fields), opt);
        py::list rows, misses;
        for (const auto& r : report.rows)
          rows.append(py::make_tuple(r.bucket_lo, r.bucket_hi, r.std_count, r.comp_count));
        for (const auto& x : report.misses) misses.append(py::make_tuple(x.p, x.r, x.simple_root));
        return py::make_tuple(rows, misses);
      },
      py::arg("fields"), py::arg("bound"), py::arg("buckets") = 10, py::arg("lower") = 2, py::arg("threads") = 1,
      "Returns ([(lo, hi, std_count, comp_count)], [(p, r, simple_root)]).");

  m.def(
      "chi_generator",
      [](const std::vector<Coeffs>& fields, const mpz_class& e, const mpz_class& d) {
        const auto spec = compositum(fields);
        if (spec.subfields().size() != 2) fdpi::fail(fdpi::ErrorKind::invalid_argument, "need two subfields");
        const fdpi::PrincipalIdealSpec ideal(e, d);
        const auto& a = spec.subfields()[0];
        const auto& b = spec.subfields()[1];
        return py::make_tuple(coeffs(fdpi::chi_generator(ideal, a, b).poly_in_alpha),
                              coeffs(fdpi::chi_generator(ideal, b, a).poly_in_alpha));
      },
      py::arg("fields"), py::arg("e"), py::arg("d"));

  m.def(
      "ideal_norm",
      [](const Coeffs& h, const mpz_class& e, const mpz_class& d) {
        return fdpi::ideal_norm(fdpi::PrincipalIdealSpec(e, d), poly(h));
      },
      py::arg("h"), py::arg("e"), py::arg("d"), "Signed norm of e + d*theta, theta a root of h.");

  m.def(
      "combination_divides",
      [](const std::vector<Coeffs>& fields, const mpz_class& r, const mpz_class& s, const mpz_class& p,
         const mpz_class& e, const mpz_class& d) -> py::object {
        const auto verdict =
            fdpi::combination_divides(r, s, fdpi::Prime(p), fdpi::PrincipalIdealSpec(e, d), compositum(fields));
        if (const auto* dv = std::get_if<fdpi::Divides>(&verdict)) return py::cast(dv->combined.residue());
        return py::none();
      },
      py::arg("fields"), py::arg("r"), py::arg("s"), py::arg("p"), py::arg("e"), py::arg("d"),
      "Residue t of the combined prime, or None for an exceptional pair.");

  m.def(
      "verify_paper_examples",
      [](const std::string& corrupt) {
        const auto report = fdpi::verify_paper_examples({corrupt});
        return py::make_tuple(report.passed(), report.text());
      },
      py::arg("corrupt") = "");
}
