// fdpi: command-line front end for compositum construction, factor-base
// generation, divisibility reports, and the standard-vs-composite benchmark.
//
// Exit codes: 0 success, 1 assertion or theorem failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <variant>

#include <CLI11.hpp>

#include "fdpi/bench.hpp"
#include "fdpi/divisibility.hpp"
#include "fdpi/error.hpp"
#include "fdpi/factor_base.hpp"
#include "fdpi/fdpi.hpp"
#include "fdpi/field_builder.hpp"
#include "fdpi/verify.hpp"

namespace {

constexpr int kExitAssertion = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

fdpi::CompositeFieldSpec load_fields(const std::string& path) {
  auto polys = fdpi::read_poly_file(path);
  if (polys.size() < 2) throw UsageError("field file '" + path + "' needs at least two polynomials");
  return fdpi::build_compositum(polys);
}

// Writes to `path`, or stdout for "" / "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int run_compose(const std::string& fields) {
  const auto spec = load_fields(fields);
  std::cout << spec.compositum_poly().to_text() << '\n';
  std::cerr << "degree " << spec.degree() << ": " << spec.compositum_poly() << '\n';
  if (const auto* c = std::get_if<fdpi::CertifiedDisjoint>(&spec.disjointness())) {
    for (const auto& w : c->witnesses) std::cerr << "disjoint: " << w.reason() << '\n';
  } else {
    std::cerr << "disjointness: assumed (no certificate found)\n";
  }
  return 0;
}

int run_factorbase(const std::string& fields, std::uint64_t bound, const std::string& strategy,
                   const std::string& out) {
  const auto spec = load_fields(fields);
  const auto fb = fdpi::generate_factor_base(spec, bound, fdpi::parse_strategy(strategy));
  Output o(out);
  fdpi::write_factor_base(o.stream(), fb);
  return 0;
}

// One row per combination (r, s) whose components divide I_alpha and I_beta.
int run_divides(const std::string& fields, long e, long d, std::uint64_t bound, const std::string& out) {
  const auto spec = load_fields(fields);
  if (spec.subfields().size() != 2) throw UsageError("divides needs exactly two subfields");
  const fdpi::PrincipalIdealSpec ideal(e, d);
  const auto& fa = spec.subfields()[0];
  const auto& fb = spec.subfields()[1];
  const auto chi_a = fdpi::chi_generator(ideal, fa, fb);
  const auto chi_b = fdpi::chi_generator(ideal, fb, fa);
  Output o(out);
  auto& os = o.stream();
  os << "p,r,s,t,divides,exceptional\n";
  int violations = 0;
  for (std::uint64_t pw : fdpi::primes_up_to(bound)) {
    const auto p = fdpi::Prime::trusted(pw);
    std::vector<fdpi::FirstDegreePrime> ra, rb;
    for (auto& q : fdpi::enumerate_fdpi(fa, p))
      if (fdpi::divides_chi(q, chi_a)) ra.push_back(q);
    for (auto& q : fdpi::enumerate_fdpi(fb, p))
      if (fdpi::divides_chi(q, chi_b)) rb.push_back(q);
    for (const auto& r : ra) {
      for (const auto& s : rb) {
        const auto verdict = fdpi::combination_divides(r.residue(), s.residue(), p, ideal, spec);
        const bool exceptional = std::holds_alternative<fdpi::ExceptionalSkip>(verdict);
        const fdpi::FirstDegreePrime parts[] = {r, s};
        const auto t = fdpi::combine(parts, spec);
        const bool divides = fdpi::divides_principal(t, ideal);
        if (divides && !fdpi::converse_components_divide(t, r.residue(), s.residue(), ideal, chi_a, chi_b))
          ++violations;
        os << pw << ',' << r.residue() << ',' << s.residue() << ',' << t.residue() << ',' << (divides ? 1 : 0)
           << ',' << (exceptional ? 1 : 0) << '\n';
      }
    }
  }
  if (violations) {
    std::cerr << violations << " converse divisibility violations\n";
    return kExitAssertion;
  }
  return 0;
}

int run_bench(const std::string& fields, std::uint64_t lower, std::uint64_t bound, unsigned buckets, bool timed,
              unsigned threads, const std::string& out, const std::string& misses) {
  const auto spec = load_fields(fields);
  fdpi::BenchOptions opt;
  opt.lo = lower;
  opt.hi = bound;
  opt.buckets = buckets;
  opt.mode = timed ? fdpi::BenchMode::timed : fdpi::BenchMode::census;
  opt.threads = timed ? 1 : threads;
  const auto report = fdpi::bench_compare(spec, opt);
  Output o(out);
  fdpi::write_bench_csv(o.stream(), report);
  if (!misses.empty()) {
    Output m(misses);
    fdpi::write_misses_csv(m.stream(), report);
  }
  if (timed && report.comp_secs_total() > 0)
    std::cerr << "speedup " << report.std_secs_total() / report.comp_secs_total() << " (sieve "
              << report.sieve_secs << " s excluded)\n";
  for (const auto& miss : report.misses)
    if (miss.simple_root) {
      std::cerr << "missed simple root (" << miss.r << ", " << miss.p << ")\n";
      return kExitAssertion;
    }
  return 0;
}

int run_verify(const std::string& corrupt) {
  const auto report = fdpi::verify_paper_examples({corrupt});
  std::cout << report.text();
  return report.passed() ? 0 : kExitAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"First-degree prime ideals in composite number fields"};
  app.require_subcommand(1);

  std::string fields, out, strategy = "standard", misses, corrupt;
  std::uint64_t bound = 0, lower = 2;
  long e = 0, d = 1;
  unsigned buckets = 10, threads = 1;
  bool timed = false;

  auto* compose = app.add_subcommand("compose", "Print the compositum polynomial of the subfields");
  compose->add_option("--fields", fields, "Subfield polynomial file")->required();

  auto* fb = app.add_subcommand("factorbase", "Write the first-degree primes of norm <= M");
  fb->add_option("--fields", fields, "Subfield polynomial file")->required();
  fb->add_option("--bound", bound, "Norm bound M")->required();
  fb->add_option("--strategy", strategy, "standard or composite")
      ->check(CLI::IsMember({"standard", "composite"}));
  fb->add_option("--out", out, "Output path (default stdout)");

  auto* div = app.add_subcommand("divides", "Divisibility report for (e + d*theta)");
  div->add_option("--fields", fields, "Subfield polynomial file")->required();
  div->add_option("-e", e, "Constant term e")->required();
  div->add_option("-d", d, "Coefficient d")->required();
  div->add_option("--bound", bound, "Norm bound M")->required();
  div->add_option("--out", out, "Output path (default stdout)");

  auto* bench = app.add_subcommand("bench", "Compare the standard and composite strategies");
  bench->add_option("--fields", fields, "Subfield polynomial file")->required();
  bench->add_option("--bound", bound, "Upper prime bound M")->required();
  bench->add_option("--lower", lower, "Lower prime bound (default 2)");
  bench->add_option("--buckets", buckets, "Number of equal-width prime ranges")->check(CLI::PositiveNumber);
  bench->add_flag("--timed", timed, "Sequential timing run instead of a census");
  bench->add_option("--threads", threads, "Census worker threads")->check(CLI::PositiveNumber);
  bench->add_option("--out", out, "CSV output path (default stdout)");
  bench->add_option("--misses", misses, "Census: write missed (p, r) with simple-root status");

  auto* verify = app.add_subcommand("verify-paper", "Replay the published worked examples");
  verify->add_option("--corrupt", corrupt, "Perturb one expected value (negative control)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*compose) return run_compose(fields);
    if (*fb) return run_factorbase(fields, bound, strategy, out);
    if (*div) return run_divides(fields, e, d, bound, out);
    if (*bench) return run_bench(fields, lower, bound, buckets, timed, threads, out, misses);
    if (*verify) return run_verify(corrupt);
  } catch (const UsageError& err) {
    std::cerr << "fdpi: " << err.what() << '\n';
    return kExitUsage;
  } catch (const fdpi::Error& err) {
    std::cerr << "fdpi: " << err.what() << '\n';
    const bool assertion =
        err.kind() == fdpi::ErrorKind::internal || err.kind() == fdpi::ErrorKind::theorem_violation;
    return assertion ? kExitAssertion : kExitUsage;
  }
  return kExitUsage;
}
