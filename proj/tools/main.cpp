// Command-line front-end: q-expansions, trace tables, class numbers,
// identity verification, and asymptotic diagnostics with text or JSON output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
//             3 internal precondition failure.

#include "CLI11.hpp"

#include "singmod/arith.hpp"
#include "singmod/forms.hpp"
#include "singmod/identities.hpp"
#include "singmod/numeric.hpp"
#include "singmod/quadforms.hpp"
#include "singmod/traces.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

long default_precision() {
  if (const char* env = std::getenv("SINGMOD_PRECISION")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 64) return v;
  }
  return 128;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw UsageError("cannot open output file: " + output_path);
  out << text;
}

// ---------------------------------------------------------------------------
// qexp
// ---------------------------------------------------------------------------

// Exponent/coefficient pairs: dense over the integer window for scale-1
// series, sparse (stored entries only) on finer lattices such as eta's.
std::vector<std::pair<std::string, singmod::Rational>> qexp_rows(
    const singmod::QSeries& s, long hi) {
  std::vector<std::pair<std::string, singmod::Rational>> rows;
  if (s.scale() == 1) {
    for (long n = s.floor_exp(); n <= hi && n < s.order(); ++n)
      rows.emplace_back(std::to_string(n), s.coeff_q(n));
  } else {
    for (const auto& [e, c] : s.coeffs()) {
      const singmod::Rational x = singmod::make_fraction(e, s.scale());
      if (x > singmod::Rational(hi)) break;
      rows.emplace_back(singmod::to_string(x), c);
    }
  }
  return rows;
}

std::string qexp_series_json(const std::string& name, const singmod::QSeries& s, long hi) {
  std::ostringstream os;
  os << "{\"name\":\"" << name << "\",\"coefficients\":{";
  bool first = true;
  for (const auto& [e, c] : qexp_rows(s, hi)) {
    if (!first) os << ",";
    first = false;
    os << "\"" << e << "\":\"" << singmod::to_string(c) << "\"";
  }
  os << "}}\n";
  return os.str();
}

std::string qexp_series_text(const singmod::QSeries& s, long hi) {
  std::ostringstream os;
  for (const auto& [e, c] : qexp_rows(s, hi))
    os << e << "\t" << singmod::to_string(c) << "\n";
  return os.str();
}

std::string qexp_table_json(const std::string& name, const std::vector<singmod::Integer>& t,
                            long lo, long hi) {
  std::ostringstream os;
  os << "{\"name\":\"" << name << "\",\"coefficients\":{";
  bool first = true;
  for (long n = lo; n <= hi; ++n) {
    if (!first) os << ",";
    first = false;
    os << "\"" << n << "\":\"" << t[static_cast<std::size_t>(n)].get_str() << "\"";
  }
  os << "}}\n";
  return os.str();
}

std::string qexp_table_text(const std::vector<singmod::Integer>& t, long lo, long hi) {
  std::ostringstream os;
  for (long n = lo; n <= hi; ++n)
    os << n << "\t" << t[static_cast<std::size_t>(n)].get_str() << "\n";
  return os.str();
}

int cmd_qexp(const std::string& name, long order, const std::string& format,
             const std::string& output_path) {
  if (order < 1) throw UsageError("qexp: --order must be >= 1");
  std::string text;
  if (name == "spt") {
    const std::vector<singmod::Integer> t = singmod::spt_table(order);
    text = (format == "json") ? qexp_table_json(name, t, 1, order)
                              : qexp_table_text(t, 1, order);
  } else if (name == "partition") {
    const std::vector<singmod::Integer> t = singmod::partition_table(order);
    text = (format == "json") ? qexp_table_json(name, t, 0, order)
                              : qexp_table_text(t, 0, order);
  } else {
    singmod::QSeries s = [&] {
      if (name == "f3") return singmod::build_f3(order);
      try {
        return singmod::build_form(name, order);
      } catch (const singmod::error& e) {
        throw UsageError(std::string("qexp: ") + e.what());
      }
    }();
    s.tighten_floor();
    text = (format == "json") ? qexp_series_json(name, s, order - 1)
                              : qexp_series_text(s, order - 1);
  }
  emit(text, output_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// traces
// ---------------------------------------------------------------------------

int cmd_traces(int level, long m, long dmax, bool starred, bool numeric,
               long precision, const std::string& format,
               const std::string& output_path) {
  if (level != 1 && level != 2) throw UsageError("traces: --level must be 1 or 2");
  if (m < 1) throw UsageError("traces: --m must be >= 1");
  if (starred && level != 2) throw UsageError("traces: --starred requires --level 2");
  singmod::TraceTable table;
  if (numeric) {
    table = singmod::numeric_trace_table(level, starred, m, dmax, precision);
  } else if (level == 1 && m == 1) {
    table = singmod::t1_closed_form(dmax);
  } else if (level == 1 && m == 2) {
    table = singmod::t2_via_hecke(singmod::t1_closed_form(4 * dmax), dmax);
  } else if (level == 2) {
    table = singmod::t_level2_bootstrap(m, dmax, starred);
  } else {
    throw UsageError(
        "traces: no exact route for level 1 with --m >= 3; pass --numeric");
  }
  emit(format == "json" ? table.to_json() + "\n" : table.to_csv(), output_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// classnum
// ---------------------------------------------------------------------------

std::string classnum_context_name(const std::string& context) {
  if (context == "level1" || context == "gamma0" || context == "fricke") return context;
  throw UsageError("classnum: --context must be level1, gamma0, or fricke");
}

singmod::ClassList classnum_enumerate(const std::string& context, long d, long p) {
  if (context == "level1") return singmod::enumerate_classes(d);
  if (context == "gamma0") {
    const std::vector<long> hs = singmod::valid_h_values(d, p);
    return singmod::enumerate_classes_gamma0(d, p, hs.front());
  }
  return singmod::enumerate_classes_fricke(d, p);
}

std::string classlist_json(const singmod::ClassList& cl) {
  std::ostringstream os;
  os << "{\"d\":" << cl.d << ",\"context\":\"" << cl.context << "\"";
  if (cl.h >= 0) os << ",\"h\":" << cl.h;  // the Gamma_0 class-set parameter
  os << ",\"count\":" << cl.reps.size() << ",\"hurwitz\":\""
     << singmod::to_string(singmod::hurwitz_H(cl.d)) << "\",\"reps\":[";
  for (std::size_t i = 0; i < cl.reps.size(); ++i) {
    if (i) os << ",";
    os << "{\"a\":" << cl.reps[i].a.get_str() << ",\"b\":" << cl.reps[i].b.get_str()
       << ",\"c\":" << cl.reps[i].c.get_str() << ",\"stabilizer\":" << cl.stab[i] << "}";
  }
  os << "]}";
  return os.str();
}

int cmd_classnum(long d, long dmax, const std::string& context_flag, long p,
                 const std::string& format, const std::string& output_path) {
  const std::string context = classnum_context_name(context_flag);
  std::ostringstream os;
  if (d > 0) {
    if (!singmod::trace_admissible(1, d))
      throw UsageError("classnum: -d must be a positive discriminant (0 or 3 mod 4)");
    const singmod::ClassList cl = classnum_enumerate(context, d, p);
    if (format == "json") {
      os << classlist_json(cl) << "\n";
    } else {
      os << "d = " << cl.d << "  classes = " << cl.reps.size()
         << "  H = " << singmod::to_string(singmod::hurwitz_H(cl.d)) << "\n";
      for (std::size_t i = 0; i < cl.reps.size(); ++i)
        os << "  [" << cl.reps[i].a.get_str() << ", " << cl.reps[i].b.get_str() << ", "
           << cl.reps[i].c.get_str() << "]  stabilizer " << cl.stab[i] << "\n";
    }
  } else {
    if (dmax < 3) throw UsageError("classnum: need -d or --dmax >= 3");
    bool first = true;
    if (format == "json") os << "[";
    for (long dd = 3; dd <= dmax; ++dd) {
      if (!singmod::trace_admissible(1, dd)) continue;
      const singmod::ClassList cl = classnum_enumerate(context, dd, p);
      if (format == "json") {
        if (!first) os << ",";
        os << "{\"d\":" << dd << ",\"count\":" << cl.reps.size() << ",\"hurwitz\":\""
           << singmod::to_string(singmod::hurwitz_H(dd)) << "\"}";
      } else {
        os << dd << "\t" << cl.reps.size() << "\t"
           << singmod::to_string(singmod::hurwitz_H(dd)) << "\n";
      }
      first = false;
    }
    if (format == "json") os << "]\n";
  }
  emit(os.str(), output_path);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

singmod::IdentityReport run_one_identity(const std::string& id, long nmax, long nu,
                                         long mmax, long order, long terms) {
  using namespace singmod;
  if (id == "kaneko-m2") return verify_kaneko_m2(nmax > 0 ? nmax : 50);
  if (id == "hurwitz") return verify_hurwitz(nmax > 0 ? nmax : 200);
  if (id == "kaneko-original") return verify_kaneko_original(nmax > 0 ? nmax : 30);
  if (id == "level2-kaneko") return verify_level2_kaneko(nmax > 0 ? nmax : 50);
  if (id == "es-trace") return verify_es_trace(nu > 0 ? nu : 11, nmax > 0 ? nmax : 20);
  if (id == "decompose-F-g1-5") return decompose_F_g1_5().report;
  if (id == "shifted-L") return shifted_L_numeric_check(terms > 0 ? terms : 100);
  if (id == "partition-spt") return verify_partition_formula(nmax > 0 ? nmax : 20);
  if (id == "bko-E4") return verify_bko("E4", mmax > 0 ? mmax : 30);
  if (id == "bko-E6") return verify_bko("E6", mmax > 0 ? mmax : 30);
  if (id == "bko-Delta") return verify_bko("Delta", mmax > 0 ? mmax : 30);
  if (id == "duality-d3") return verify_duality_d3(mmax > 0 ? mmax : 6);
  if (id == "borcherds-d3") return verify_borcherds_d3(order > 0 ? order : 30);
  if (id == "valence") return verify_valence_known_forms();
  throw UsageError("verify: unknown identity id '" + id +
                   "' (see --help for the list, or use 'all')");
}

int cmd_verify(const std::string& id, long nmax, long nu, long mmax, long order,
               long terms, const std::string& format, const std::string& output_path) {
  std::vector<singmod::IdentityReport> reports;
  if (id == "all")
    reports = singmod::run_all();
  else
    reports.push_back(run_one_identity(id, nmax, nu, mmax, order, terms));

  std::ostringstream os;
  if (format == "json") {
    os << "[";
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i) os << ",";
      os << reports[i].to_json();
    }
    os << "]\n";
  } else {
    for (const auto& r : reports) os << r.to_text() << "\n";
  }
  emit(os.str(), output_path);
  for (const auto& r : reports)
    if (!r.pass) return kExitVerifyFail;
  return kExitOk;
}

// ---------------------------------------------------------------------------
// asymptotics
// ---------------------------------------------------------------------------

int cmd_asymptotics(const std::string& kind, std::vector<long> values,
                    const std::string& format, const std::string& output_path) {
  std::ostringstream os;
  const bool json = (format == "json");
  if (json) os << "[";
  bool first = true;
  const auto row = [&](long n, double a, double b) {
    if (json) {
      if (!first) os << ",";
      os << "{\"n\":" << n << ",\"value\":" << a << ",\"reference\":" << b
         << ",\"ratio\":" << (a / b) << "}";
    } else {
      os << n << "\t" << a << "\t" << b << "\t" << (a / b) << "\n";
    }
    first = false;
  };
  if (kind == "j") {
    if (values.empty()) values = {10, 50, 100, 200};
    for (long n : values) {
      if (n < 1) throw UsageError("asymptotics: j values must be >= 1");
      row(n, singmod::asymptotic_ratio_j(n), 1.0);
    }
  } else if (kind == "trace") {
    if (values.empty()) values = {48, 100, 199, 400};
    long dmax = 0;
    for (long d : values) dmax = std::max(dmax, d);
    if (dmax < 3) throw UsageError("asymptotics: trace values must be >= 3");
    const singmod::TraceTable t2 =
        singmod::t2_via_hecke(singmod::t1_closed_form(4 * dmax), dmax);
    for (long d : values) {
      if (!singmod::trace_admissible(1, d))
        throw UsageError("asymptotics: trace values must be 0 or 3 mod 4");
      row(d, singmod::asymptotic_trace_ratio(d, t2.value(d)), 1.0);
    }
  } else if (kind == "laplace") {
    if (values.empty()) values = {10, 50, 100};
    for (long lam : values) {
      if (lam < 1) throw UsageError("asymptotics: laplace values must be >= 1");
      const auto [integral, stationary] = singmod::laplace_check(static_cast<double>(lam));
      row(lam, integral, stationary);
    }
  } else {
    throw UsageError("asymptotics: --kind must be j, trace, or laplace");
  }
  if (json) os << "]\n";
  emit(os.str(), output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact q-expansions, traces of singular moduli, and identity checks"};
  app.require_subcommand(1);
  // Let --format/--output appear after the subcommand name as well.
  app.fallthrough();

  std::string format = "text";
  std::string output_path;
  app.add_option("--format", format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--output", output_path, "write output to a file instead of stdout");

  // qexp
  auto* qexp = app.add_subcommand("qexp", "print the q-expansion of a named series");
  std::string form_name;
  long order = 50;
  qexp->add_option("name", form_name,
                   "series name: E2, E4, E6, E12, Delta, j, eta, theta0, theta1, "
                   "j2, j2star, E2level2, g1, f3, partition, spt")
      ->required();
  qexp->add_option("--order", order, "report coefficients up to this order")
      ->capture_default_str();

  // traces
  auto* traces = app.add_subcommand("traces", "print a trace table");
  int level = 1;
  long trace_m = 1;
  long dmax = 400;
  bool starred = false;
  bool numeric = false;
  long precision = default_precision();
  traces->add_option("--level", level, "level: 1 or 2")->capture_default_str();
  traces->add_option("--m", trace_m, "index m >= 1")->capture_default_str();
  traces->add_option("--dmax", dmax, "largest discriminant")->capture_default_str();
  traces->add_flag("--starred", starred, "Fricke-quotient normalization (level 2)");
  traces->add_flag("--numeric", numeric, "use the floating-point Heegner-sum route");
  traces->add_option("--precision", precision, "working precision in bits (numeric route)")
      ->capture_default_str();

  // classnum
  auto* classnum = app.add_subcommand("classnum", "reduced quadratic forms and class data");
  long single_d = 0;
  long class_dmax = 0;
  std::string context = "level1";
  long class_p = 2;
  classnum->add_option("-d", single_d, "single discriminant to enumerate");
  classnum->add_option("--dmax", class_dmax, "table of counts for d = 3..dmax");
  classnum->add_option("--context", context, "level1, gamma0, or fricke")
      ->capture_default_str();
  classnum->add_option("--p", class_p, "prime level for gamma0/fricke contexts")
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "verify an identity (or 'all')");
  std::string identity_id;
  long v_nmax = 0, v_nu = 0, v_mmax = 0, v_order = 0, v_terms = 0;
  verify->add_option("id", identity_id,
                     "identity id: kaneko-m2, hurwitz, kaneko-original, level2-kaneko, "
                     "es-trace, decompose-F-g1-5, shifted-L, partition-spt, bko-E4, "
                     "bko-E6, bko-Delta, duality-d3, borcherds-d3, valence, all")
      ->required();
  verify->add_option("--nmax", v_nmax, "range bound n (suite-specific default)");
  verify->add_option("--nu", v_nu, "largest nu for es-trace");
  verify->add_option("--mmax", v_mmax, "range bound m for bko/duality suites");
  verify->add_option("--order", v_order, "expansion order for borcherds-d3");
  verify->add_option("--terms", v_terms, "truncation length for shifted-L");

  // asymptotics
  auto* asym = app.add_subcommand("asymptotics", "leading-term asymptotic ratio tables");
  std::string kind = "j";
  std::vector<long> asym_values;
  asym->add_option("--kind", kind, "j, trace, or laplace")->capture_default_str();
  asym->add_option("--values", asym_values, "evaluation points (comma separated)")
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (qexp->parsed()) return cmd_qexp(form_name, order, format, output_path);
    if (traces->parsed())
      return cmd_traces(level, trace_m, dmax, starred, numeric, precision, format,
                        output_path);
    if (classnum->parsed())
      return cmd_classnum(single_d, class_dmax, context, class_p, format, output_path);
    if (verify->parsed())
      return cmd_verify(identity_id, v_nmax, v_nu, v_mmax, v_order, v_terms, format,
                        output_path);
    if (asym->parsed()) return cmd_asymptotics(kind, asym_values, format, output_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const singmod::error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
