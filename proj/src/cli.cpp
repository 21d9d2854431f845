#include "umbral/cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "umbral/acceptance.hpp"
#include "umbral/bessel_poly.hpp"
#include "umbral/delta.hpp"
#include "umbral/distributions.hpp"
#include "umbral/fuss.hpp"
#include "umbral/sequences.hpp"
#include "umbral/serialize.hpp"

namespace umbral::cli {

Rational parse_number(std::string_view text) {
  const auto dot = text.find('.');
  if (dot == std::string_view::npos) return parse_rational(text);
  // Decimal: sign, digits, '.', digits.
  std::string digits;
  bool negative = false;
  std::size_t i = 0;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    i = 1;
  }
  const std::string_view whole = text.substr(i, dot - i);
  const std::string_view frac = text.substr(dot + 1);
  auto all_digits = [](std::string_view s) {
    for (char c : s)
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
  };
  if ((whole.empty() && frac.empty()) || !all_digits(whole) || !all_digits(frac))
    throw std::invalid_argument("malformed number: '" + std::string(text) + "'");
  digits.append(whole).append(frac);
  if (digits.empty()) digits = "0";
  Integer den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  Rational r{Integer(digits, 10), den};
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

namespace {

enum class Format { Json, Csv };

struct Envelope {
  std::string command;
  Json parameters = Json::object();
  Json result;
  std::optional<Json> diagnostics;
};

std::string csv_field(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    return quoted + "\"";
  }
  return s;
}

void emit(const Envelope& env, Format format, std::ostream& out) {
  Json j;
  j["command"] = env.command;
  j["parameters"] = env.parameters;
  j["result"] = env.result;
  if (env.diagnostics) j["diagnostics"] = *env.diagnostics;
  if (format == Format::Json) {
    out << j.dump(2) << '\n';
    return;
  }
  out << "path,value\n";
  const Json flat = j.flatten();
  for (const auto& [path, value] : flat.items()) out << csv_field(path) << ',' << csv_field(value) << '\n';
}

double as_real(const std::string& text) { return parse_number(text).get_d(); }

QuadratureConfig quad_config(double tol) {
  QuadratureConfig cfg;
  cfg.tolerance = tol;
  cfg.validate();
  return cfg;
}

Json reals(const std::vector<double>& v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(x);
  return arr;
}

// Options shared by several subcommands.
struct Options {
  std::string format = "json";
  std::string a = "1";
  std::string b = "0";
  unsigned p = 1;
  unsigned n = 0;
  std::string s = "1";
  std::string t = "1";
  std::size_t order = kDefaultOrder;
  std::size_t count = 12;
  double tol = 1e-10;
  std::uint64_t seed = 1;
  std::string method = "closed";
  std::string dist = "ig";
  std::string id;
  bool all = false;
  bool with_crosscheck = false;
  std::vector<double> u_points;
  std::vector<double> x_points;
  double max_dev = 0;
  double max_density_dev = 1e-7;
};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binomial-type sequences of aD - bD^{p+1}, Bessel polynomials and inverse Gaussian laws"};
  app.require_subcommand(1);
  app.name("umbral");
  Options o;

  auto* basic = app.add_subcommand("basic-poly", "Basic polynomial w_n of Q = aD - bD^{p+1}");
  basic->add_option("--a", o.a, "Rational a != 0")->capture_default_str();
  basic->add_option("--b", o.b, "Rational b")->capture_default_str();
  basic->add_option("--p", o.p, "Integer p >= 1")->capture_default_str();
  basic->add_option("--n", o.n, "Index n")->required();
  basic->add_option("--method", o.method, "Construction")
      ->check(CLI::IsMember({"closed", "generic", "egf"}))
      ->capture_default_str();
  basic->add_flag("--all", o.all, "Emit w_0 .. w_n");

  auto* fser = app.add_subcommand("f-series", "Compositional inverse f of ax - bx^{p+1}");
  fser->add_option("--a", o.a, "Rational a != 0")->capture_default_str();
  fser->add_option("--b", o.b, "Rational b")->capture_default_str();
  fser->add_option("--p", o.p, "Integer p >= 1")->capture_default_str();
  fser->add_option("--order", o.order, "Truncation order")->capture_default_str();

  auto* fuss = app.add_subcommand("fuss", "Fuss numbers of order p");
  fuss->add_option("--p", o.p, "Integer p >= 1")->required();
  fuss->add_option("--order", o.order, "Truncation order")->capture_default_str();

  auto* bessel = app.add_subcommand("bessel-poly", "Bessel polynomial y_n");
  bessel->add_option("--n", o.n, "Index n")->required();
  bessel->add_flag("--all", o.all, "Emit y_0 .. y_n");

  auto* egf = app.add_subcommand("egf-check", "Exact check of the Bessel-polynomial exponential generating function");
  egf->add_option("--t", o.t, "Rational t0 != 0")->capture_default_str();
  egf->add_option("--order", o.order, "Truncation order")->capture_default_str();

  auto* mom = app.add_subcommand("moments", "Quadrature moment of a density");
  mom->add_option("--dist", o.dist, "ig | gamma | bessel")->check(CLI::IsMember({"ig", "gamma", "bessel"}))->capture_default_str();
  mom->add_option("--t", o.t, "Parameter t > 0")->capture_default_str();
  mom->add_option("--n", o.n, "Moment order")->capture_default_str();
  mom->add_option("--tol", o.tol, "Quadrature tolerance")->capture_default_str();

  auto* semi = app.add_subcommand("semigroup-check", "rho_s * rho_t against rho_{s+t}");
  semi->add_option("--s", o.s, "s > 0")->capture_default_str();
  semi->add_option("--t", o.t, "t > 0")->capture_default_str();
  semi->add_option("--u", o.u_points, "Evaluation points (default 0.5 1 2 4)");
  semi->add_option("--tol", o.tol, "Quadrature tolerance")->capture_default_str();
  semi->add_option("--max-dev", o.max_dev, "Failure threshold on absolute deviation (default 1e-7)");

  auto* kolm = app.add_subcommand("kolmogorov-check", "Kolmogorov representation of 1 - sqrt(1 - 2xi)");
  kolm->add_option("--x", o.x_points, "Points x (default 0.1 0.3 0.7)");
  kolm->add_option("--tol", o.tol, "Quadrature tolerance")->capture_default_str();
  kolm->add_option("--max-dev", o.max_dev, "Failure threshold (default 1e-8)");

  auto* fact = app.add_subcommand("factorization-check", "nu_t = gamma_t * D_t mu_{1/t}");
  fact->add_option("--t", o.t, "t > 0")->capture_default_str();
  fact->add_option("--x", o.x_points, "Characteristic-function points (default -1 -0.3 0.2 0.7 1.5)");
  fact->add_option("--u", o.u_points, "Density points (default 0.5 1 2)");
  fact->add_option("--tol", o.tol, "Quadrature tolerance")->capture_default_str();
  fact->add_option("--max-dev", o.max_dev, "Threshold for the closed forms (default 1e-12)");
  fact->add_option("--max-density-dev", o.max_density_dev, "Threshold for the density convolution")->capture_default_str();

  auto* oeis = app.add_subcommand("oeis", "Integer moment sequences");
  oeis->add_option("--id", o.id, "Sequence id")->required();
  oeis->add_option("--count", o.count, "Number of terms")->capture_default_str();
  oeis->add_option("--method", o.method, "Construction")->check(CLI::IsMember({"closed", "generic"}))->capture_default_str();
  oeis->add_flag("--crosscheck", o.with_crosscheck, "Compare against quadrature moments");
  oeis->add_option("--tol", o.tol, "Quadrature tolerance")->capture_default_str();

  auto* sample = app.add_subcommand("sample", "Draws from the inverse Gaussian mu_t");
  sample->add_option("--t", o.t, "t > 0")->capture_default_str();
  sample->add_option("--seed", o.seed, "RNG seed")->capture_default_str();
  sample->add_option("--count", o.count, "Number of draws")->capture_default_str();

  auto* verify = app.add_subcommand("verify-all", "Run the full acceptance matrix");

  for (auto* sub : {basic, fser, fuss, bessel, egf, mom, semi, kolm, fact, oeis, sample, verify}) add_format(sub, o);

  std::vector<std::string> full{"umbral"};
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    std::string msg = e.what();
    std::replace(msg.begin(), msg.end(), '\n', ' ');
    err << "umbral: error: " << msg << '\n';
    return kExitUsage;
  }

  const Format format = o.format == "csv" ? Format::Csv : Format::Json;
  Envelope env;
  int code = kExitOk;

  try {
    if (basic->parsed()) {
      env.command = "basic-poly";
      const AbTriple abp(parse_rational(o.a), parse_rational(o.b), o.p);
      env.parameters["a"] = to_string(abp.a);
      env.parameters["b"] = to_string(abp.b);
      env.parameters["p"] = abp.p;
      env.parameters["n"] = o.n;
      env.parameters["method"] = o.method;
      BinomialSequence seq;
      if (o.method == "closed")
        seq = basic_sequence_closed(abp, o.n);
      else if (o.method == "generic")
        seq = basic_sequence_generic(abp.delta(o.n), o.n);
      else
        seq = basic_sequence_egf(f_series(abp, std::max<std::size_t>(o.n, 1)), o.n);
      if (o.all) {
        env.result = Json::array();
        for (std::size_t k = 0; k <= o.n; ++k) env.result.push_back(sequence_record(k, seq[k]));
      } else {
        env.result = sequence_record(o.n, seq[o.n]);
      }
    } else if (fser->parsed()) {
      env.command = "f-series";
      const AbTriple abp(parse_rational(o.a), parse_rational(o.b), o.p);
      env.parameters["a"] = to_string(abp.a);
      env.parameters["b"] = to_string(abp.b);
      env.parameters["p"] = abp.p;
      env.parameters["order"] = o.order;
      env.result = to_json(f_series(abp, o.order));
    } else if (fuss->parsed()) {
      env.command = "fuss";
      env.parameters["p"] = o.p;
      env.parameters["order"] = o.order;
      const FussSeries fs = fuss_series(o.p, o.order);
      std::vector<Integer> terms;
      for (const auto& c : fs.series.coeffs()) terms.push_back(c.get_num());
      env.result = to_json(terms);
    } else if (bessel->parsed()) {
      env.command = "bessel-poly";
      env.parameters["n"] = o.n;
      const BesselPolySeq y = bessel_poly(o.n);
      if (o.all) {
        env.result = Json::array();
        for (std::size_t k = 0; k <= o.n; ++k) env.result.push_back(sequence_record(k, y[k]));
      } else {
        env.result = sequence_record(o.n, y[o.n]);
      }
    } else if (egf->parsed()) {
      env.command = "egf-check";
      const Rational t0 = parse_number(o.t);
      env.parameters["t"] = to_string(t0);
      env.parameters["order"] = o.order;
      const EgfSides sides = bessel_egf_sides(t0, o.order);
      const bool holds = sides.lhs == sides.rhs;
      env.result = Json::object({{"holds", holds}});
      env.diagnostics = Json::object({{"lhs", to_json(sides.lhs)}, {"rhs", to_json(sides.rhs)}});
      if (!holds) code = kExitVerificationFailed;
    } else if (mom->parsed()) {
      env.command = "moments";
      const Rational t = parse_number(o.t);
      if (t <= 0) throw std::invalid_argument("--t must be positive");
      env.parameters["dist"] = o.dist;
      env.parameters["t"] = to_string(t);
      env.parameters["n"] = o.n;
      env.parameters["tol"] = o.tol;
      const QuadratureConfig cfg = quad_config(o.tol);
      Rational exact;
      std::optional<DistSpec> d;
      if (o.dist == "ig") {
        d = DistSpec::inverse_gaussian(t.get_d());
        exact = eval(carlitz_w(o.n)[o.n], t);
      } else if (o.dist == "bessel") {
        d = DistSpec::bessel_measure(t.get_d());
        exact = eval(bessel_poly(o.n)[o.n], t);
      } else {
        // gamma(1/2, 2t): t^n (2n-1)!!
        d = DistSpec::gamma_half(t.get_d());
        Integer dfact(1);
        for (unsigned k = 1; k <= o.n; ++k) dfact *= 2 * k - 1;
        exact = pow(t, o.n) * Rational(dfact);
      }
      const QuadResult m = moment(*d, o.n, cfg);
      env.result = Json::object({{"moment", m.value}, {"error_estimate", m.error_estimate}, {"exact", to_string(exact)}});
      env.diagnostics = to_json(CheckReport::compare(m.value, exact.get_d(), m.error_estimate));
    } else if (semi->parsed()) {
      env.command = "semigroup-check";
      const double s = as_real(o.s);
      const double t = as_real(o.t);
      if (o.u_points.empty()) o.u_points = {0.5, 1.0, 2.0, 4.0};
      const double limit = o.max_dev > 0 ? o.max_dev : 1e-7;
      env.parameters["s"] = s;
      env.parameters["t"] = t;
      env.parameters["u"] = reals(o.u_points);
      env.parameters["tol"] = o.tol;
      env.parameters["max_dev"] = limit;
      const PointwiseReport r = semigroup_check(s, t, o.u_points, quad_config(o.tol));
      const bool passed = r.max_abs_dev() < limit;
      env.result = Json::object({{"passed", passed}, {"max_abs_dev", r.max_abs_dev()}});
      env.diagnostics = to_json(r, "u");
      if (!passed) code = kExitVerificationFailed;
    } else if (kolm->parsed()) {
      env.command = "kolmogorov-check";
      if (o.x_points.empty()) o.x_points = {0.1, 0.3, 0.7};
      const double limit = o.max_dev > 0 ? o.max_dev : 1e-8;
      env.parameters["x"] = reals(o.x_points);
      env.parameters["tol"] = o.tol;
      env.parameters["max_dev"] = limit;
      const QuadratureConfig cfg = quad_config(o.tol);
      Json points = Json::array();
      double worst = 0;
      for (double x : o.x_points) {
        const KolmogorovReport k = kolmogorov_check(x, cfg);
        worst = std::max({worst, k.identity.abs_dev, k.normalization.abs_dev});
        points.push_back(Json::object({{"x", x}, {"identity", to_json(k.identity)}, {"normalization", to_json(k.normalization)}}));
      }
      const bool passed = worst < limit;
      env.result = Json::object({{"passed", passed}, {"max_abs_dev", worst}});
      env.diagnostics = Json::object({{"points", points}});
      if (!passed) code = kExitVerificationFailed;
    } else if (fact->parsed()) {
      env.command = "factorization-check";
      const double t = as_real(o.t);
      if (o.x_points.empty()) o.x_points = {-1.0, -0.3, 0.2, 0.7, 1.5};
      if (o.u_points.empty()) o.u_points = kDefaultFactorizationDensityPoints;
      const double limit = o.max_dev > 0 ? o.max_dev : 1e-12;
      env.parameters["t"] = t;
      env.parameters["x"] = reals(o.x_points);
      env.parameters["u"] = reals(o.u_points);
      env.parameters["tol"] = o.tol;
      env.parameters["max_dev"] = limit;
      env.parameters["max_density_dev"] = o.max_density_dev;
      const FactorizationReport r = convolution_factorization_check(t, o.x_points, o.u_points, quad_config(o.tol));
      const bool passed = r.char_fun.max_abs_dev() < limit && r.density.max_abs_dev() < o.max_density_dev;
      env.result = Json::object({{"passed", passed},
                                 {"char_fun_max_abs_dev", r.char_fun.max_abs_dev()},
                                 {"density_max_abs_dev", r.density.max_abs_dev()}});
      env.diagnostics = Json::object({{"char_fun", to_json(r.char_fun, "x")}, {"density", to_json(r.density, "u")}});
      if (!passed) code = kExitVerificationFailed;
    } else if (oeis->parsed()) {
      env.command = "oeis";
      if (o.count < 1) throw std::invalid_argument("--count must be >= 1");
      const SequenceSpec& spec = find_sequence(o.id);
      env.parameters["id"] = spec.id;
      env.parameters["count"] = o.count;
      env.parameters["method"] = o.method;
      const auto terms = generate(spec.id, o.count, o.method == "generic" ? Construction::Generic : Construction::ClosedForm);
      env.result = Json::object({{"id", spec.id}, {"terms", to_json(terms)}});
      if (o.with_crosscheck) {
        const SequenceCrosscheck cc = crosscheck(spec.id, o.count, quad_config(o.tol));
        Json rows = Json::array();
        for (const auto& r : cc.terms) rows.push_back(to_json(r));
        env.diagnostics = Json::object({{"distribution", spec.distribution}, {"terms", rows}, {"max_rel_dev", cc.max_rel_dev()}});
        if (!(cc.max_rel_dev() < 1e-8)) code = kExitVerificationFailed;
      }
    } else if (sample->parsed()) {
      env.command = "sample";
      const double t = as_real(o.t);
      env.parameters["t"] = t;
      env.parameters["seed"] = o.seed;
      env.parameters["count"] = o.count;
      env.result = reals(ig_sample(t, o.seed, o.count));
    } else if (verify->parsed()) {
      env.command = "verify-all";
      env.result = Json::array();
      bool all_passed = true;
      for (const auto& c : acceptance::criteria()) {
        const auto r = acceptance::run(c);
        err << acceptance::format_line(r) << '\n';
        all_passed = all_passed && r.passed;
        env.result.push_back(
            Json::object({{"criterion", r.number}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}}));
      }
      if (!all_passed) code = kExitVerificationFailed;
    }
  } catch (const QuadratureError& e) {
    err << "umbral: quadrature failure: " << e.what() << '\n';
    return kExitVerificationFailed;
  } catch (const std::invalid_argument& e) {
    err << "umbral: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "umbral: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "umbral: error: " << e.what() << '\n';
    return kExitUsage;
  }

  emit(env, format, out);
  return code;
}

}  // namespace umbral::cli
