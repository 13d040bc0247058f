#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "poincare/error.hpp"
#include "poincare/functional_equation.hpp"
#include "poincare/iteration.hpp"
#include "poincare/qdiff.hpp"
#include "poincare/serialization.hpp"

namespace poincare::cli {
namespace {

constexpr int kDefaultMaxPrecision = 256;

struct HelpRequested {
  std::string text;
};

struct RawOptions {
  std::string p, q, precision, n, t, j, g, f, series;
  std::string field = "Q";
  std::string method = "recursive";
  std::string output = "text";
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  std::istringstream in(text);
  while (std::getline(in, current, sep)) parts.push_back(current);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int parse_int(const std::string& flag, const std::string& text) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw UsageError(flag + ": expected an integer, got '" + text + "'");
  }
  return value;
}

Polynomial parse_coefficients(const std::string& flag, const std::string& text, Field field) {
  if (text.empty()) throw UsageError(flag + ": empty coefficient list");
  std::vector<FieldElement> coeffs;
  for (const auto& part : split(text, ',')) {
    if (part.empty()) throw UsageError(flag + ": empty coefficient in '" + text + "'");
    coeffs.push_back(FieldElement::parse(field, part));
  }
  return {field, std::move(coeffs)};
}

int max_precision() {
  const char* env = std::getenv("POINCARE_MAX_N");
  if (env == nullptr || *env == '\0') return kDefaultMaxPrecision;
  const int cap = parse_int("POINCARE_MAX_N", env);
  if (cap < 1) throw UsageError("POINCARE_MAX_N: must be >= 1");
  return cap;
}

PowerSeries load_series(const std::string& text) {
  std::string doc = text;
  if (!doc.empty() && doc.front() == '@') {
    std::ifstream in(doc.substr(1));
    if (!in) throw UsageError("--series: cannot open '" + doc.substr(1) + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    doc = buffer.str();
  }
  const auto parsed = nlohmann::ordered_json::parse(doc, nullptr, false);
  if (parsed.is_discarded()) throw UsageError("--series: malformed JSON");
  return series_from_json(parsed);
}

void add_common(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--output", raw.output, "text or json");
  sub->add_option("--field", raw.field, "coefficient field: Q or Qq");
}

CliRequest build_request(const std::string& name, const RawOptions& raw) {
  CliRequest req;
  static const std::vector<std::pair<std::string, Command>> kCommands = {
      {"solve", Command::Solve},   {"schroder", Command::Schroder}, {"iterate", Command::Iterate},
      {"frac-iterate", Command::FracIterate}, {"qdiff", Command::QDiff}, {"verify", Command::Verify},
      {"interp", Command::Interp}};
  for (const auto& [key, cmd] : kCommands) {
    if (key == name) req.command = cmd;
  }

  if (raw.output == "text") {
    req.output = OutputFormat::Text;
  } else if (raw.output == "json") {
    req.output = OutputFormat::Json;
  } else {
    throw UsageError("--output: expected 'text' or 'json', got '" + raw.output + "'");
  }
  if (raw.field == "Q") {
    req.field = Field::Q;
  } else if (raw.field == "Qq" || raw.field == "Q(q)") {
    req.field = Field::Qq;
  } else {
    throw UsageError("--field: expected 'Q' or 'Qq', got '" + raw.field + "'");
  }

  const int cap = max_precision();
  if (!raw.series.empty()) {
    req.f = load_series(raw.series);
    if (req.f->field() != req.field) {
      throw UsageError("--series: field " + std::string(to_string(req.f->field())) + " does not match --field " +
                       std::string(to_string(req.field)));
    }
  }
  if (!raw.precision.empty()) {
    req.precision = parse_int("--N", raw.precision);
  } else if (req.f) {
    req.precision = req.f->precision();
  } else if (req.command == Command::Interp || (req.command == Command::QDiff && !raw.f.empty())) {
    req.precision = 0;
  } else {
    throw UsageError("--N: required");
  }
  if (req.command != Command::Interp && req.command != Command::QDiff && req.precision < 1) {
    throw UsageError("--N: must be >= 1");
  }
  if (req.precision > cap) {
    throw UsageError("--N: " + std::to_string(req.precision) + " exceeds POINCARE_MAX_N = " + std::to_string(cap));
  }

  if (req.command != Command::QDiff) {
    if (raw.p.empty()) throw UsageError("--p: required");
    req.p = parse_coefficients("--p", raw.p, req.field);
    if (!req.p->coeff(0).is_zero()) throw UsageError("--p: constant term must be 0");
  }

  if (!raw.q.empty()) req.q = FieldElement::parse(req.field, raw.q);
  if (req.p && req.q && *req.q != req.p->coeff(1)) {
    throw UsageError("--q: " + req.q->to_string() + " differs from p_1 = " + req.p->coeff(1).to_string());
  }
  if (req.p && !req.q) req.q = req.p->coeff(1);

  if (!raw.g.empty()) {
    for (const auto& part : split(raw.g, ';')) req.g.push_back(parse_coefficients("--g", part, req.field));
  }
  if (!raw.n.empty()) req.n = parse_int("--n", raw.n);
  if (!raw.t.empty()) req.t = FieldElement::parse(req.field, raw.t);
  if (!raw.j.empty()) req.j = parse_int("--j", raw.j);

  if (raw.method == "recursive") {
    req.method = SolveMethod::Recursive;
  } else if (raw.method == "nonrecursive") {
    req.method = SolveMethod::Nonrecursive;
  } else {
    throw UsageError("--method: expected 'recursive' or 'nonrecursive', got '" + raw.method + "'");
  }
  if (!req.g.empty()) req.method = SolveMethod::Nonrecursive;

  switch (req.command) {
    case Command::Iterate:
      if (!req.n) throw UsageError("--n: required");
      break;
    case Command::FracIterate:
      if (!req.t) throw UsageError("--t: required");
      break;
    case Command::Interp:
      if (!req.j) throw UsageError("--j: required");
      if (*req.j < 0) throw UsageError("--j: must be >= 0");
      if (*req.j > cap) throw UsageError("--j: exceeds POINCARE_MAX_N");
      break;
    case Command::QDiff:
      if (req.g.size() != 1) throw UsageError("--g: exactly one polynomial required");
      if (!req.q) throw UsageError("--q: required");
      if (!raw.f.empty()) {
        const Polynomial fp = parse_coefficients("--f", raw.f, req.field);
        const int prec = raw.precision.empty() ? static_cast<int>(split(raw.f, ',').size()) - 1 : req.precision;
        req.f = PowerSeries::from_polynomial(fp, prec);
      }
      if (!req.f) throw UsageError("--f: required");
      break;
    case Command::Verify:
      if (!raw.f.empty()) req.f = PowerSeries::from_polynomial(parse_coefficients("--f", raw.f, req.field), req.precision);
      break;
    default:
      break;
  }
  return req;
}

std::string render_series(const PowerSeries& f, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(f).dump() + "\n";
  std::string out;
  for (int k = 0; k <= f.precision(); ++k) out += std::to_string(k) + ": " + f.coeff(k).to_string() + "\n";
  return out;
}

std::string render_polynomial(const Polynomial& p, OutputFormat format) {
  if (format == OutputFormat::Json) return to_json(p).dump() + "\n";
  std::string out;
  for (int k = 0; k <= std::max(p.degree(), 0); ++k) out += std::to_string(k) + ": " + p.coeff(k).to_string() + "\n";
  return out;
}

CliResult run_verify(const CliRequest& req) {
  const PoincareInstance inst(*req.p, req.precision);
  const PowerSeries f = req.f ? *req.f : solve_poincare_recursive(inst);
  const PoincareResidual residual = verify_poincare(f, inst);
  if (!residual.consistent()) {
    throw Error(ErrorCode::InternalInvariant, "direct and inverse-form residuals disagree");
  }
  CliResult result;
  if (residual.is_zero()) {
    if (req.output == OutputFormat::Json) {
      result.out = nlohmann::ordered_json{{"zero", true}, {"precision", req.precision}}.dump() + "\n";
    } else {
      result.out = "residual: 0 through degree " + std::to_string(req.precision) + "\n";
    }
    return result;
  }
  const PowerSeries& bad = residual.direct.is_zero() ? *residual.inverse_form : residual.direct;
  const int degree = *bad.valuation();
  const std::string form = residual.direct.is_zero() ? "inverse" : "direct";
  result.exit_code = kExitResidual;
  if (req.output == OutputFormat::Json) {
    result.out = nlohmann::ordered_json{{"zero", false},
                                        {"form", form},
                                        {"degree", degree},
                                        {"coefficient", bad.coeff(degree).to_string()}}
                     .dump() +
                 "\n";
  } else {
    result.out = "first nonzero residual (" + form + " form) at degree " + std::to_string(degree) + ": " +
                 bad.coeff(degree).to_string() + "\n";
  }
  return result;
}

}  // namespace

CliRequest parse_args(const std::vector<std::string>& args) {
  CLI::App app{"Exact formal power series solver for Poincaré and Schröder equations", "poincare"};
  app.require_subcommand(1, 1);
  RawOptions raw;

  auto* solve = app.add_subcommand("solve", "normalized solution f of f(qx) = p(f(x))");
  solve->add_option("--p", raw.p, "coefficients of p, ascending, comma separated");
  solve->add_option("--q", raw.q, "q, must equal p_1");
  solve->add_option("--N", raw.precision, "precision");
  solve->add_option("--method", raw.method, "recursive or nonrecursive");
  solve->add_option("--g", raw.g, "g_1;...;g_N coefficient lists for the nonrecursive method");
  add_common(solve, raw);

  auto* schroder = app.add_subcommand("schroder", "inverse solution sigma with q sigma = sigma(p)");
  schroder->add_option("--p", raw.p);
  schroder->add_option("--q", raw.q);
  schroder->add_option("--N", raw.precision);
  add_common(schroder, raw);

  auto* iterate = app.add_subcommand("iterate", "integer iterate p^n, n may be negative");
  iterate->add_option("--p", raw.p);
  iterate->add_option("--n", raw.n);
  iterate->add_option("--N", raw.precision);
  add_common(iterate, raw);

  auto* frac = app.add_subcommand("frac-iterate", "continuous iterate p^t of a map tangent to the identity");
  frac->add_option("--p", raw.p);
  frac->add_option("--t", raw.t);
  frac->add_option("--N", raw.precision);
  add_common(frac, raw);

  auto* qdiff = app.add_subcommand("qdiff", "apply the q-difference operator D_{g;q} to f");
  qdiff->add_option("--g", raw.g);
  qdiff->add_option("--q", raw.q);
  qdiff->add_option("--f", raw.f);
  qdiff->add_option("--series", raw.series, "series JSON document or @file");
  qdiff->add_option("--N", raw.precision);
  add_common(qdiff, raw);

  auto* verify = app.add_subcommand("verify", "residual of f against f(qx) = p(f(x))");
  verify->add_option("--p", raw.p);
  verify->add_option("--q", raw.q);
  verify->add_option("--N", raw.precision);
  verify->add_option("--f", raw.f, "candidate solution coefficients");
  verify->add_option("--series", raw.series, "candidate solution as series JSON or @file");
  add_common(verify, raw);

  auto* interp = app.add_subcommand("interp", "polynomial n -> (p^n)_j for p tangent to the identity");
  interp->add_option("--p", raw.p);
  interp->add_option("--j", raw.j);
  add_common(interp, raw);

  std::vector<std::string> argv_storage{"poincare"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }
  return build_request(app.get_subcommands().front()->get_name(), raw);
}

CliResult run(const CliRequest& req) {
  CliResult result;
  switch (req.command) {
    case Command::Solve: {
      const PoincareInstance inst(*req.p, req.precision);
      PowerSeries f = req.method == SolveMethod::Recursive ? solve_poincare_recursive(inst)
                      : req.g.empty()                      ? solve_poincare_nonrecursive(inst)
                                                           : solve_poincare_nonrecursive(inst, req.g);
      result.out = render_series(f, req.output);
      break;
    }
    case Command::Schroder:
      result.out = render_series(solve_schroder(PoincareInstance(*req.p, req.precision)), req.output);
      break;
    case Command::Iterate:
      result.out = render_series(iterate_integer(*req.p, *req.n, req.precision), req.output);
      break;
    case Command::FracIterate:
      result.out = render_series(iterate_continuous(*req.p, *req.t, req.precision), req.output);
      break;
    case Command::QDiff: {
      const QDiffOperator op(req.g.front(), *req.q);
      result.out = render_series(op.apply(*req.f), req.output);
      break;
    }
    case Command::Verify:
      return run_verify(req);
    case Command::Interp:
      result.out = render_polynomial(iterate_coefficient_polynomial(*req.p, *req.j).as_polynomial(), req.output);
      break;
  }
  return result;
}

CliResult execute(const std::vector<std::string>& args) {
  try {
    return run(parse_args(args));
  } catch (const HelpRequested& help) {
    return {kExitOk, help.text, ""};
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    const int code = e.code() == ErrorCode::ParseError ? kExitUsage : kExitMath;
    return {code, "", std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace poincare::cli
