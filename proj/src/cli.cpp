#include "cpf/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cpf/chen.hpp"
#include "cpf/counting.hpp"
#include "cpf/errors.hpp"
#include "cpf/factor.hpp"
#include "cpf/field.hpp"
#include "cpf/oracle.hpp"
#include "cpf/poly.hpp"
#include "cpf/residue.hpp"
#include "cpf/table_json.hpp"
#include "cpf/wagner.hpp"
#include "json.hpp"

namespace cpf::cli {
namespace {

using nlohmann::json;

struct Options {
  unsigned q = 0;
  unsigned p = 0;
  unsigned m = 1;
  std::string field_modulus;
  std::string format = "json";
  std::string f;
  std::string g;
  std::string P;
  std::size_t e = 0;
  std::string sigma;
  bool decimal = false;
  std::size_t max_degree = 0;
  bool empirical = false;
  bool monic_only = false;
  std::string what;
  std::string kind = "residues";
  std::size_t n = 0;
  bool timing = false;
  std::uint64_t guard_functions = EnumerationGuard{}.max_total_functions;
  std::size_t guard_degree = EnumerationGuard{}.max_degree;
};

FieldPtr make_field(const Options& o) {
  if (o.p == 0) {
    if (o.q == 0) throw DomainError("no field given: pass --q, or --p/--m/--field-modulus");
    if (!is_prime(o.q)) {
      throw DomainError("--q " + std::to_string(o.q) +
                        " is not prime; give extension fields as --p P --m M --field-modulus \"u^M+...\"");
    }
    return Field::prime(o.q);
  }
  FieldPtr field = o.m == 1 ? Field::prime(o.p) : Field::extension(o.p, o.m, o.field_modulus);
  if (o.q != 0 && o.q != field->q()) {
    throw DomainError("--q " + std::to_string(o.q) + " disagrees with p^m = " + std::to_string(field->q()));
  }
  return field;
}

EnumerationGuard make_guard(const Options& o) {
  EnumerationGuard guard;
  guard.max_total_functions = o.guard_functions;
  guard.max_closure_size = o.guard_functions;
  guard.max_degree = o.guard_degree;
  return guard;
}

json big(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
    return v.convert_to<std::int64_t>();
  }
  return v.str();
}

json rational(const BigRational& r) {
  return json{{"num", big(boost::multiprecision::numerator(r))}, {"den", big(boost::multiprecision::denominator(r))}};
}

json ext(const ExtNat& x) {
  if (x.is_infinite()) return "inf";
  return x.value();
}

json count_json(const QExponent& c, bool with_decimal) {
  json out{{"q", c.q()}, {"exponent", c.exponent().str()}};
  if (with_decimal) {
    const auto d = c.decimal();
    out["decimal"] = d ? json(*d) : json(nullptr);
  }
  return out;
}

Poly required_poly(const FieldPtr& field, const std::string& text, const char* flag) {
  if (text.empty()) throw DomainError(std::string("missing ") + flag);
  return parse_poly(field, text);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FunctionTable read_sigma(const FieldPtr& field, const Options& o) {
  if (o.sigma.empty()) throw DomainError("missing --sigma");
  FunctionTable sigma = table_from_json_text(field, read_file(o.sigma));
  if (!o.f.empty() && !(sigma.domain().modulus().monic() == parse_poly(field, o.f).monic())) {
    throw DomainError("table domain " + sigma.domain().modulus().to_string() + " does not match --f " + o.f);
  }
  return sigma;
}

json strings(std::span<const Poly> polys) {
  json out = json::array();
  for (const Poly& p : polys) out.push_back(p.to_string());
  return out;
}

json verdict_json(const BasisVerdict& v) {
  json mu = json::array({nullptr});
  json vals = json::array();
  vals.push_back(ext(valuation(v.coefficients.prime, v.coefficients.coefficients.front(), true)));
  for (const CoefficientCheck& c : v.checks) {
    mu.push_back(c.mu);
    vals.push_back(ext(c.valuation));
  }
  return json{{"coefficients", strings(v.coefficients.coefficients)}, {"mu", mu}, {"valuations", vals},
              {"cpf", v.cpf}};
}

// Oracle CP count with the cheaper engine that fits the guard.
std::uint64_t oracle_cpf_count(const Poly& f, const Poly& g, const EnumerationGuard& guard) {
  try {
    return count_cpf_bruteforce(f, g, CpfEngine::kExhaustive, guard);
  } catch (const GuardExceeded&) {
    return count_cpf_bruteforce(f, g, CpfEngine::kBacktracking, guard);
  }
}

// Calls visit on every table A_f -> A_g, as codomain codes.
void for_each_table(const ResidueRing& domain, const ResidueRing& codomain, const EnumerationGuard& guard,
                    const std::function<void(std::span<const std::uint32_t>)>& visit) {
  const std::uint64_t size = domain.size();
  const std::uint64_t targets = codomain.size();
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < size; ++i) {
    if (total > guard.max_total_functions / targets) {
      throw GuardExceeded("|g|^|f| tables exceed the enumeration guard of " +
                          std::to_string(guard.max_total_functions));
    }
    total *= targets;
  }
  std::vector<std::uint32_t> codes(size, 0);
  while (true) {
    visit(codes);
    std::size_t i = 0;
    while (i < size && ++codes[i] == targets) codes[i++] = 0;
    if (i == size) break;
  }
}

json cmd_count(const Options& o, bool cpf) {
  const FieldPtr field = make_field(o);
  const Poly f = required_poly(field, o.f, "--f");
  const Poly g = required_poly(field, o.g, "--g");
  return count_json(cpf ? count_cpf(f, g) : count_polyfn(f, g), o.decimal);
}

json cmd_gamma(const Options& o) {
  const FieldPtr field = make_field(o);
  const Poly g = required_poly(field, o.g, "--g");
  const Factorization fac = factorize(g);
  json parts = json::array();
  for (const PrimePower& pp : fac.factors) {
    parts.push_back({{"prime", pp.prime.to_string()}, {"exponent", pp.exponent},
                     {"gamma", ext(gamma_prime_power(pp.prime, pp.exponent))}});
  }
  return json{{"gamma", ext(gamma(fac))}, {"factors", parts}};
}

json cmd_chen(const Options& o) {
  const FieldPtr field = make_field(o);
  const ChenVerdict v = is_chen_pair(required_poly(field, o.f, "--f"), required_poly(field, o.g, "--g"));
  return json{{"chen_pair", v.chen_pair}, {"deg_f", v.deg_f}, {"gamma_g", ext(v.gamma_g)}};
}

json cmd_density(const Options& o) {
  const FieldPtr field = make_field(o);
  const unsigned q = field->q();
  json out{{"rho", rational(density_exact(q))}};
  if (o.max_degree == 0) {
    if (o.empirical) throw DomainError("--empirical needs --max-degree");
    return out;
  }
  const DensityReport r = o.empirical ? density_empirical(field, o.max_degree, o.monic_only)
                                      : density_closed_form(q, o.max_degree, o.monic_only);
  json counts = json::array();
  json totals = json::array();
  for (std::size_t n = 1; n <= r.max_degree; ++n) {
    counts.push_back(big(r.self_chen_counts[n]));
    totals.push_back(big(r.totals[n]));
  }
  out["max_degree"] = r.max_degree;
  out["monic_only"] = r.monic_only;
  out["empirical"] = r.empirical;
  out["self_chen"] = counts;
  out["totals"] = totals;
  out["fraction"] = rational(r.fraction);
  out["fraction_decimal"] = r.fraction.convert_to<double>();
  out["error"] = boost::multiprecision::abs(r.fraction - r.limit).convert_to<double>();
  return out;
}

json cmd_decompose(const Options& o) {
  const FieldPtr field = make_field(o);
  const FunctionTable sigma = read_sigma(field, o);
  const Poly prime = required_poly(field, o.P, "--P");
  if (o.e == 0) throw DomainError("--e must be >= 1");
  if (!(sigma.codomain().modulus().monic() == pow(prime.monic(), o.e))) {
    throw DomainError("table codomain " + sigma.codomain().modulus().to_string() + " is not (" + o.P + ")^" +
                      std::to_string(o.e));
  }
  return verdict_json(is_cpf_via_basis(sigma));
}

json cmd_characterize(const Options& o) {
  const FieldPtr field = make_field(o);
  const FunctionTable sigma = read_sigma(field, o);
  if (!o.g.empty() && !(sigma.codomain().modulus().monic() == parse_poly(field, o.g).monic())) {
    throw DomainError("table codomain " + sigma.codomain().modulus().to_string() + " does not match --g " + o.g);
  }
  const CrtCharacterization c = crt_characterize(sigma);
  json parts = json::array();
  for (const LocalVerdict& part : c.parts) {
    json entry = verdict_json(part.verdict);
    entry["prime"] = part.part.prime.to_string();
    entry["e"] = part.part.exponent;
    parts.push_back(std::move(entry));
  }
  return json{{"cpf", c.cpf}, {"parts", parts}};
}

json cmd_factor(const Options& o) {
  const FieldPtr field = make_field(o);
  const Poly g = required_poly(field, o.g, "--g");
  const Factorization fac = factorize(g);
  json parts = json::array();
  for (const PrimePower& pp : fac.factors) parts.push_back({{"prime", pp.prime.to_string()}, {"exponent", pp.exponent}});
  return json{{"unit", field->format(fac.unit)},
              {"factors", parts},
              {"squarefree", fac.is_squarefree()},
              {"irreducible", fac.factors.size() == 1 && fac.factors.front().exponent == 1}};
}

json cmd_enumerate(const Options& o) {
  const FieldPtr field = make_field(o);
  const EnumerationGuard guard = make_guard(o);
  const Poly f = required_poly(field, o.f, "--f");
  if (o.kind == "residues") {
    const ResidueRing ring(f);
    if (ring.size() > guard.max_total_functions) throw GuardExceeded("residue ring larger than the guard");
    return json{{"count", ring.size()}, {"elements", strings(ring.elements())}};
  }
  const Poly g = required_poly(field, o.g, "--g");
  const RingPtr domain = make_ring(f);
  const RingPtr codomain = make_ring(g);
  json tables = json::array();
  auto emit = [&](std::span<const std::uint32_t> codes) {
    json row = json::array();
    for (std::uint32_t c : codes) row.push_back(codomain->element(c).to_string());
    tables.push_back(std::move(row));
  };
  if (o.kind == "cpf") {
    enumerate_cpf(f, g, emit, guard);
  } else if (o.kind == "poly") {
    for (const FunctionTable& t : PolynomialFunctionModule(domain, codomain, guard).enumerate()) emit(t.codes());
  } else {
    throw DomainError("--kind must be residues, cpf or poly");
  }
  const std::size_t count = tables.size();
  return json{{"count", count}, {"tables", std::move(tables)}};
}

json cmd_verify(const Options& o) {
  const FieldPtr field = make_field(o);
  const EnumerationGuard guard = make_guard(o);
  const unsigned q = field->q();
  json formula;
  json oracle;
  bool match = false;

  if (o.what == "census") {
    const std::size_t n = o.n != 0 || o.g.empty() ? o.n : parse_poly(field, o.g).degree().value();
    const SelfChenCensus census = census_self_chen(field, n, false, guard);
    const std::uint64_t sf = census_squarefree(field, n, guard);
    const BigInt sf_formula = squarefree_count(n, q);
    // All leading coefficients count; for q > 2 that is (q-1) S(n).
    const BigInt self_formula = q == 2 ? chen_self_count(n) : sf_formula * (q - 1);
    formula = {{"squarefree", big(sf_formula)}, {"self_chen", big(self_formula)}};
    oracle = {{"squarefree", sf}, {"self_chen", census.total}};
    match = sf_formula == sf && self_formula == census.total;
    if (q == 2 && n >= 4) {
      const SelfChenComponents u = self_chen_components(n);
      formula["components"] = {big(u.squarefree), big(u.t_squared), big(u.t_plus_one_squared), big(u.both_squared)};
      oracle["components"] = census.components;
      match = match && u.squarefree == census.components[0] && u.t_squared == census.components[1] &&
              u.t_plus_one_squared == census.components[2] && u.both_squared == census.components[3];
    }
    return json{{"formula", formula}, {"oracle", oracle}, {"match", match}};
  }

  const Poly f = required_poly(field, o.f, "--f");
  const Poly g = required_poly(field, o.g, "--g");
  if (o.what == "cpf-count") {
    const QExponent m = count_cpf(f, g);
    const std::uint64_t count = oracle_cpf_count(f, g, guard);
    formula = m.to_string();
    oracle = count;
    match = m.value() == count;
  } else if (o.what == "poly-count") {
    const QExponent n = count_polyfn(f, g);
    const QExponent closure = polyfn_submodule(f, g, guard).size();
    formula = n.to_string();
    oracle = big(closure.value());
    match = n == closure;
  } else if (o.what == "chen") {
    const bool verdict = is_chen_pair(f, g).chen_pair;
    const bool equal = polyfn_submodule(f, g, guard).size().value() == oracle_cpf_count(f, g, guard);
    formula = verdict;
    oracle = equal;
    match = verdict == equal;
  } else if (o.what == "basis" || o.what == "crt") {
    const RingPtr domain = make_ring(f);
    const RingPtr codomain = make_ring(g);
    if (o.what == "basis") prime_power_of(*codomain);
    const CongruenceChecker checker(domain, codomain);
    std::uint64_t by_formula = 0;
    std::uint64_t by_oracle = 0;
    std::uint64_t disagreements = 0;
    for_each_table(*domain, *codomain, guard, [&](std::span<const std::uint32_t> codes) {
      const FunctionTable sigma = FunctionTable::from_codes(domain, codomain, codes);
      const bool a = o.what == "basis" ? is_cpf_via_basis(sigma).cpf : crt_characterize(sigma).cpf;
      const bool b = checker.preserves(codes);
      by_formula += a;
      by_oracle += b;
      disagreements += a != b;
    });
    formula = by_formula;
    oracle = by_oracle;
    match = disagreements == 0;
  } else {
    throw DomainError("--what must be cpf-count, poly-count, chen, basis, crt or census");
  }
  return json{{"formula", formula}, {"oracle", oracle}, {"match", match}};
}

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void flatten(const std::string& prefix, const json& v, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object()) {
    for (const auto& [key, item] : v.items()) flatten(prefix.empty() ? key : prefix + "." + key, item, rows);
    return;
  }
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
    std::string line;
    for (const json& x : v) line += (line.empty() ? "" : " ") + scalar_text(x);
    rows.emplace_back(prefix, line);
    return;
  }
  if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(prefix + "[" + std::to_string(i) + "]", v[i], rows);
    return;
  }
  rows.emplace_back(prefix, scalar_text(v));
}

void render_text(const json& doc, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten("", doc, rows);
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.first.size());
  for (const auto& [key, value] : rows) out << key << std::string(width - key.size() + 2, ' ') << value << '\n';
}

void add_field_options(CLI::App* sc, Options& o) {
  sc->add_option("--q", o.q, "field order (prime)");
  sc->add_option("--p", o.p, "field characteristic");
  sc->add_option("--m", o.m, "extension degree");
  sc->add_option("--field-modulus", o.field_modulus, "irreducible modulus in u, e.g. \"u^2+u+1\"");
  sc->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}));
}

void add_guard_options(CLI::App* sc, Options& o) {
  sc->add_option("--guard-functions", o.guard_functions, "enumeration budget for tables and closures");
  sc->add_option("--guard-degree", o.guard_degree, "largest degree the oracles accept");
}

void report(std::ostream& err, const char* kind, const std::string& message) {
  err << json{{"error", kind}, {"message", message}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Congruence preserving functions on residue rings of F_q[t]", "cpfq"};
  app.require_subcommand(1);
  std::map<std::string, std::function<json()>> handlers;

  auto* count_cpf_cmd = app.add_subcommand("count-cpf", "number of congruence preserving functions A_f -> A_g");
  auto* count_poly_cmd = app.add_subcommand("count-poly", "number of polynomial functions A_f -> A_g");
  for (auto* sc : {count_cpf_cmd, count_poly_cmd}) {
    add_field_options(sc, o);
    sc->add_option("--f", o.f, "domain modulus")->required();
    sc->add_option("--g", o.g, "codomain modulus")->required();
    sc->add_flag("--decimal", o.decimal, "also print the decimal value when below 2^64");
  }
  handlers["count-cpf"] = [&] { return cmd_count(o, true); };
  handlers["count-poly"] = [&] { return cmd_count(o, false); };

  auto* gamma_cmd = app.add_subcommand("gamma", "Chen threshold of g");
  add_field_options(gamma_cmd, o);
  gamma_cmd->add_option("--g", o.g, "polynomial")->required();
  handlers["gamma"] = [&] { return cmd_gamma(o); };

  auto* chen_cmd = app.add_subcommand("chen", "whether (f, g) is a Chen pair");
  add_field_options(chen_cmd, o);
  chen_cmd->add_option("--f", o.f, "domain modulus")->required();
  chen_cmd->add_option("--g", o.g, "codomain modulus")->required();
  handlers["chen"] = [&] { return cmd_chen(o); };

  auto* density_cmd = app.add_subcommand("density", "density of self-Chen polynomials");
  add_field_options(density_cmd, o);
  density_cmd->add_option("--max-degree", o.max_degree, "cumulative fraction over degrees 1..M");
  density_cmd->add_flag("--empirical", o.empirical, "count by testing every polynomial");
  density_cmd->add_flag("--monic-only", o.monic_only, "restrict to monic polynomials");
  handlers["density"] = [&] { return cmd_density(o); };

  auto* decompose_cmd = app.add_subcommand("decompose", "basis coefficients of sigma: A_f -> A_{P^e}");
  add_field_options(decompose_cmd, o);
  decompose_cmd->add_option("--f", o.f, "domain modulus");
  decompose_cmd->add_option("--P", o.P, "monic irreducible")->required();
  decompose_cmd->add_option("--e", o.e, "exponent")->required();
  decompose_cmd->add_option("--sigma", o.sigma, "function table JSON")->required();
  handlers["decompose"] = [&] { return cmd_decompose(o); };

  auto* characterize_cmd = app.add_subcommand("characterize", "coefficient criterion on each prime power of g");
  add_field_options(characterize_cmd, o);
  characterize_cmd->add_option("--f", o.f, "domain modulus");
  characterize_cmd->add_option("--g", o.g, "codomain modulus");
  characterize_cmd->add_option("--sigma", o.sigma, "function table JSON")->required();
  handlers["characterize"] = [&] { return cmd_characterize(o); };

  auto* verify_cmd = app.add_subcommand("verify", "compare a closed form with its brute-force oracle");
  add_field_options(verify_cmd, o);
  add_guard_options(verify_cmd, o);
  verify_cmd->add_option("--f", o.f, "domain modulus");
  verify_cmd->add_option("--g", o.g, "codomain modulus");
  verify_cmd->add_option("--n", o.n, "degree for --what census");
  verify_cmd->add_option("--what", o.what, "quantity to verify")
      ->required()
      ->check(CLI::IsMember({"cpf-count", "poly-count", "chen", "basis", "crt", "census"}));
  verify_cmd->add_flag("--timing", o.timing, "add elapsed_ms");
  handlers["verify"] = [&] {
    const auto start = std::chrono::steady_clock::now();
    json result = cmd_verify(o);
    if (o.timing) {
      result["elapsed_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    return result;
  };

  auto* factor_cmd = app.add_subcommand("factor", "factorization into monic irreducibles");
  add_field_options(factor_cmd, o);
  factor_cmd->add_option("--g", o.g, "polynomial")->required();
  handlers["factor"] = [&] { return cmd_factor(o); };

  auto* enumerate_cmd = app.add_subcommand("enumerate", "list residues, CP tables or polynomial functions");
  add_field_options(enumerate_cmd, o);
  add_guard_options(enumerate_cmd, o);
  enumerate_cmd->add_option("--f", o.f, "domain modulus")->required();
  enumerate_cmd->add_option("--g", o.g, "codomain modulus");
  enumerate_cmd->add_option("--kind", o.kind, "residues, cpf or poly")
      ->check(CLI::IsMember({"residues", "cpf", "poly"}));
  handlers["enumerate"] = [&] { return cmd_enumerate(o); };

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    report(err, "UsageError", e.what());
    return kExitUsage;
  }

  try {
    const std::string name = app.get_subcommands().front()->get_name();
    const json result = handlers.at(name)();
    if (o.format == "text") {
      render_text(result, out);
    } else {
      out << result.dump() << '\n';
    }
    return kExitOk;
  } catch (const GuardExceeded& e) {
    report(err, "GuardExceeded", e.what());
  } catch (const ParseError& e) {
    report(err, "ParseError", e.what());
  } catch (const DomainError& e) {
    report(err, "DomainError", e.what());
  } catch (const InvariantViolation& e) {
    report(err, "InvariantViolation", e.what());
    return kExitInternal;
  }
  return kExitDomain;
}

}  // namespace cpf::cli
