#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "asai/induced_rep.hpp"
#include "asai/oracle.hpp"
#include "asai/serialize.hpp"
#include "asai/whittaker.hpp"
#include "asai/zeta.hpp"
#include "json.hpp"

namespace asai::cli {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

const std::vector<std::pair<std::string, std::string>> kCommands{
    {"lfactor", "Euler factors of L(s, As Π)"},
    {"gamma", "L, L dual, ε and γ of the Asai cube"},
    {"verify-theorem1", "check γ_PSR = correction · γ and its supporting identities"},
    {"zeta-tame", "Z0, Z1 and total of the tame cubic zeta integral"},
    {"whittaker", "spherical Whittaker values against Shintani's formula"},
    {"oracle", "truncated numeric zeta sum against the closed form"},
};

ordered_json fn_json(const RationalFunction& f) { return ordered_json::parse(to_json(f)); }
ordered_json pair_json(std::complex<double> z) { return ordered_json::array({z.real(), z.imag()}); }

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    out.push_back(item);
  }
  return out;
}

std::complex<double> parse_complex(std::string text) {
  text.erase(std::remove_if(text.begin(), text.end(), ::isspace), text.end());
  if (text.empty()) throw UsageError("empty complex number");
  auto number = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(t, &used);
    } catch (const std::exception&) {
      throw UsageError("malformed number: " + text);
    }
    if (used != t.size()) throw UsageError("malformed number: " + text);
    return v;
  };
  if (text.back() != 'i' && text.back() != 'j') return {number(text), 0.0};
  text.pop_back();
  std::size_t cut = std::string::npos;
  for (std::size_t k = text.size(); k-- > 1;) {
    if ((text[k] == '+' || text[k] == '-') && text[k - 1] != 'e' && text[k - 1] != 'E') {
      cut = k;
      break;
    }
  }
  if (cut == std::string::npos) return {0.0, number(text)};
  return {number(text.substr(0, cut)), number(text.substr(cut))};
}

ShapeKind shape_of(const JobSpec& spec) {
  auto k = parse_shape(spec.shape);
  if (!k) throw UnsupportedShape("unsupported shape: " + spec.shape);
  return *k;
}

long residue_prime(const JobSpec& spec) {
  const double q = spec.q.value_or(5);
  if (q != std::floor(q) || q < 3 || q > 1e9) throw UsageError("exact commands need an odd prime --q");
  const long p = static_cast<long>(q);
  if (!is_prime(p) || p == 2) throw UsageError("exact commands need an odd prime --q");
  return p;
}

RationalFunction satake_value(const std::string& token) {
  if (auto v = parse_var(token)) return var(*v);
  try {
    return constant(parse_rational(token));
  } catch (const std::invalid_argument&) {
    throw UsageError("Satake value must be a rational or a variable name: " + token);
  }
}

AsaiRepData rep_of(const JobSpec& spec) {
  const ShapeKind kind = shape_of(spec);
  AsaiRepData rep = symbolic_rep(kind, residue_prime(spec));
  if (!(spec.satake.empty() || (spec.satake.size() == 1 && spec.satake[0] == "symbolic"))) {
    if (spec.satake.size() != 2 * rep.satake.size()) {
      throw UsageError("shape " + spec.shape + " needs " + std::to_string(2 * rep.satake.size()) + " Satake values");
    }
    for (std::size_t i = 0; i < rep.satake.size(); ++i) {
      rep.satake[i] = {satake_value(spec.satake[2 * i]), satake_value(spec.satake[2 * i + 1])};
    }
  }
  try {
    validate(rep);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return rep;
}

LocalFieldElement element_of(const std::optional<std::string>& text, long p, const char* what) {
  if (!text) return {};
  try {
    LocalFieldElement x = LocalFieldElement::parse(*text, p);
    if (is_zero(x.unit)) throw UsageError(std::string(what) + " must be nonzero");
    return x;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed ") + what + ": " + e.what());
  }
}

bool has_satake_symbols(const RationalFunction& f) {
  for (const auto* p : {&f.num(), &f.den()}) {
    for (const auto& t : p->terms()) {
      for (auto v : kAllVars) {
        if (v != Var::u && v != Var::T && t.mono[v] != 0) return true;
      }
    }
  }
  return false;
}

void add_value(ordered_json& doc, const char* key, const RationalFunction& f, const JobSpec& spec, long p) {
  if (!spec.s || has_satake_symbols(f)) return;
  doc[key] = pair_json(f.evaluate(numeric_point(static_cast<double>(p), parse_complex(*spec.s))));
}

ordered_json rep_json(const AsaiRepData& rep) {
  ordered_json pairs = ordered_json::array();
  for (const auto& s : rep.satake) pairs.push_back({to_string(s.alpha), to_string(s.beta)});
  return pairs;
}

ordered_json header(const JobSpec& spec, const AsaiRepData& rep) {
  return ordered_json{{"command", spec.command}, {"shape", spec.shape}, {"p", rep.p}, {"satake", rep_json(rep)}};
}

ordered_json identity(const std::string& name, const RationalFunction& lhs, const RationalFunction& rhs,
                      bool& all) {
  const bool ok = lhs == rhs;
  all = all && ok;
  return ordered_json{{"name", name}, {"pass", ok}, {"lhs", fn_json(lhs)}, {"rhs", fn_json(rhs)}};
}

JobResult run_lfactor(const JobSpec& spec) {
  const AsaiRepData rep = rep_of(spec);
  ordered_json doc = header(spec, rep);
  ordered_json factors = ordered_json::array();
  for (const auto& f : asai_cube_euler_factors(rep)) {
    factors.push_back({{"coef", fn_json(f.coef)}, {"t_power", f.t_power}});
  }
  const RationalFunction L = asai_cube_L(rep);
  doc["euler_factors"] = factors;
  doc["L"] = fn_json(L);
  add_value(doc, "L_value", L, spec, rep.p);
  return {kOk, doc.dump()};
}

JobResult run_gamma(const JobSpec& spec) {
  const AsaiRepData rep = rep_of(spec);
  const LocalFieldElement a = element_of(spec.psi_twist, rep.p, "psi twist");
  const LocalFactorTriple t = asai_cube_gamma(rep, a);
  ordered_json doc = header(spec, rep);
  doc["psi_twist"] = to_string(a);
  doc["L"] = fn_json(t.L);
  doc["L_dual"] = fn_json(reflect_s(asai_cube_L(contragredient(rep))));
  doc["eps"] = fn_json(t.eps);
  doc["gamma"] = fn_json(t.gamma);
  add_value(doc, "gamma_value", t.gamma, spec, rep.p);
  return {kOk, doc.dump()};
}

JobResult run_verify(const JobSpec& spec) {
  const AsaiRepData rep = rep_of(spec);
  const LocalFieldElement a = element_of(spec.psi_twist, rep.p, "psi twist");
  std::optional<LocalFieldElement> basis;
  if (spec.basis_disc) basis = element_of(spec.basis_disc, rep.p, "basis discriminant");
  const LocalFieldElement delta = basis.value_or(reference_discriminant(rep));
  bool all = true;
  ordered_json ids = ordered_json::array();
  RationalFunction lhs;
  try {
    lhs = gamma_psr(rep, basis, a);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  ids.push_back(identity("theorem1", lhs, correction_factor(rep, delta) * asai_cube_gamma(rep, a).gamma, all));
  ids.push_back(identity("induced_rep_L", induced_rep_oracle(rep).L, asai_cube_L(rep), all));
  if (rep.shape.kind == ShapeKind::CubicTameRamified) {
    const TameZetaContext ctx{rep.satake[0].alpha, rep.satake[0].beta};
    const RationalFunction closed = zeta_tame_closed_form(ctx);
    ids.push_back(identity("zeta_closed_form", zeta_tame(ctx).total, closed, all));
    const RationalFunction w = ctx.omega();
    const RationalFunction dual_closed = (abelian_L(w, 2, 2) * abelian_L(w.pow(2), 4, 0)).inverse() *
                                         reflect_s(asai_cube_L(contragredient(rep)));
    ids.push_back(identity("dual_zeta_closed_form", dual_zeta_tame(ctx), dual_closed, all));
  }
  ordered_json doc = header(spec, rep);
  doc["basis_disc"] = to_string(delta);
  doc["psi_twist"] = to_string(a);
  doc["identities"] = ids;
  doc["pass"] = all;
  return {all ? kOk : kIdentityFailure, doc.dump()};
}

JobResult run_zeta(const JobSpec& spec) {
  if (shape_of(spec) != ShapeKind::CubicTameRamified) throw UnsupportedShape("zeta-tame needs shape cubic_tame");
  const AsaiRepData rep = rep_of(spec);
  const TameZetaContext ctx{rep.satake[0].alpha, rep.satake[0].beta};
  ZetaDecomposition z;
  try {
    z = zeta_tame(ctx);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  const RationalFunction closed = zeta_tame_closed_form(ctx);
  ordered_json doc = header(spec, rep);
  doc["Z0"] = fn_json(z.Z0);
  doc["Z1"] = fn_json(z.Z1);
  doc["total"] = fn_json(z.total);
  doc["closed_form"] = fn_json(closed);
  doc["equal"] = z.total == closed;
  add_value(doc, "total_value", z.total, spec, rep.p);
  return {z.total == closed ? kOk : kIdentityFailure, doc.dump()};
}

CycloPoly to_cyclo(const RationalFunction& f) {
  if (!f.is_polynomial()) throw std::logic_error("expected a polynomial");
  const Rational d = f.den().constant_term();
  std::vector<CycloPoly::Term> terms;
  for (const auto& t : f.num().terms()) terms.push_back({t.mono, CyclotomicNumber(t.coef / d)});
  return CycloPoly::from_terms(std::move(terms));
}

JobResult run_whittaker(const JobSpec& spec) {
  const long p = residue_prime(spec);
  const long N = spec.N.value_or(10);
  if (N < 0 || N > 40) throw UsageError("--N must lie in 0..40 for whittaker");
  const SchwartzFunction2D phi = SchwartzFunction2D::unramified(p);
  ordered_json values = ordered_json::array();
  std::optional<CyclotomicNumber> c;
  bool proportional = true;
  for (long n = 0; n <= N; ++n) {
    const CycloPoly w = whittaker_eval(phi, {}, GroupWord{WeilGenerator::a(power(Rational(p), n))});
    const CycloPoly sh = to_cyclo(shintani(static_cast<int>(n)));
    if (!c) c = w.coefficient(sh.leading_term().mono) * inverse(sh.leading_term().coef);
    proportional = proportional && w == sh.scaled(*c);
    values.push_back({{"n", n},
                      {"W", ordered_json::parse(to_json(w))},
                      {"shintani", ordered_json::parse(to_json(sh))}});
  }
  ordered_json doc{{"command", spec.command}, {"p", p}, {"values", values}};
  doc["constant"] = ordered_json::parse(to_json(*c));
  doc["proportional"] = proportional;
  return {proportional ? kOk : kIdentityFailure, doc.dump()};
}

JobResult run_oracle(const JobSpec& spec) {
  if (shape_of(spec) != ShapeKind::CubicTameRamified) throw UnsupportedShape("oracle needs shape cubic_tame");
  OracleParams p;
  p.q = spec.q.value_or(5);
  if (p.q != std::floor(p.q) || p.q < 2 || p.q > 1e9) throw UsageError("--q must be a prime power");
  try {
    prime_power_decompose(static_cast<long>(p.q));
  } catch (const std::invalid_argument&) {
    throw UsageError("--q must be a prime power");
  }
  if (spec.s) p.s = parse_complex(*spec.s);
  if (!spec.satake.empty()) {
    if (spec.satake.size() != 2) throw UsageError("oracle needs two complex Satake values");
    p.alpha = parse_complex(spec.satake[0]);
    p.beta = parse_complex(spec.satake[1]);
    if (p.alpha == 0.0 || p.beta == 0.0) throw UsageError("Satake values must be nonzero");
  }
  p.N = spec.N.value_or(60);
  p.D = spec.D.value_or(p.N);
  if (p.N > 100000) throw UsageError("--N too large");
  OracleReport r;
  try {
    r = numeric_oracle(p);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  ordered_json tail = ordered_json::array();
  for (const auto& t : r.tail) {
    tail.push_back({{"N", t.N}, {"error", t.error}, {"scale", t.scale}, {"doubled_error", t.doubled_error}, {"bound", t.bound},
                    {"ok", t.ok}});
  }
  ordered_json doc{{"command", spec.command},
                   {"params",
                    {{"q", p.q},
                     {"alpha", pair_json(p.alpha)},
                     {"beta", pair_json(p.beta)},
                     {"s", pair_json(p.s)},
                     {"N", p.N},
                     {"D", p.D}}},
                   {"truncated", pair_json(r.truncated)},
                   {"closed_form", pair_json(r.closed_form)},
                   {"rel_error", r.rel_error},
                   {"decay_ratio", r.decay_ratio},
                   {"tail", tail},
                   {"tail_geometric", r.tail_geometric}};
  return {kOk, doc.dump()};
}

JobResult error_result(int code, const std::string& message) {
  ordered_json doc{{"error", message}, {"exit_code", code}};
  return {code, doc.dump() + "\n"};
}

}  // namespace

JobResult run(const JobSpec& spec) {
  try {
    JobResult r;
    if (spec.command == "lfactor") {
      r = run_lfactor(spec);
    } else if (spec.command == "gamma") {
      r = run_gamma(spec);
    } else if (spec.command == "verify-theorem1") {
      r = run_verify(spec);
    } else if (spec.command == "zeta-tame") {
      r = run_zeta(spec);
    } else if (spec.command == "whittaker") {
      r = run_whittaker(spec);
    } else if (spec.command == "oracle") {
      r = run_oracle(spec);
    } else {
      throw UsageError("unknown command: " + spec.command);
    }
    r.json += "\n";
    return r;
  } catch (const UsageError& e) {
    return error_result(kUsage, e.what());
  } catch (const UnsupportedShape& e) {
    return error_result(kUnsupportedShape, e.what());
  } catch (const std::exception& e) {
    return error_result(kInternal, e.what());
  }
}

std::string canonical_job(const JobSpec& spec) {
  json j;  // std::map keys: sorted
  j["command"] = spec.command;
  j["shape"] = spec.shape;
  j["satake"] = spec.satake;
  j["basis_disc"] = spec.basis_disc ? json(*spec.basis_disc) : json(nullptr);
  j["psi_twist"] = spec.psi_twist ? json(*spec.psi_twist) : json(nullptr);
  j["q"] = spec.q ? json(*spec.q) : json(nullptr);
  j["s"] = spec.s ? json(*spec.s) : json(nullptr);
  j["N"] = spec.N ? json(*spec.N) : json(nullptr);
  j["D"] = spec.D ? json(*spec.D) : json(nullptr);
  return j.dump();
}

std::uint64_t job_hash(const JobSpec& spec) {
  std::uint64_t h = 14695981039346656037ULL;  // FNV-1a
  for (unsigned char c : canonical_job(spec)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

JobSpec job_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw UsageError(std::string("malformed job JSON: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("job must be a JSON object");
  try {
    JobSpec spec;
    spec.command = j.at("command").get<std::string>();
    if (j.contains("shape")) spec.shape = j["shape"].get<std::string>();
    if (j.contains("satake")) {
      const auto& s = j["satake"];
      if (s.is_string()) {
        spec.satake = split_list(s.get<std::string>());
      } else {
        for (const auto& item : s) {
          if (item.is_array()) {
            for (const auto& v : item) spec.satake.push_back(v.get<std::string>());
          } else {
            spec.satake.push_back(item.get<std::string>());
          }
        }
      }
    }
    auto text_field = [&](const char* key, std::optional<std::string>& dst) {
      if (!j.contains(key)) return;
      dst = j[key].is_string() ? j[key].get<std::string>() : j[key].dump();
    };
    text_field("basis_disc", spec.basis_disc);
    text_field("psi_twist", spec.psi_twist);
    text_field("s", spec.s);
    // Residue characteristic may be given as "p".
    if (j.contains("q")) spec.q = j["q"].get<double>();
    else if (j.contains("p")) spec.q = j["p"].get<double>();
    if (j.contains("N")) spec.N = j["N"].get<long>();
    if (j.contains("D")) spec.D = j["D"].get<long>();
    if (j.contains("out")) spec.out = j["out"].get<std::string>();
    return spec;
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad job field: ") + e.what());
  }
}

namespace {

std::optional<JobResult> cache_read(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  JobResult r;
  std::string first;
  if (!std::getline(in, first)) return std::nullopt;
  try {
    r.exit_code = std::stoi(first);
  } catch (const std::exception&) {
    return std::nullopt;
  }
  std::stringstream rest;
  rest << in.rdbuf();
  r.json = rest.str();
  if (r.json.empty()) return std::nullopt;
  return r;
}

void cache_write(const std::filesystem::path& path, const JobResult& r) {
  std::error_code ec;
  std::filesystem::create_directories(path.parent_path(), ec);
  const auto tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) return;
    out << r.exit_code << "\n" << r.json;
  }
  std::filesystem::rename(tmp, path, ec);
}

}  // namespace

int cli_main(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Asai-cube local factors and the tame cubic zeta integral"};
  app.require_subcommand(0, 1);
  std::string job_file;
  app.add_option("--job", job_file, "JSON job file");

  JobSpec spec;
  std::string satake;
  for (const auto& [name, about] : kCommands) {
    CLI::App* sub = app.add_subcommand(name, about);
    sub->add_option("--shape", spec.shape, "split | quad_unram | cubic_unram | cubic_tame");
    sub->add_option("--satake", satake, "symbolic, or comma-separated values (two per factor)");
    sub->add_option("--basis-disc", spec.basis_disc, "basis discriminant, \"v:unit\" or a rational");
    sub->add_option("--psi-twist", spec.psi_twist, "additive character twist a, \"v:unit\" or a rational");
    sub->add_option("--q", spec.q, "residue field size");
    sub->add_option("--s", spec.s, "complex s for numeric values");
    sub->add_option("--N", spec.N, "truncation / table length");
    sub->add_option("--D", spec.D, "oracle shell depth (defaults to N)");
    sub->add_option("--out", spec.out, "write JSON here instead of stdout");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (!job_file.empty()) {
    std::ifstream in(job_file);
    if (!in) {
      err << "cannot read " << job_file << "\n";
      return kUsage;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
      spec = job_from_json(ss.str());
    } catch (const UsageError& e) {
      err << e.what() << "\n";
      return kUsage;
    }
  } else {
    if (app.get_subcommands().empty()) {
      err << app.help();
      return kUsage;
    }
    spec.command = app.get_subcommands().front()->get_name();
    if (!satake.empty()) spec.satake = split_list(satake);
  }

  std::optional<std::filesystem::path> cache_path;
  if (const char* dir = std::getenv("ASAI_CACHE_DIR"); dir && *dir) {
    std::ostringstream name;
    name << std::hex << std::setw(16) << std::setfill('0') << job_hash(spec) << ".json";
    cache_path = std::filesystem::path(dir) / name.str();
  }
  std::optional<JobResult> result;
  if (cache_path) result = cache_read(*cache_path);
  if (!result) {
    result = run(spec);
    if (cache_path && (result->exit_code == kOk || result->exit_code == kIdentityFailure)) {
      cache_write(*cache_path, *result);
    }
  }

  if (result->exit_code != kOk && result->exit_code != kIdentityFailure) {
    err << "asai: " << ordered_json::parse(result->json).value("error", std::string("failed")) << "\n";
  }
  if (spec.out) {
    std::ofstream f(*spec.out, std::ios::binary);
    if (!f) {
      err << "cannot write " << *spec.out << "\n";
      return kUsage;
    }
    f << result->json;
  } else {
    out << result->json;
  }
  return result->exit_code;
}

}  // namespace asai::cli
