// resline: command-line front end for the invariant polynomials, the group
// actions, the characteristic-p invariants and the verification suites.
//
// Exit status: 0 success, 1 a verification failed, 2 usage error.

#include "resline/action.hpp"
#include "resline/charp.hpp"
#include "resline/pmk.hpp"
#include "resline/qft.hpp"
#include "resline/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace resline;
using nlohmann::json;

/// Thrown for bad parameter values; maps to exit status 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep)
{
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep))
    if (!item.empty())
      out.push_back(item);
  return out;
}

Rational rational_arg(const std::string& text, const std::string& what)
{
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw UsageError(what + ": not a rational number: " + text);
  }
}

std::vector<Rational> rational_list(const std::string& text, const std::string& what)
{
  std::vector<Rational> out;
  for (const auto& item : split(text, ','))
    out.push_back(rational_arg(item, what));
  return out;
}

std::string join_rationals(const std::vector<Rational>& v)
{
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out += (i ? ", " : "") + to_string(v[i]);
  return out;
}

struct Output {
  bool json_mode = false;

  void emit(const json& j, const std::string& text) const
  {
    if (json_mode)
      std::cout << j.dump(2) << "\n";
    else
      std::cout << text;
  }

  int report(const Report& r) const
  {
    emit(r.to_json(), r.to_text());
    return r.passed() ? 0 : 1;
  }
};

// ---------------------------------------------------------------------------

struct PmkArgs {
  int m = 0;
  int k = 1;
  std::string lambda = "-2";
  std::string construction = "partition";
  std::optional<std::string> expect;
};

int run_pmk(const PmkArgs& a, const Output& out)
{
  const PmkSpec s = PmkSpec::make(a.m, a.k, rational_arg(a.lambda, "--lambda"));
  std::optional<MultiPoly> expected;
  if (a.expect) {
    try {
      expected = parse_poly(*a.expect);
    } catch (const std::invalid_argument& e) {
      throw UsageError("--expect: " + std::string(e.what()));
    }
  }
  json j = {{"m", s.m}, {"k", s.k}, {"lambda", to_string(s.lambda)}, {"construction", a.construction}};
  const MultiPoly p = a.construction == "generating"    ? pmk_generating(s)
                      : a.construction == "determinant" ? pmk_determinant(s)
                                                        : pmk_partition(s);
  j["poly"] = p.to_json();
  j["text"] = p.str();
  Report rep("checks " + s.str());
  if (a.construction == "all") {
    const MultiPoly g = pmk_generating(s);
    const MultiPoly d = pmk_determinant(s);
    rep.add("generating equals partition", g == p, g == p ? "" : g.str());
    rep.add("determinant equals partition", d == p, d == p ? "" : d.str());
  }
  if (expected)
    rep.add("matches --expect", *expected == p, *expected == p ? "" : "expected " + expected->str());
  if (rep.checks().empty()) {
    out.emit(j, p.str() + "\n");
    return 0;
  }
  j["report"] = rep.to_json();
  out.emit(j, p.str() + "\n" + rep.to_text());
  return rep.passed() ? 0 : 1;
}

struct FieldArgs {
  std::string lambda = "-2";
  std::string mu = "0";
  std::string coeffs;

  TensorField field(const std::string& suffix = "") const
  {
    TensorField t{rational_arg(lambda, "--lambda" + suffix), rational_arg(mu, "--mu" + suffix),
                  rational_list(coeffs, "--coeffs" + suffix)};
    if (t.coeffs.empty())
      throw UsageError("--coeffs" + suffix + " must list at least one coefficient");
    return t;
  }
};

std::string field_text(const TensorField& t)
{
  return "lambda=" + to_string(t.lambda) + " mu=" + to_string(t.mu) + " coeffs: " + join_rationals(t.coeffs) + "\n";
}

struct ActArgs {
  FieldArgs field;
  std::string g;
  int level = 1;
  std::optional<std::uint64_t> seed;
  int depth = 0;
};

int run_act(const ActArgs& a, const Output& out)
{
  const TensorField t = a.field.field();
  const int prec = t.precision() + 1;
  Automorphism g = Automorphism::identity(prec);
  if (a.seed) {
    const int depth = a.depth > 0 ? a.depth : t.precision();
    if (depth <= a.level)
      throw UsageError("--depth must exceed --level");
    g = random_automorphism(a.level, depth, *a.seed, std::max(prec, depth + 1));
  } else {
    auto tail = rational_list(a.g, "--g");
    if (static_cast<int>(tail.size()) > prec - a.level - 1)
      tail.resize(static_cast<std::size_t>(std::max(prec - a.level - 1, 0)));
    g = Automorphism::make(a.level, tail, prec);
  }
  const TensorField image = act(g, t);
  out.emit({{"input", t.to_json()}, {"g", g.to_json()}, {"output", image.to_json()}},
           "g = " + g.series().str() + "\n" + field_text(image));
  return 0;
}

struct NormalFormArgs {
  FieldArgs field;
  int m = 0;
};

int run_normal_form(const NormalFormArgs& a, const Output& out)
{
  const TensorField t = a.field.field();
  const NormalForm nf = normal_form(t, a.m);
  json j = {{"input", t.to_json()},
            {"canonical", nf.canonical.to_json()},
            {"witness", nf.witness.to_json()},
            {"resonant_index", nf.resonant_index ? json(*nf.resonant_index) : json(nullptr)},
            {"exceptional", nf.exceptional}};
  std::string text = field_text(nf.canonical) + "witness g = " + nf.witness.series().str() + "\n";
  if (nf.resonant_index)
    text += "resonant index " + std::to_string(*nf.resonant_index) + "\n";
  if (nf.exceptional)
    text += "exceptional orbit (lambda = 0, mu a non-positive integer)\n";
  out.emit(j, text);
  return 0;
}

struct FresArgs {
  std::string lambda = "-2";
  std::string coeffs;
  int k = 1;
};

int run_fres(const FresArgs& a, const Output& out)
{
  const Rational lambda = rational_arg(a.lambda, "--lambda");
  if (lambda == 0)
    throw UsageError("lambda must be nonzero");
  const TensorField t{lambda, lambda * (a.k + 1), rational_list(a.coeffs, "--coeffs")};
  const Rational r = fractional_residue(t, a.k);
  out.emit({{"k", a.k}, {"lambda", to_string(lambda)}, {"mu", to_string(t.mu)}, {"residue", to_string(r)}},
           to_string(r) + "\n");
  return 0;
}

struct PairArgs {
  FieldArgs a;
  FieldArgs b;
};

int run_pair(const PairArgs& p, const Output& out)
{
  const TensorField a = p.a.field();
  const TensorField b = p.b.field("2");
  const Rational v = pairing(a, b);
  out.emit({{"first", a.to_json()}, {"second", b.to_json()}, {"pairing", to_string(v)}}, to_string(v) + "\n");
  return 0;
}

struct LieArgs {
  int m = 0;
  int n = 2;
  std::optional<long long> p;
};

int run_lie_check(const LieArgs& a, const Output& out)
{
  if (a.m < 0 || a.n < 2 * a.m + 2)
    throw UsageError("lie-check needs n >= 2m+2");
  if (a.p)
    return out.report(restricted_invariance_check(a.m, a.n, *a.p));
  return out.report(center_invariants_check(a.m, a.n));
}

struct WidthArgs {
  long long p = 2;
  std::string series;
  std::optional<int> prec;
};

/// "e:v,e:v,..." over F_p, known to O(t^prec).
TruncatedSeries<Fp> parse_fp_series(const WidthArgs& a)
{
  PrimeField f(a.p);
  std::vector<std::pair<int, Fp>> terms;
  for (const auto& item : split(a.series, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw UsageError("--series items are exponent:coefficient, got " + item);
    try {
      terms.emplace_back(std::stoi(item.substr(0, colon)), f.from_rational(parse_rational(item.substr(colon + 1))));
    } catch (const std::logic_error& e) {
      throw UsageError("--series: " + std::string(e.what()));
    }
  }
  if (terms.empty())
    throw UsageError("--series is empty");
  int lo = terms.front().first;
  int hi = terms.front().first;
  for (const auto& [e, v] : terms) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  const int prec = a.prec.value_or(hi + 1);
  if (prec <= hi)
    throw UsageError("--prec must exceed every listed exponent");
  std::vector<Fp> c(static_cast<std::size_t>(prec - lo), f.zero());
  for (const auto& [e, v] : terms)
    c[static_cast<std::size_t>(e - lo)] += v;
  return TruncatedSeries<Fp>(lo, std::move(c), prec, f.zero());
}

int run_width(const WidthArgs& a, const Output& out)
{
  if (!is_prime(a.p))
    throw UsageError("-p must be prime");
  const auto h = parse_fp_series(a);
  const CharpInvariants inv = charp_invariants(h, a.p);
  auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json("inf"); };
  auto opt_text = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("inf"); };
  json j = {{"p", a.p},
            {"series", h.to_json()},
            {"ord0", opt(inv.ord0)},
            {"md", opt(inv.md)},
            {"ord_md", opt(inv.ord_md)},
            {"certified", inv.certified}};
  std::string text = "ord0 = " + opt_text(inv.ord0) + "\nmd = " + opt_text(inv.md) + "\nord_md = " +
                     opt_text(inv.ord_md) + "\n";
  if (inv.certified && inv.ord_md) {
    const int w = width(h, a.p);
    j["width"] = w;
    text += "width = " + std::to_string(w) + "\n";
  } else {
    j["width"] = nullptr;
    text += "width undetermined: series constant to precision\n";
  }
  out.emit(j, text);
  return 0;
}

struct LucasArgs {
  long long p = 2;
  std::string k = "0";
  std::string parts;
};

int run_lucas(const LucasArgs& a, const Output& out)
{
  if (!is_prime(a.p))
    throw UsageError("-p must be prime");
  Integer k;
  if (k.set_str(a.k, 10) != 0)
    throw UsageError("-k must be an integer");
  std::vector<std::uint64_t> qs;
  for (const auto& item : split(a.parts, ',')) {
    try {
      const long long v = std::stoll(item);
      if (v < 0)
        throw UsageError("--parts must be nonnegative");
      qs.push_back(static_cast<std::uint64_t>(v));
    } catch (const std::logic_error&) {
      throw UsageError("--parts: not an integer: " + item);
    }
  }
  const LucasResult r = lucas_multinomial(k, qs, a.p);
  json parts = json::array();
  for (auto q : qs)
    parts.push_back(q);
  out.emit({{"p", a.p}, {"k", to_string(k)}, {"parts", parts}, {"residue", r.residue}, {"nonzero", r.nonzero}},
           std::to_string(r.residue) + "\n");
  return 0;
}

struct CounterexampleArgs {
  long long p = 2;
  int n = 16;
};

int run_counterexample(const CounterexampleArgs& a, const Output& out)
{
  if (!is_prime(a.p))
    throw UsageError("-p must be prime");
  if (a.n < a.p * a.p)
    throw UsageError("-N must be at least p^2");
  const auto h = counterexample_series(a.p, a.n);
  Report rep("counterexample p=" + std::to_string(a.p));
  rep.add("h - c h^p = t^p to O(t^" + std::to_string(a.n) + ")", true);
  json j = {{"p", a.p}, {"N", a.n}, {"series", h.to_json()}, {"report", rep.to_json()}};
  out.emit(j, "h = " + h.str() + "\n" + rep.to_text());
  return 0;
}

struct RestrictedArgs {
  int m = 0;
  int n = 4;
  long long p = 7;
};

int run_restricted(const RestrictedArgs& a, const Output& out)
{
  if (!is_prime(a.p) || a.p == 2)
    throw UsageError("-p must be an odd prime");
  if (a.m < 0 || a.n < 2 * a.m + 2 || a.n > a.p - 2)
    throw UsageError("restricted needs 2m+2 <= n <= p-2");
  return out.report(restricted_invariance_check(a.m, a.n, a.p));
}

struct QftArgs {
  int kmax = 4;
  bool verify = false;
};

int run_qft(const QftArgs& a, const Output& out)
{
  if (a.kmax < 2)
    throw UsageError("--kmax must be >= 2");
  const auto rec = qft_recursion(a.kmax);
  json polys = json::array();
  std::string text;
  for (int k = 2; k <= a.kmax; ++k) {
    const MultiPoly& p = rec[static_cast<std::size_t>(k - 2)];
    polys.push_back({{"k", k}, {"poly", p.to_json()}, {"text", p.str()}});
    text += "P" + std::to_string(k) + " = " + p.str() + "\n";
  }
  json j = {{"kmax", a.kmax}, {"polys", polys}};
  int status = 0;
  if (a.verify) {
    Report rep("qft recursion against closed form");
    for (int k = 2; k <= a.kmax; ++k)
      rep.merge(qft_check(k, &rec), "k=" + std::to_string(k) + ": ");
    j["report"] = rep.to_json();
    text += rep.to_text();
    status = rep.passed() ? 0 : 1;
  }
  out.emit(j, text);
  return status;
}

struct VerifyArgs {
  std::string suite = "all";
  int jobs = 1;
};

int run_verify(const VerifyArgs& a, const Output& out)
{
  std::vector<std::string> names;
  if (a.suite == "all") {
    for (const auto& s : verify::suites())
      names.push_back(s.name);
  } else {
    const auto& all = verify::suites();
    if (std::none_of(all.begin(), all.end(), [&](const verify::Suite& s) { return s.name == a.suite; }))
      throw UsageError("unknown suite: " + a.suite);
    names.push_back(a.suite);
  }
  // results are collected in suite order whatever the completion order
  std::vector<std::optional<Report>> results(names.size());
  const std::size_t jobs = static_cast<std::size_t>(std::max(a.jobs, 1));
  for (std::size_t start = 0; start < names.size(); start += jobs) {
    std::vector<std::future<Report>> batch;
    for (std::size_t i = start; i < std::min(names.size(), start + jobs); ++i)
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [name = names[i]] { return verify::run_suite(name); }));
    for (std::size_t i = 0; i < batch.size(); ++i)
      results[start + i] = batch[i].get();
  }
  bool passed = true;
  json suites = json::array();
  std::string text;
  for (const auto& r : results) {
    passed = passed && r->passed();
    suites.push_back(r->to_json());
    text += r->to_text();
  }
  text += std::string(passed ? "all suites passed" : "verification FAILED") + "\n";
  out.emit({{"passed", passed}, {"suites", suites}}, text);
  return passed ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"resline: invariant polynomials of formal tensor fields on a line"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  PmkArgs pmk;
  auto* pmk_cmd = app.add_subcommand("pmk", "Compute P_{mk} for the exponent -1/lambda");
  pmk_cmd->add_option("-m", pmk.m, "m >= 0")->required();
  pmk_cmd->add_option("-k", pmk.k, "k >= 1")->required();
  pmk_cmd->add_option("--lambda", pmk.lambda, "Nonzero rational lambda")->required();
  pmk_cmd->add_option("--construction", pmk.construction, "Which construction to run")
      ->check(CLI::IsMember({"generating", "partition", "determinant", "all"}));
  pmk_cmd->add_option("--expect", pmk.expect, "Claimed expansion; exit 1 when it differs");

  ActArgs act_args;
  auto* act_cmd = app.add_subcommand("act", "Apply g in G_level to a tensor field");
  act_cmd->add_option("--lambda", act_args.field.lambda)->required();
  act_cmd->add_option("--mu", act_args.field.mu)->required();
  act_cmd->add_option("--coeffs", act_args.field.coeffs, "x_0,x_1,...")->required();
  auto* g_opt = act_cmd->add_option("--g", act_args.g, "g_{level+1},g_{level+2},...");
  act_cmd->add_option("--level", act_args.level, "g = t + O(t^{level+1})");
  auto* seed_opt = act_cmd->add_option("--seed", act_args.seed, "Draw g at random from this seed");
  act_cmd->add_option("--depth", act_args.depth, "Last random coefficient index");
  g_opt->excludes(seed_opt);

  NormalFormArgs nf_args;
  auto* nf_cmd = app.add_subcommand("normal-form", "Normal form under G_{m+1}");
  nf_cmd->add_option("--lambda", nf_args.field.lambda)->required();
  nf_cmd->add_option("--mu", nf_args.field.mu)->required();
  nf_cmd->add_option("--coeffs", nf_args.field.coeffs)->required();
  nf_cmd->add_option("-m", nf_args.m, "Fixed coefficients x_0..x_m");

  FresArgs fres_args;
  auto* fres_cmd = app.add_subcommand("fres", "Fractional residue at mu = (k+1) lambda");
  fres_cmd->add_option("--lambda", fres_args.lambda)->required();
  fres_cmd->add_option("-k,--k", fres_args.k)->required();
  fres_cmd->add_option("--coeffs", fres_args.coeffs)->required();

  PairArgs pair_args;
  auto* pair_cmd = app.add_subcommand("pair", "Residue pairing of two tensor fields");
  pair_cmd->add_option("--lambda", pair_args.a.lambda)->required();
  pair_cmd->add_option("--mu", pair_args.a.mu)->required();
  pair_cmd->add_option("--coeffs", pair_args.a.coeffs)->required();
  pair_cmd->add_option("--lambda2", pair_args.b.lambda)->required();
  pair_cmd->add_option("--mu2", pair_args.b.mu)->required();
  pair_cmd->add_option("--coeffs2", pair_args.b.coeffs)->required();

  LieArgs lie_args;
  auto* lie_cmd = app.add_subcommand("lie-check", "Center generators killed by L(m+1,n+1)");
  lie_cmd->add_option("-m", lie_args.m)->required();
  lie_cmd->add_option("-n", lie_args.n)->required();
  lie_cmd->add_option("-p", lie_args.p, "Restricted truncation over F_p");

  WidthArgs width_args;
  auto* width_cmd = app.add_subcommand("width", "ord0, md, ord_md and width over F_p");
  width_cmd->add_option("-p", width_args.p)->required();
  width_cmd->add_option("--series", width_args.series, "exponent:coefficient,...")->required();
  width_cmd->add_option("--prec", width_args.prec, "Known to O(t^prec)");

  LucasArgs lucas_args;
  auto* lucas_cmd = app.add_subcommand("lucas", "Multinomial (k; q_1, q_2, ...) mod p");
  lucas_cmd->add_option("-p", lucas_args.p)->required();
  lucas_cmd->add_option("-k", lucas_args.k)->required();
  lucas_cmd->add_option("--parts", lucas_args.parts, "q1,q2,...")->required();

  CounterexampleArgs ce_args;
  auto* ce_cmd = app.add_subcommand("counterexample", "Series over F_p(c) without polynomial normal form");
  ce_cmd->add_option("-p", ce_args.p)->required();
  ce_cmd->add_option("-N", ce_args.n)->required();

  RestrictedArgs r_args;
  auto* r_cmd = app.add_subcommand("restricted", "Restricted center check over F_p");
  r_cmd->add_option("-m", r_args.m)->required();
  r_cmd->add_option("-n", r_args.n)->required();
  r_cmd->add_option("-p", r_args.p)->required();

  QftArgs qft_args;
  auto* qft_cmd = app.add_subcommand("qft", "Recursive polynomials P_2..P_kmax");
  qft_cmd->add_option("--kmax", qft_args.kmax)->required();
  qft_cmd->add_flag("--verify", qft_args.verify, "Compare with the closed form");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites");
  verify_cmd->add_option("--suite", verify_args.suite, "Suite name or all");
  verify_cmd->add_option("--jobs", verify_args.jobs, "Suites run in parallel");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  const Output out{format == "json"};
  try {
    if (*pmk_cmd)
      return run_pmk(pmk, out);
    if (*act_cmd)
      return run_act(act_args, out);
    if (*nf_cmd)
      return run_normal_form(nf_args, out);
    if (*fres_cmd)
      return run_fres(fres_args, out);
    if (*pair_cmd)
      return run_pair(pair_args, out);
    if (*lie_cmd)
      return run_lie_check(lie_args, out);
    if (*width_cmd)
      return run_width(width_args, out);
    if (*lucas_cmd)
      return run_lucas(lucas_args, out);
    if (*ce_cmd)
      return run_counterexample(ce_args, out);
    if (*r_cmd)
      return run_restricted(r_args, out);
    if (*qft_cmd)
      return run_qft(qft_args, out);
    if (*verify_cmd)
      return run_verify(verify_args, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  }
  std::cerr << app.help();
  return 2;
}
