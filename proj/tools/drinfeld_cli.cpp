// Command-line front end: slope tables, theorem checks and raw Hecke matrices.
// Exit codes: 0 ok, 2 configuration error, 3 budget exhausted, 4 a check failed.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "drinfeld/errors.hpp"
#include "drinfeld/json_io.hpp"
#include "drinfeld/slopes.hpp"

using namespace drinfeld;

namespace {

struct Config {
  int q = 3;
  std::string field_modulus;
  std::string level = "gamma1:t";
  std::string k = "2..12";
  std::vector<std::string> qs;
  std::optional<int> chi;
  std::optional<int> n, nprime;
  std::string a = "1";
  int r = 1;
  std::uint64_t seed = 1;
  int trials = 100;
  int precision = 0;
  std::string out;
  std::string format = "json";
  int threads = 1;
  // verify only
  std::string which;
  std::optional<int> kprime, k1, k2;
  int d0 = 2, dim = 6;
};

std::vector<int> parse_weights(const std::string& s) {
  std::vector<int> out;
  auto to_int = [&](const std::string& x) {
    try {
      size_t pos = 0;
      int v = std::stoi(x, &pos);
      if (pos != x.size()) throw ConfigError("");
      return v;
    } catch (const std::exception&) {
      throw ConfigError("bad weight '" + x + "'");
    }
  };
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    if (part.empty()) continue;
    size_t dots = part.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    int lo = to_int(part.substr(0, dots)), hi = to_int(part.substr(dots + 2));
    for (int k = lo; k <= hi; ++k) out.push_back(k);
  }
  for (int k : out)
    if (k < 2) throw ConfigError("weights start at 2");
  return out;
}

const Field& make_field(const Config& c) {
  int p = 0, e = 0;
  for (int cand = 2; cand <= c.q; ++cand) {
    if (c.q % cand) continue;
    p = cand;
    int x = c.q;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (x != 1) throw ConfigError("q must be a prime power");
    break;
  }
  if (p == 0) throw ConfigError("q must be a prime power");
  FieldSpec spec{p, e, {}};
  std::stringstream ss(c.field_modulus);
  std::string tok;
  while (std::getline(ss, tok, ',')) spec.modulus.push_back(std::stoi(tok));
  return Field::get(spec);
}

struct Context {
  const Field* f;
  LevelSpec level;
  Fq shift = 0;
  std::unique_ptr<QuotientData> qd;

  Poly poly(const std::string& s) const {
    Poly p = parse_poly(*f, s);
    return shift ? shift_var(p, shift) : p;
  }
};

Context make_context(const Config& c) {
  Context ctx;
  ctx.f = &make_field(c);
  ctx.level = parse_level(*ctx.f, c.level, c.r, &ctx.shift);
  ctx.qd = std::make_unique<QuotientData>(*ctx.f, ctx.level);
  ctx.qd->lambda1();  // build the lazy tables before any worker starts
  return ctx;
}

void emit(const Config& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream os(c.out);
  if (!os) throw ConfigError("cannot open " + c.out);
  os << text;
}

template <class F>
void parallel_for(int count, int threads, F body) {
  threads = std::max(1, std::min(threads, count));
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += threads) body(i);
    });
  for (auto& th : pool) th.join();
}

int cmd_slopes(const Config& c) {
  if (c.format != "json" && c.format != "csv") throw ConfigError("format must be json or csv");
  Context ctx = make_context(c);
  std::vector<int> ks = parse_weights(c.k);
  std::vector<SlopeTable> tables(ks.size());
  std::vector<std::exception_ptr> errs(ks.size());
  parallel_for(static_cast<int>(ks.size()), c.threads, [&](int i) {
    try {
      CocycleEngine eng(*ctx.qd, ks[i]);
      tables[i] = slope_decomposition(eng, c.chi);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  });
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);

  std::ostringstream os;
  if (c.format == "csv") {
    os << "k,chi,slope_num,slope_den,mult\n";
    for (const SlopeTable& t : tables) {
      std::string chi = t.chi ? std::to_string(*t.chi) : "";
      for (const Segment& s : t.entries)
        os << t.k << ',' << chi << ',' << s.slope.num() << ',' << s.slope.den() << ',' << s.length << '\n';
      if (t.infinite) os << t.k << ',' << chi << ",inf,1," << t.infinite << '\n';
    }
  } else {
    json arr = json::array();
    for (const SlopeTable& t : tables) {
      json rows = json::array();
      for (const Segment& s : t.entries) rows.push_back({{"slope_num", s.slope.num()}, {"slope_den", s.slope.den()}, {"mult", s.length}});
      json row = {{"k", t.k}, {"dim", t.dim}, {"slopes", rows}, {"infinite", t.infinite}};
      if (t.chi) row["chi"] = *t.chi;
      arr.push_back(row);
    }
    os << json{{"level", ctx.level.str()}, {"q", ctx.f->q()}, {"tables", arr}}.dump(2) << '\n';
  }
  emit(c, os.str());
  return 0;
}

Rational parse_rational(const std::string& s) {
  try {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(std::stoll(s));
    return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
  } catch (const std::exception&) {
    throw ConfigError("bad rational '" + s + "'");
  }
}

int valuation_p(long long x, long long p) {
  if (x == 0) return 30;
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

std::vector<Report> run_verify(const Config& c, Context& ctx) {
  const Field& f = *ctx.f;
  QuotientData& qd = *ctx.qd;
  std::vector<Report> reps;
  const std::vector<int> ks = parse_weights(c.k);
  auto qpolys = [&](std::vector<std::string> dflt) {
    std::vector<Poly> out;
    for (const auto& s : c.qs.empty() ? dflt : c.qs) out.push_back(ctx.poly(s));
    return out;
  };
  const int n = c.n.value_or(1);

  if (c.which == "eldiv") {
    for (int k : ks) {
      CocycleEngine eng(qd, k);
      PolyMatrix u = hecke_matrix(eng, Poly::t(f));
      if (c.chi) u = chi_part_matrix(eng, *c.chi, u);
      Report r = check_eldiv_bound(u, qd.d());
      r.params["k"] = k;
      reps.push_back(r);
    }
  } else if (c.which == "window") {
    for (int k : ks) reps.push_back(check_window(qd, k, n, c.chi));
  } else if (c.which == "constancy") {
    long long step = 1;
    for (int i = 0; i < n; ++i) step *= f.p();
    if (c.chi) step *= f.q() - 1;
    for (int k : ks) reps.push_back(check_constancy(qd, k, c.kprime.value_or(k + static_cast<int>(step)), n, c.chi));
  } else if (c.which == "hida") {
    const int prec = c.precision > 0 ? c.precision : 16;
    for (int k : ks) reps.push_back(hida_check(f, ctx.level.n, k, c.r, c.r + 1, qpolys({"t+1", "t^2+1"}), prec));
  } else if (c.which == "perturb") {
    PerturbConfig pc;
    pc.bp = BoundParams{f.p(), n, c.d0, 0};
    pc.dim = c.dim;
    pc.trials = c.trials;
    pc.seed = c.seed;
    pc.threads = c.threads;
    reps.push_back(perturb_trials(f, pc));
  } else if (c.which == "family") {
    FamilyParams fp;
    fp.k1 = c.k1.value_or(10);
    fp.k2 = c.k2.value_or(19);
    fp.a = parse_rational(c.a);
    // n is the full p-adic agreement of the weights; --n only has to be
    // compatible with it.
    fp.n = fp.k1 == fp.k2 ? std::max(1, n) : valuation_p(fp.k2 - fp.k1, f.p());
    if (c.n && *c.n > fp.n) throw ConfigError("k2 - k1 is not divisible by p^n");
    fp.nprime = c.nprime.value_or(1);
    fp.precision = c.precision;
    for (const Poly& q : qpolys({"t"})) {
      fp.q = q;
      reps.push_back(family_congruence(qd, fp));
    }
  } else {
    throw ConfigError("unknown check '" + c.which + "'");
  }
  return reps;
}

int cmd_verify(const Config& c) {
  Context ctx = make_context(c);
  std::vector<Report> reps = run_verify(c, ctx);
  bool fail = false;
  json arr = json::array();
  for (const Report& r : reps) {
    fail = fail || r.verdict() == "FAIL";
    arr.push_back(r.to_json());
  }
  std::ostringstream os;
  if (c.format == "csv") {
    os << "claim,verdict\n";
    for (const Report& r : reps) os << '"' << r.claim << "\"," << r.verdict() << '\n';
  } else {
    os << json{{"check", c.which}, {"level", ctx.level.str()}, {"reports", arr}, {"verdict", fail ? "FAIL" : "PASS"}}.dump(2) << '\n';
  }
  emit(c, os.str());
  return fail ? 4 : 0;
}

int cmd_dump(const Config& c) {
  Context ctx = make_context(c);
  std::vector<int> ks = parse_weights(c.k);
  if (ks.size() != 1) throw ConfigError("dump-matrix takes a single weight");
  CocycleEngine eng(*ctx.qd, ks[0]);
  Poly q = ctx.poly(c.qs.empty() ? "t" : c.qs[0]);
  PolyMatrix m = hecke_matrix(eng, q);
  if (c.chi) m = chi_part_matrix(eng, *c.chi, m);
  emit(c, to_json(m).dump() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Slopes of Drinfeld cuspforms via harmonic cocycles"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* s) {
    s->add_option("--q", c.q, "Field size (prime power)")->capture_default_str();
    s->add_option("--field-modulus", c.field_modulus, "Ascending coefficients of the F_q modulus, comma separated");
    s->add_option("--level", c.level, "gamma1:<poly>[,<poly>^r] | gamma0p:<poly>^r | theta:<g1>/<g2>")->capture_default_str();
    s->add_option("--k", c.k, "Weights: 2..12, 10 or 3,5,7")->capture_default_str();
    s->add_option("--Q", c.qs, "Hecke primes (repeatable)");
    s->add_option("--chi", c.chi, "Character exponent c, chi(l) = l^c");
    s->add_option("--r", c.r, "t-power of a theta level; base r for hida")->capture_default_str();
    s->add_option("--precision", c.precision, "t-adic precision (0 = automatic)")->capture_default_str();
    s->add_option("--out", c.out, "Output file (default stdout)");
    s->add_option("--format", c.format, "json or csv")->capture_default_str()->check(CLI::IsMember({"json", "csv"}));
    s->add_option("--threads", c.threads, "Worker threads; never changes results")->capture_default_str()->check(CLI::PositiveNumber);
  };

  CLI::App* slopes = app.add_subcommand("slopes", "Slope tables of U = T_t");
  common(slopes);

  CLI::App* verify = app.add_subcommand("verify", "Check a theorem on computed data");
  common(verify);
  verify->add_option("which", c.which, "eldiv | window | constancy | hida | perturb | family")
      ->required()
      ->check(CLI::IsMember({"eldiv", "window", "constancy", "hida", "perturb", "family"}));
  verify->add_option("--n", c.n, "Exponent n of p^n (default 1; family: from the weights)");
  verify->add_option("--nprime", c.nprime, "Exponent n' of the family bound (default 1)");
  verify->add_option("--a", c.a, "Slope for family")->capture_default_str();
  verify->add_option("--kprime", c.kprime, "Second weight for constancy (default k + step)");
  verify->add_option("--k1", c.k1, "First family weight (default 10)");
  verify->add_option("--k2", c.k2, "Second family weight (default 19)");
  verify->add_option("--seed", c.seed, "Seed for perturb")->capture_default_str();
  verify->add_option("--trials", c.trials, "Trials for perturb")->capture_default_str();
  verify->add_option("--d0", c.d0, "Elementary divisor step for perturb")->capture_default_str();
  verify->add_option("--dim", c.dim, "Matrix size for perturb")->capture_default_str();

  CLI::App* dump = app.add_subcommand("dump-matrix", "Hecke matrix as JSON");
  common(dump);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*slopes) return cmd_slopes(c);
    if (*verify) {
      if (c.which != "constancy" && c.which != "family" && verify->count("--k") == 0) c.k = "3..10";
      if (c.which == "constancy" && verify->count("--k") == 0) c.k = "4";
      return cmd_verify(c);
    }
    if (*dump) {
      if (dump->count("--k") == 0) c.k = "2";
      return cmd_dump(c);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const BudgetError& e) {
    std::cerr << "budget exhausted: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
