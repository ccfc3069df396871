#include "hrmc/cli.hpp"

#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hrmc/code_space.hpp"
#include "hrmc/errors.hpp"
#include "hrmc/io.hpp"
#include "hrmc/macwilliams.hpp"
#include "hrmc/verify.hpp"

namespace hrmc {

namespace {

struct RunConfig {
  std::uint64_t guard = kDefaultEnumerationGuard;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string format = "json";
};

struct Args {
  RunConfig config;
  std::int64_t q = 2;
  std::int64_t t = 2;
  std::string input;
  std::string dist;
  std::string size;
  std::optional<std::int64_t> phi;
  std::optional<std::int64_t> d;
  std::uint64_t trials = 20;
};

std::uint64_t default_guard() {
  if (const char* env = std::getenv("HRMC_GUARD")) {
    try {
      std::size_t used = 0;
      const auto v = std::stoull(env, &used);
      if (used == std::string(env).size() && v >= 1) return v;
    } catch (const std::exception&) {
    }
    throw ParseError(std::string("HRMC_GUARD must be a positive integer, got '") + env + "'");
  }
  return kDefaultEnumerationGuard;
}

std::string join(const std::vector<BigInt>& v, const char* sep = ", ") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

const char* verdict(bool ok) { return ok ? "PASS" : "FAIL"; }

NegQContext context_for(std::int64_t q) {
  if (q < 2) throw UnsupportedField("q must be a prime power >= 2");
  Field::for_q(static_cast<std::uint64_t>(q));  // throws UnsupportedField
  return NegQContext(q);
}

void require_t(std::int64_t t) {
  if (t < 1) throw InvalidArgument("t must be at least 1");
}

int cmd_count(const Args& a, std::ostream& out) {
  const NegQContext ctx = context_for(a.q);
  require_t(a.t);
  std::vector<BigInt> counts;
  BigInt sum = 0;
  for (std::int64_t h = 0; h <= a.t; ++h) {
    counts.push_back(xi(ctx, a.t, h));
    sum += counts.back();
  }
  const BigInt expected = pow_int(BigInt(a.q), static_cast<std::uint64_t>(a.t * a.t));
  const bool ok = sum == expected;
  if (a.config.format == "json") {
    Json j;
    j["q"] = a.q;
    j["t"] = a.t;
    j["counts"] = decimal_strings(counts);
    j["sum"] = sum.str();
    j["expected"] = expected.str();
    j["status"] = verdict(ok);
    emit(out, j);
  } else {
    out << "h  xi(" << a.t << ",h)\n";
    for (std::int64_t h = 0; h <= a.t; ++h) out << h << "  " << counts[static_cast<std::size_t>(h)] << "\n";
    out << "sum " << sum << " = q^(t^2) " << expected << "  " << verdict(ok) << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_eigen(const Args& a, std::ostream& out) {
  const NegQContext ctx = context_for(a.q);
  require_t(a.t);
  const EigenTable q_table = eigen_table_Q(ctx, a.t);
  const EigenTable c_table = eigen_table_C(ctx, a.t);
  const bool ok = q_table == c_table;
  if (a.config.format == "json") {
    Json j = to_json(q_table);
    j["routes_agree"] = ok;
    j["status"] = verdict(ok);
    emit(out, j);
  } else {
    out << "Q_k(x," << a.t << ") rows x, columns k\n";
    for (const auto& row : q_table.values) out << join(row, "  ") << "\n";
    out << "C = Q: " << verdict(ok) << "\n";
  }
  if (!ok) throw RouteMismatch("krawtchouk_C and krawtchouk_Q tables differ");
  return kExitOk;
}

LinearCode load_code(const Args& a) {
  if (a.input.empty()) throw ParseError("--input is required");
  return code_from_json(read_json_file(a.input));
}

EnumerationOptions enum_options(const RunConfig& c) { return {c.guard, c.workers}; }

int cmd_wd(const Args& a, std::ostream& out) {
  const LinearCode code = load_code(a);
  const WeightDistribution w = weight_distribution(code, enum_options(a.config));
  const auto q = static_cast<std::int64_t>(code.field().q());
  const auto t = static_cast<std::int64_t>(code.t());
  if (a.config.format == "json") {
    emit(out, to_json(w, q, t, code.dimension()));
  } else {
    out << "q=" << q << " t=" << t << " k=" << code.dimension() << "\n";
    out << "counts: " << join(w.counts) << "\n";
  }
  return kExitOk;
}

Json moment_json(const MomentPair& m) {
  Json j;
  j["lhs"] = m.lhs.str();
  j["rhs"] = m.rhs.str();
  j["holds"] = m.holds();
  return j;
}

int cmd_dual(const Args& a, std::ostream& out) {
  const LinearCode code = load_code(a);
  const EnumerationOptions opts = enum_options(a.config);
  const auto q = static_cast<std::int64_t>(code.field().q());
  const auto t = static_cast<std::int64_t>(code.t());
  const NegQContext ctx(q);

  const LinearCode dual = dual_code(code);
  const bool dual_agrees = dual_code_brute_force(code, opts) == dual;
  const WeightDistribution c = weight_distribution(code, opts);
  const WeightDistribution c_dual = weight_distribution(dual, opts);
  const WeightDistribution transformed = macwilliams_transform(ctx, c, code.size(), t);
  const WeightDistribution eig = macwilliams_eigen(ctx, c, code.size(), t);
  const bool identity = transformed == c_dual && eig == c_dual;

  std::int64_t lo = 0;
  std::int64_t hi = t;
  if (a.phi) {
    if (*a.phi < 0 || *a.phi > t) throw IndexOutOfRange("--phi must lie in [0, t]");
    lo = hi = *a.phi;
  }
  bool moments_ok = true;
  Json moments = Json::array();
  for (std::int64_t phi = lo; phi <= hi; ++phi) {
    const MomentPair mq = moment_q(ctx, c, c_dual, dual.size(), t, phi);
    const MomentPair mi = moment_qinv(ctx, c, c_dual, dual.size(), t, phi);
    moments_ok = moments_ok && mq.holds() && mi.holds();
    Json m;
    m["phi"] = phi;
    m["q_derivative"] = moment_json(mq);
    m["q_inverse_derivative"] = moment_json(mi);
    moments.push_back(std::move(m));
  }
  const bool ok = identity && dual_agrees && moments_ok;

  if (a.config.format == "json") {
    Json j;
    j["code"] = to_json(c, q, t, code.dimension());
    j["dual"] = to_json(c_dual, q, t, dual.dimension());
    j["dual_code"] = code_to_json(dual);
    j["brute_force_dual_agrees"] = dual_agrees;
    j["transform"] = decimal_strings(transformed.counts);
    j["eigen"] = decimal_strings(eig.counts);
    j["identity"] = verdict(identity);
    j["moments"] = std::move(moments);
    j["status"] = verdict(ok);
    emit(out, j);
  } else {
    out << "code (k=" << code.dimension() << "):  " << join(c.counts) << "\n";
    out << "dual (k=" << dual.dimension() << "):  " << join(c_dual.counts) << "\n";
    out << "transform:    " << join(transformed.counts) << "\n";
    out << "brute-force dual agrees: " << verdict(dual_agrees) << "\n";
    out << "MacWilliams identity:    " << verdict(identity) << "\n";
    out << "moment identities:       " << verdict(moments_ok) << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_macwilliams(const Args& a, std::ostream& out) {
  const NegQContext ctx = context_for(a.q);
  require_t(a.t);
  if (a.dist.empty()) throw ParseError("--dist is required");
  const WeightDistribution c = parse_distribution_list(a.dist);
  const BigInt size = a.size.empty() ? c.total() : parse_bigint(a.size);
  const WeightDistribution eig = macwilliams_eigen(ctx, c, size, a.t);
  const WeightDistribution tr = macwilliams_transform(ctx, c, size, a.t);
  const bool ok = eig == tr;
  if (a.config.format == "json") {
    Json j;
    j["q"] = a.q;
    j["t"] = a.t;
    j["input"] = decimal_strings(c.counts);
    j["code_size"] = size.str();
    j["dual"] = decimal_strings(tr.counts);
    j["eigen"] = decimal_strings(eig.counts);
    j["routes_agree"] = ok;
    j["status"] = verdict(ok);
    emit(out, j);
  } else {
    out << "transform: " << join(tr.counts) << "\n";
    out << "eigen:     " << join(eig.counts) << "\n";
    out << "routes agree: " << verdict(ok) << "\n";
  }
  if (!ok) throw RouteMismatch("eigenvalue and transform routes disagree");
  return kExitOk;
}

int cmd_mhrd(const Args& a, std::ostream& out) {
  const NegQContext ctx = context_for(a.q);
  require_t(a.t);
  if (!a.d) throw ParseError("--d is required");
  const std::int64_t d = *a.d;
  const BigInt dual_size = a.size.empty() && d >= 1
                               ? pow_int(BigInt(a.q), static_cast<std::uint64_t>(a.t * (d - 1)))
                               : parse_bigint(a.size.empty() ? "0" : a.size);
  const WeightDistribution w = mhrd_distribution(ctx, a.t, d, dual_size);
  if (a.config.format == "json") {
    Json j;
    j["q"] = a.q;
    j["t"] = a.t;
    j["d"] = d;
    j["dual_size"] = dual_size.str();
    j["counts"] = decimal_strings(w.counts);
    emit(out, j);
  } else {
    out << "MHRD q=" << a.q << " t=" << a.t << " d=" << d << ": " << join(w.counts) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const Args& a, std::ostream& out) {
  context_for(a.q);
  require_t(a.t);
  VerifyOptions opts;
  opts.q = a.q;
  opts.t = a.t;
  opts.trials = a.trials;
  opts.seed = a.config.seed;
  opts.workers = a.config.workers;
  opts.guard = a.config.guard;
  const auto suites = run_verification(opts);
  bool ok = true;
  for (const auto& s : suites) ok = ok && s.ok();
  if (a.config.format == "json") {
    Json j;
    j["q"] = a.q;
    j["t"] = a.t;
    j["trials"] = a.trials;
    j["seed"] = a.config.seed;
    Json arr = Json::array();
    for (const auto& s : suites) {
      Json e;
      e["suite"] = s.name;
      e["passed"] = s.passed;
      e["total"] = s.total;
      e["status"] = verdict(s.ok());
      e["failures"] = s.failures;
      arr.push_back(std::move(e));
    }
    j["suites"] = std::move(arr);
    j["status"] = verdict(ok);
    emit(out, j);
  } else {
    for (const auto& s : suites) {
      out << std::left << std::setw(18) << s.name << std::right << std::setw(8) << s.passed << "/" << std::left
          << std::setw(8) << s.total << verdict(s.ok()) << "\n";
      for (const auto& f : s.failures) out << "    " << f << "\n";
    }
    out << "overall: " << verdict(ok) << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Args a;
  try {
    a.config.guard = default_guard();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  CLI::App app{"Exact MacWilliams identities for Hermitian rank-metric codes", "hrmc"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--guard", a.config.guard, "Maximum number of enumerated matrices/codewords")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", a.config.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", a.config.format, "Output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--seed", a.config.seed, "RNG seed");
  };
  auto add_qt = [&](CLI::App* sub) {
    sub->add_option("--q", a.q, "Subfield size q (prime power)")->required();
    sub->add_option("--t", a.t, "Matrix side t")->required();
  };

  auto* count = app.add_subcommand("count", "Number of Hermitian matrices of each rank");
  add_qt(count);
  add_common(count);
  auto* eigen = app.add_subcommand("eigen", "Eigenvalue table Q_k(x,t), checked against the Krawtchouk form");
  add_qt(eigen);
  add_common(eigen);
  auto* wd = app.add_subcommand("wd", "Weight distribution of a code file");
  wd->add_option("--input", a.input, "Code JSON file")->required();
  add_common(wd);
  auto* dual = app.add_subcommand("dual", "Dual code, both distributions and the identity checks");
  dual->add_option("--input", a.input, "Code JSON file")->required();
  dual->add_option("--phi", a.phi, "Report moments for this phi only");
  add_common(dual);
  auto* mw = app.add_subcommand("macwilliams", "MacWilliams transform of a weight distribution");
  add_qt(mw);
  mw->add_option("--dist", a.dist, "Weight distribution c0,c1,...,ct")->required();
  mw->add_option("--size", a.size, "Code size |C| (default: sum of the distribution)");
  add_common(mw);
  auto* mhrd = app.add_subcommand("mhrd", "Weight distribution of an MHRD code with odd minimum distance");
  add_qt(mhrd);
  mhrd->add_option("--d", a.d, "Minimum rank distance (odd)")->required();
  mhrd->add_option("--size", a.size, "Dual code size |C^perp| (default: q^(t(d-1)))");
  add_common(mhrd);
  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  add_qt(verify);
  verify->add_option("--trials", a.trials, "Random instances per randomized suite")->check(CLI::PositiveNumber);
  add_common(verify);

  std::vector<const char*> argv;
  for (const auto& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*count) return cmd_count(a, out);
    if (*eigen) return cmd_eigen(a, out);
    if (*wd) return cmd_wd(a, out);
    if (*dual) return cmd_dual(a, out);
    if (*mw) return cmd_macwilliams(a, out);
    if (*mhrd) return cmd_mhrd(a, out);
    if (*verify) return cmd_verify(a, out);
  } catch (const RouteMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hrmc
