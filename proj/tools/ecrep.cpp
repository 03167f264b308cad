// ecrep: command-line front end.
//
// Exit codes: 0 success, 1 usage error, 2 mathematical or precision failure.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ecrep/counting.hpp"
#include "ecrep/fracpart.hpp"
#include "ecrep/identity.hpp"
#include "ecrep/verify.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitMath = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::int64_t p = 0;
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t n = 0;
  std::int64_t m = 0;
  std::string method;
  int bits = 192;
  std::string output = "text";
  std::optional<std::uint64_t> seed;
  std::string suite = "all";
  std::int64_t max_p = 101;
  unsigned workers = 1;
  bool include_singular = false;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int default_bits() {
  if (const char* env = std::getenv("ECREP_BITS")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("ECREP_BITS is not an integer: " + std::string(env));
    }
  }
  return 192;
}

ecrep::PrecisionContext context_for(const Options& o) {
  if (o.bits < ecrep::PrecisionContext::kMinBits) throw UsageError("--bits must be at least 64");
  return ecrep::make_context(o.bits);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void require_output(const Options& o, bool csv_allowed) {
  if (o.output == "csv" && !csv_allowed) throw UsageError("csv output is only available for verify");
}

int cmd_count(const Options& o) {
  require_output(o, false);
  const auto ctx = context_for(o);
  const ecrep::Method method = ecrep::parse_method(o.method);
  const ecrep::CurveParams curve{o.a, o.b, o.p};
  Timer timer;
  ecrep::CountResult r;
  switch (method) {
    case ecrep::Method::naive: r = ecrep::count_naive(curve, o.include_singular); break;
    case ecrep::Method::legendre: r = ecrep::count_legendre(curve, o.include_singular); break;
    case ecrep::Method::expsum: r = ecrep::count_expsum(curve, ctx, o.workers); break;
    case ecrep::Method::thm2: r = ecrep::count_thm2(curve, ctx, o.workers); break;
    case ecrep::Method::thm3: r = ecrep::count_thm3(curve, ctx, o.workers); break;
  }
  const double elapsed = timer.ms();
  const bool singular = ecrep::discriminant_class(curve) == ecrep::DiscriminantClass::singular;
  const bool hasse = ecrep::hasse_check(r.n_p, o.p);

  if (o.output == "json") {
    json j;
    j["command"] = "count";
    j["p"] = o.p;
    j["a"] = o.a;
    j["b"] = o.b;
    j["method"] = std::string(ecrep::to_string(method));
    j["n_p"] = r.n_p;
    j["residual"] = r.residual.serialize();
    j["hasse_ok"] = hasse;
    j["singular"] = singular;
    if (r.l_value) j["l_value"] = *r.l_value;
    j["bits"] = o.bits;
    j["elapsed_ms"] = elapsed;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "method     " << ecrep::to_string(method) << "\n"
              << "n_p        " << r.n_p << "\n"
              << "residual   " << r.residual.to_string(6) << "\n"
              << "hasse      " << (hasse ? "ok" : "violated") << "\n"
              << "curve      " << (singular ? "singular" : "nonsingular") << "\n";
    if (r.l_value) std::cout << "L          " << *r.l_value << "\n";
    std::cout << "elapsed_ms " << elapsed << "\n";
  }
  return 0;
}

int cmd_verify(const Options& o) {
  const auto ctx = context_for(o);
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = ecrep::suite_names();
  } else {
    suites.push_back(o.suite);
  }
  const ecrep::SuiteOptions options{o.max_p, o.seed, o.workers};
  bool all_pass = true;
  json records = json::array();
  if (o.output == "csv") std::cout << "suite,case,pass,deviation,detail\n";
  for (const auto& name : suites) {
    const ecrep::SuiteReport report = ecrep::run_suite(name, ctx, options);
    all_pass = all_pass && report.pass();
    if (o.output == "csv") {
      for (const auto& row : report.rows) {
        std::cout << csv_field(row.suite) << ',' << csv_field(row.label) << ',' << (row.pass ? "pass" : "fail") << ','
                  << csv_field(row.deviation) << ',' << csv_field(row.detail) << "\n";
      }
    } else if (o.output == "json") {
      json j;
      j["command"] = "verify";
      j["suite"] = report.name;
      j["pass"] = report.pass();
      j["cases"] = report.cases;
      j["failures"] = report.failures;
      j["worst_deviation"] = report.worst_deviation;
      j["bits"] = o.bits;
      j["elapsed_ms"] = report.elapsed_ms;
      records.push_back(std::move(j));
    } else {
      std::cout << (report.pass() ? "PASS " : "FAIL ") << report.name << "  cases=" << report.cases
                << " failures=" << report.failures << " worst=" << report.worst_deviation
                << " ms=" << static_cast<long>(report.elapsed_ms) << "\n";
      for (const auto& row : report.rows) {
        if (!row.pass) std::cout << "  fail " << row.label << ": " << row.deviation << " " << row.detail << "\n";
      }
    }
  }
  if (o.output == "json") std::cout << records.dump() << "\n";
  return all_pass ? 0 : kExitMath;
}

int cmd_identity(const Options& o) {
  require_output(o, false);
  if (o.p < 2) throw UsageError("identity needs --p >= 2");
  const auto ctx = context_for(o);
  Timer timer;
  const ecrep::IdentityReport r = ecrep::identity_check(o.p, ctx, o.workers);
  const double elapsed = timer.ms();
  if (o.output == "json") {
    json j;
    j["command"] = "identity";
    j["p"] = o.p;
    j["identity_sum"] = r.identity_sum.serialize();
    j["abs_error"] = r.abs_error.serialize();
    j["q_sum"] = r.q_sum.serialize();
    j["r_sum"] = r.r_sum.serialize();
    j["bits"] = o.bits;
    j["elapsed_ms"] = elapsed;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "identity_sum " << r.identity_sum.to_string(30) << "\n"
              << "abs_error    " << r.abs_error.to_string(6) << "\n"
              << "q_sum        " << r.q_sum.to_string(6) << "\n"
              << "r_sum        " << r.r_sum.to_string(6) << "\n";
  }
  return 0;
}

int cmd_fracpart(const Options& o) {
  require_output(o, false);
  if (o.n < 1 || o.p < 2) throw UsageError("fracpart needs --n >= 1 and --p >= 2");
  const auto ctx = context_for(o);
  Timer timer;
  const ecrep::FloorSumReport r = ecrep::floor_via_expsum(o.n, o.p, ctx);
  const ecrep::XReal frac = ecrep::frac_via_expsum(o.n, o.p, ctx);
  std::optional<bool> prop4;
  if (o.p >= 3 && o.n >= 2) prop4 = ecrep::prop4_verify(o.n, o.p);
  std::optional<ecrep::XReal> prop5;
  if (o.p >= 3 && ecrep::is_prime(o.p)) prop5 = ecrep::prop5_lower_bound(o.n, o.p, ctx);
  const double elapsed = timer.ms();
  if (o.output == "json") {
    json j;
    j["command"] = "fracpart";
    j["p"] = o.p;
    j["n"] = o.n;
    j["floor_value"] = r.floor_value;
    j["frac"] = frac.serialize();
    j["deviation"] = r.deviation.serialize();
    if (prop4) j["prop4_ok"] = *prop4;
    if (prop5) j["prop5_bound"] = prop5->serialize();
    j["bits"] = o.bits;
    j["elapsed_ms"] = elapsed;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "floor      " << r.floor_value << "\n"
              << "frac       " << frac.to_string(30) << "\n"
              << "deviation  " << r.deviation.to_string(6) << "\n";
    if (prop4) std::cout << "recursion  " << (*prop4 ? "holds" : "fails") << "\n";
    if (prop5) std::cout << "lower bnd  " << prop5->to_string(12) << "\n";
  }
  return 0;
}

int cmd_gauss(const Options& o) {
  require_output(o, false);
  const auto ctx = context_for(o);
  std::int64_t lo = 1, hi = o.p - 1;
  if (o.m != 0) lo = hi = o.m;
  json records = json::array();
  for (std::int64_t m = lo; m <= hi; ++m) {
    const auto direct = ecrep::gauss_sum_direct(m, o.p, ctx);
    const auto closed = ecrep::gauss_sum_closed(m, o.p, ctx);
    const ecrep::XReal diff = (direct.value - closed.value).abs();
    if (o.output == "json") {
      json j;
      j["command"] = "gauss";
      j["p"] = o.p;
      j["m"] = m;
      j["direct"] = direct.value.serialize();
      j["closed"] = closed.value.serialize();
      j["difference"] = diff.serialize();
      j["bits"] = o.bits;
      records.push_back(std::move(j));
    } else {
      std::cout << "m=" << m << "  direct " << direct.value.re.to_string(20) << " + " << direct.value.im.to_string(20)
                << "i  |direct-closed| " << diff.to_string(4) << "\n";
    }
  }
  if (o.output == "json") std::cout << records.dump() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elliptic-curve point counts through exponential sums"};
  app.require_subcommand(1);
  Options o;
  try {
    o.bits = default_bits();
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  }

  auto common = [&](CLI::App* sub) {
    sub->add_option("--bits", o.bits, "working precision in bits (default 192, env ECREP_BITS)");
    sub->add_option("--output", o.output, "text or json")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--workers", o.workers, "worker threads (0 = hardware)");
  };

  auto* count = app.add_subcommand("count", "count points of y^2 = x^3 + ax + b mod p");
  count->add_option("--p", o.p)->required();
  count->add_option("--a", o.a)->required();
  count->add_option("--b", o.b)->required();
  count->add_option("--method", o.method, "naive, legendre, expsum, thm2, thm3")
      ->required()
      ->check(CLI::IsMember({"naive", "legendre", "expsum", "thm2", "thm3"}));
  count->add_flag("--include-singular", o.include_singular, "count singular congruences too (naive, legendre)");
  common(count);

  auto* verify = app.add_subcommand("verify", "run the invariant suites");
  std::vector<std::string> suite_choices = ecrep::suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", o.suite)->check(CLI::IsMember(suite_choices));
  verify->add_option("--max-p", o.max_p)->check(CLI::Range(3, 101));
  verify->add_option("--seed", o.seed, "adds seeded random curves to the counting suites");
  common(verify);

  auto* identity = app.add_subcommand("identity", "sum identity for f(x) = x");
  identity->add_option("--p", o.p)->required();
  common(identity);

  auto* fracpart = app.add_subcommand("fracpart", "floor and fractional part via exponential sums");
  fracpart->add_option("--n", o.n)->required();
  fracpart->add_option("--p", o.p)->required();
  common(fracpart);

  auto* gauss = app.add_subcommand("gauss", "quadratic Gauss sums, direct and closed form");
  gauss->add_option("--p", o.p)->required();
  gauss->add_option("--m", o.m, "single m (default: all 1..p-1)");
  common(gauss);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (count->parsed()) return cmd_count(o);
    if (verify->parsed()) return cmd_verify(o);
    if (identity->parsed()) return cmd_identity(o);
    if (fracpart->parsed()) return cmd_fracpart(o);
    if (gauss->parsed()) return cmd_gauss(o);
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ecrep::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitMath;
  }
  return kExitUsage;
}
