// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include <fmt/format.h>

#include "oracles.hpp"
#include "rieszlab/approx.hpp"
#include "rieszlab/config.hpp"
#include "rieszlab/ledger.hpp"
#include "rieszlab/moments.hpp"
#include "rieszlab/riesz.hpp"
#include "rieszlab/verify.hpp"

using namespace rieszlab;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::string note;
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

// Exact rational value of a dyadic.
oracle::cpp_rational rational(const Dyadic& d) {
  oracle::cpp_rational v(d.numerator());
  if (d.exponent() >= 0) return v * oracle::cpp_rational(oracle::cpp_int(1) << static_cast<unsigned>(d.exponent()));
  return v / oracle::cpp_rational(oracle::cpp_int(1) << static_cast<unsigned>(-d.exponent()));
}

Outcome structure() {
  const auto t0 = Clock::now();
  const auto seq = make_sequence(3, Rational(3), 8);
  for (std::size_t N = 0; N <= 8; ++N) {
    const TrigPoly R = riesz_product(seq, N);
    std::size_t count = 1;
    for (std::size_t j = 0; j < N; ++j) count *= 3;
    if (R.size() != count) return {false, fmt::format("N={} has {} terms", N, R.size())};
    if (rational(R.exact_coeff(0).real()) != 1) return {false, fmt::format("N={} constant term", N)};
    // every eps in {-1,0,1}^N, enumerated in base 3
    for (std::size_t code = 0; code < count; ++code) {
      std::int64_t freq = 0, n = 1;
      unsigned support = 0;
      std::size_t c = code;
      for (std::size_t j = 0; j < N; ++j, c /= 3) {
        n *= 3;
        const int e = static_cast<int>(c % 3) - 1;
        freq += e * n;
        support += e != 0;
      }
      const auto z = R.exact_coeff(freq);
      if (rational(z.imag()) != 0 ||
          rational(z.real()) != oracle::cpp_rational(1, oracle::cpp_int(1) << support)) {
        return {false, fmt::format("N={} coefficient at {}", N, freq)};
      }
    }
  }
  const double s = seconds_since(t0);
  return {s < 5.0, fmt::format("3^N terms and 2^-|supp| coefficients for N<=8, {:.2f}s", s)};
}

Outcome oracle_agreement() {
  double worst_norm = 0.0, worst_x = 0.0;
  for (const auto& seq : {make_sequence(1, Rational(3), 5), make_sequence(2, Rational(7, 2), 5)}) {
    for (std::size_t N = 1; N <= 5; ++N) {
      const TrigPoly R = riesz_product(seq, N);
      for (unsigned m : {1U, 2U, 3U}) {
        const auto exact = lp_even_exact(R, m);
        const auto quad = lp_quadrature(R, 2.0 * m, {.tol = 1e-13});
        worst_norm = std::max(worst_norm, std::abs(quad.value - exact.value) / exact.value);
      }
    }
  }
  for (double p : {0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 5.0}) {
    const double g = oracle::x_moment_gamma(p);
    worst_x = std::max(worst_x, std::abs(x_moment(p).value - g) / g);
  }
  return {worst_norm <= 1e-8 && worst_x <= 1e-10,
          fmt::format("exact vs quadrature {:.2e}, x_moment vs Gamma {:.2e}", worst_norm, worst_x)};
}

Outcome lower_floor() {
  const auto t0 = Clock::now();
  const double floor = 2e-5;
  const auto seq = make_sequence(1, Rational(3), 6);
  double worst = INFINITY;
  std::size_t sets = 0, unconverged = 0;
  auto take = [&](const RatioEvaluation& r) {
    ++sets;
    unconverged += !r.converged;
    worst = std::min(worst, r.ratio);
  };
  for (std::size_t N = 0; N <= 6; ++N) {
    const TheoremEvaluator ev(seq, N, 1.0);
    for (const auto& v : coefficient_sets({}, N, 1)) take(ev(v, ENorm::L2));
  }
  const TheoremEvaluator ev(seq, 6, 1.0);
  CoefficientSpec random{.kind = CoefficientKind::Random, .dim = 3, .count = 1000};
  const auto vs = coefficient_sets(random, 6, 2024);
  for (ENorm e : {ENorm::L1, ENorm::L2, ENorm::Linf})
    for (const auto& v : vs) take(ev(v, e));
  const double s = seconds_since(t0);
  return {worst >= floor && unconverged == 0 && s < 300.0,
          fmt::format("{} sets, observed min lower ratio {:.6g} (floor {:g}), {} unconverged, {:.1f}s", sets, worst, floor,
                      unconverged, s)};
}

Outcome upper_bound() {
  const auto t0 = Clock::now();
  std::string note;
  bool ok = true;
  for (double p : {1.5, 2.0, 3.0}) {
    const auto d = static_cast<std::int64_t>(std::ceil(80.0 * p * p));
    const auto seq = make_sequence(1, Rational(d), 3);
    const double C = std::pow(16.0 * p, p + 1.0);
    double worst = 0.0;
    for (std::size_t N = 1; N <= 3; ++N) {
      const TheoremEvaluator ev(seq, N, p);
      auto sets = coefficient_sets({}, N, 1);
      CoefficientSpec random{.kind = CoefficientKind::Random, .dim = 3, .count = 4};
      for (auto& v : coefficient_sets(random, N, 77)) sets.push_back(std::move(v));
      for (const auto& v : sets) {
        const auto r = ev(v, ENorm::L2);
        ok = ok && r.converged && r.ratio <= C;
        worst = std::max(worst, r.ratio);
      }
    }
    note += fmt::format("p={} d={} max ratio {:.4g} <= {:.4g} (margin {:.4g}); ", p, d, worst, C, C - worst);
  }
  const double s = seconds_since(t0);
  return {ok && s < 600.0, note + fmt::format("{:.1f}s", s)};
}

Outcome lemma_suite() {
  std::size_t total = 0, failed = 0;
  std::string first;
  for (const char* id : {"L4.1", "L4.2", "L4.4", "L4.5", "L4.5a", "L4.5b", "L4.6", "L2.3", "C2", "C6.1", "C6.2", "L6.3"}) {
    for (const auto& inst : default_instances(id)) {
      ++total;
      CheckResult r;
      try {
        r = check_lemma(id, inst);
      } catch (const std::exception& e) {
        r.pass = false;
        r.error = e.what();
      }
      if (!r.pass) {
        ++failed;
        if (first.empty()) first = fmt::format(" first: {} {} {}", id, inst.dump(), r.error);
      }
    }
  }
  const auto eq = check_lemma("L4.2", {{"p", 1}, {"k", 1}});
  const bool eighth = eq.pass && eq.exact_lhs && eq.exact_rhs && rational(*eq.exact_lhs) == oracle::cpp_rational(1, 8) &&
                      rational(*eq.exact_rhs) == oracle::cpp_rational(1, 8);
  return {failed == 0 && eighth, fmt::format("{} instances, {} failed, k=p=1 gives 1/8=1/8: {}{}", total, failed,
                                             eighth ? "yes" : "no", first)};
}

Outcome counterexample() {
  const auto t0 = Clock::now();
  const auto rs = check_schneider_counterexample(4, 3);
  bool ok = rs.size() == 9;
  std::string growth;
  for (const auto& r : rs) {
    ok = ok && r.pass;
    if (r.statement_id == "CE-growth") growth += fmt::format(" {:.6f}", r.rhs);
  }
  const double s = seconds_since(t0);
  return {ok && s < 60.0, fmt::format("r_k ={}, {:.2f}s", growth, s)};
}

Outcome certificates() {
  bool ok = true;
  std::string note;
  std::size_t sandwiches = 0, majorants = 0;
  for (double p : {1.5, 2.0, 3.0})
    for (double eps : {0.5, 0.2, 0.1}) {
      ok = ok && bernstein_approx(p, eps).sandwich.holds;
      ++sandwiches;
    }
  const auto seq = make_sequence(8, Rational(8), 2);
  const WeightChoice all[] = {WeightChoice::One, WeightChoice::HalfPhi, WeightChoice::OneMinusHalfPhi};
  for (double p : {1.5, 2.0, 3.0})
    for (int k : {1, 2})
      for (int l : {1, 2})
        for (int code = 0; code < (l == 1 ? 3 : 9); ++code) {
          WeightSpec spec{.k = k, .l = l, .p = p, .choices = {all[code % 3]}};
          if (l == 2) spec.choices.push_back(all[code / 3]);
          const auto h = weight_majorant(spec, seq);
          const double bound = 64.0 * p * p / (std::log(2.0) * std::log(2.0)) *
                               static_cast<double>(seq[static_cast<std::size_t>(l - 1)]) * k;
          ok = ok && h.sandwich.holds && static_cast<double>(h.degree) <= bound;
          ++majorants;
        }
  note = fmt::format("{} sandwiches, {} majorants;", sandwiches, majorants);
  for (double p : {1.25, 1.5, 2.0, 3.0, 4.0}) {
    const auto w = weierstrass_wp(p);
    const auto lc = lambda_constants(p, w.lambda1);
    ok = ok && w.lambda1 < 1.0 && lc.lambda2 < 1.0;
    note += fmt::format(" p={}: lambda1={:.6f} lambda2={:.6f} (eps={:g})", p, w.lambda1, lc.lambda2, lc.eps);
  }
  return {ok, note};
}

Outcome twin_and_transfer() {
  bool ok = true;
  std::string note = "MC |diff|/sigma:";
  for (std::uint64_t seed : {1, 2, 3}) {
    CoefficientSpec spec{.kind = CoefficientKind::Random, .dim = 1, .count = 1};
    const auto v = coefficient_sets(spec, 4, seed).front();
    const auto mc = montecarlo_iid(2.0, 4, v, ENorm::L2, 100000, seed);
    std::vector<double> a(v.data(), v.data() + v.size());
    const double z = std::abs(mc.value - oracle::iid_second_moment(a)) / mc.error_estimate;
    ok = ok && z <= 3.0;
    note += fmt::format(" {:.2f}", z);
  }
  std::size_t checks = 0;
  const auto seq = make_sequence(1, Rational(3), 5);
  for (std::size_t N : {2, 4, 5}) {
    CoefficientSpec spec{.kind = CoefficientKind::Random, .dim = 2, .count = 2};
    for (const auto& v : coefficient_sets(spec, N, 10 + N))
      for (ENorm e : {ENorm::L1, ENorm::L2, ENorm::Linf})
        for (const auto& r : check_l1_transfer(seq, N, v, 10, 5, e)) {
          ok = ok && r.pass;
          ++checks;
        }
  }
  return {ok, note + fmt::format("; transfer {} checks at 10 shifts each", checks)};
}

std::map<std::string, std::string> read_dir(const fs::path& dir) {
  std::map<std::string, std::string> out;
  for (const auto& e : fs::directory_iterator(dir)) {
    std::ifstream f(e.path(), std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    out[e.path().filename().string()] = ss.str();
  }
  return out;
}

Outcome determinism() {
  const std::vector<nlohmann::json> configs{
      {{"command", "riesz"}, {"N", 5}},
      {{"command", "norms"}, {"N", 3}},
      {{"command", "verify"}, {"target", "L4.2"}},
      {{"command", "verify"}, {"target", "T1.1"}, {"N", 2}, {"d_list", {3}}, {"p_list", {1.5, 2.0}}},
      {{"command", "estimate-constants"}, {"N", 2}, {"p_list", {1.5}}, {"search_budget", 8}},
      {{"command", "counterexample"}, {"k_max", 2}},
      {{"command", "montecarlo"}, {"N", 3}, {"samples", 2000}},
      {{"command", "transfer"}, {"N", 2}, {"psi_samples", 3}},
  };
  const fs::path root = fs::temp_directory_path() / "rieszlab_acceptance";
  std::size_t files = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    std::map<std::string, std::string> runs[2];
    for (int t = 0; t < 2; ++t) {
      auto cfg = parse_config(configs[i]);
      cfg.threads = t == 0 ? 1 : 3;
      cfg.out = root / fmt::format("{}_{}", i, t);
      fs::remove_all(cfg.out);
      std::ostringstream log;
      run_config(cfg, log);
      runs[t] = read_dir(cfg.out);
    }
    if (runs[0].empty() || runs[0] != runs[1]) {
      return {false, fmt::format("{} differs between thread counts", configs[i].dump())};
    }
    files += runs[0].size();
  }
  fs::remove_all(root);
  return {true, fmt::format("{} suites, {} files identical under 1 and 3 threads", configs.size(), files)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"structure", structure},          {"oracle agreement", oracle_agreement},
      {"lower floor p=1", lower_floor},  {"upper bound", upper_bound},
      {"lemma suite", lemma_suite},      {"counterexample growth", counterexample},
      {"approximation certificates", certificates}, {"iid twin and transfer", twin_and_transfer},
      {"determinism", determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("raised: ") + e.what()};
    }
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << ": " << o.note << std::endl;
  }
  return failed ? 1 : 0;
}
