// Documented instance grids for each statement.

#include <algorithm>
#include <cmath>
#include <limits>

#include "rieszlab/errors.hpp"
#include "rieszlab/verify.hpp"

namespace rieszlab {

namespace {

using nlohmann::json;

const char* const kNorms[] = {"l1", "l2", "linf"};

std::vector<json> weighted_grid(bool with_N) {
  std::vector<json> out;
  std::uint64_t seed = 1;
  for (double p : {1.5, 2.0, 3.0}) {
    for (int l : {0, 1}) {
      for (int ext : with_N ? std::vector<int>{1, 2} : std::vector<int>{1}) {
        json j{{"p", p}, {"k", 2}, {"l", l}, {"d", 32}, {"dim", 2}, {"norm", "l2"}, {"seed", seed++}};
        if (with_N) j["N"] = l + ext;
        out.push_back(j);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<json> default_instances(const std::string& id) {
  std::vector<json> out;
  if (id == "L4.1") {
    for (double p : {1.5, 2.0, 3.0})
      for (const char* e : kNorms)
        for (double gs : {0.1, 1.0, 10.0})
          for (std::uint64_t s : {1, 2})
            out.push_back({{"p", p}, {"dim", 2}, {"degree", 4}, {"norm", e}, {"g_scale", gs}, {"seed", s}});
  } else if (id == "L4.2") {
    for (int p = 1; p <= 4; ++p)
      for (int k = 1; k <= 4; ++k) out.push_back({{"p", p}, {"k", k}});
    for (double p : {1.5, 2.5})
      for (int k : {1, 2, 3}) out.push_back({{"p", p}, {"k", k}});
  } else if (id == "L4.4") {
    for (int n : {1, 2, 5, 17, 64})
      for (const char* g : {"poly", "abs_cos"})
        for (std::uint64_t s : {1, 2})
          out.push_back({{"n", n}, {"f_degree", 5}, {"g_degree", 3}, {"g_kind", g}, {"seed", s}});
  } else if (id == "L4.5") {
    out.push_back({{"d", 1}, {"modes", {1, 2}}, {"form", "riesz"}});
    for (int d : {1, 2, 3})
      for (int N : {2, 3, 4})
        for (std::uint64_t s : {1, 2}) out.push_back({{"d", d}, {"N", N}, {"form", "random"}, {"seed", s}});
  } else if (id == "L4.5a") {
    for (int d : {1, 3, 7})
      for (double p : {1.0, 1.5, 2.0, 3.0, 4.0}) out.push_back({{"form", "cos"}, {"d", d}, {"p", p}});
    for (double p : {1.0, 1.5, 2.0, 3.0})
      for (const char* e : kNorms)
        out.push_back({{"form", "random"}, {"d", 5}, {"p", p}, {"dim", 2}, {"norm", e}, {"seed", 1}});
  } else if (id == "L4.5b") {
    for (double p : {1.0, 1.5, 2.0, 3.0})
      for (int n : {1, 7, 50})
        for (const char* h : {"poly", "riesz_power", "abs_cos"})
          out.push_back({{"p", p}, {"d", 3}, {"n", n}, {"h_kind", h}, {"dim", 2}, {"norm", "l2"}, {"seed", 1}});
  } else if (id == "L4.6") {
    for (double p : {1.0, 1.5, 2.0, 3.0})
      for (int d : {1, 2, 4})
        for (const char* e : kNorms)
          out.push_back({{"kind", "inequality"}, {"p", p}, {"d", d}, {"n", 3 * d}, {"dim", 2}, {"norm", e}, {"seed", 1}});
    for (int d = 1; d <= 20; ++d) out.push_back({{"kind", "kernel"}, {"d", d}});
    for (int d : {1, 2, 3, 4, 8}) out.push_back({{"kind", "identity"}, {"d", d}, {"n", 3 * d}, {"seed", 1}});
  } else if (id == "L2.3") {
    const int pairs[][2] = {{1, 4}, {1, 16}, {2, 8}, {2, 32}, {3, 12}, {3, 48}, {5, 40}};
    for (const auto& pr : pairs)
      for (std::uint64_t s : {1, 2}) out.push_back({{"d", pr[0]}, {"M", pr[1]}, {"seed", s}});
  } else if (id == "C2") {
    for (int r : {4, 5, 8})
      for (int N : {2, 3})
        for (std::uint64_t s : {1, 2}) out.push_back({{"ratio", r}, {"N", N}, {"base", 1}, {"seed", s}});
  } else if (id == "C6.1") {
    for (int d : {3, 5})
      for (int k : {1, 2, 3})
        for (double p : {1.0, 1.5, 2.0, 3.0}) {
          std::int64_t deg = 0, n = 1;
          for (int i = 0; i < k; ++i, n *= d) deg += n;
          for (std::int64_t f : {std::int64_t{1}, deg, 3 * deg + 1, 10 * deg})
            out.push_back({{"d", d}, {"k", k}, {"p", p}, {"n", f}});
        }
  } else if (id == "C6.2") {
    for (double p : {1.0, 1.5, 2.0, 3.0}) {
      const auto d0 = static_cast<int>(std::ceil(2.0 * 3.141592653589793 * p + 1.0));
      for (int d : {d0, 2 * d0})
        for (auto kl : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
          out.push_back({{"p", p}, {"d", d}, {"k", kl.first}, {"l", kl.second}});
    }
  } else if (id == "L6.3") {
    for (double p : {1.0, 1.5, 2.0, 2.5, 3.0}) {
      const int d0 = static_cast<int>(std::floor(2.0 * p + 1.0)) + 1;
      const int top = static_cast<int>(std::floor(p));
      for (int d : {d0, 3 * d0})
        for (int k : {0, 1, 2})
          for (const auto& ls : {std::vector<int>{1}, std::vector<int>{top}, std::vector<int>{1, top}})
            out.push_back({{"p", p}, {"d", d}, {"k", k}, {"ls", ls}});
    }
  } else if (id == "T5.5-1") {
    std::uint64_t seed = 1;
    for (double p : {1.5, 2.0, 3.0})
      for (int k : {2, 3})
        for (int l : {0, 1, 2})
          for (int mult : {8, 16, 32})
            out.push_back({{"p", p}, {"k", k}, {"l", l}, {"d", mult * k}, {"dim", 2}, {"norm", "l2"}, {"seed", seed++}});
  } else if (id == "T5.5-2" || id == "T5.5-3") {
    out = weighted_grid(true);
  } else if (id == "L5.3") {
    out = weighted_grid(false);
  } else if (id == "P5.6") {
    // empirical constants from the estimator grids, then the induction step
    for (double p : {1.5, 2.0, 3.0}) {
      double c3 = std::numeric_limits<double>::infinity(), C7 = 0.0;
      for (const auto& j : weighted_grid(false)) {
        if (j["p"] != p) continue;
        c3 = std::min(c3, check_lemma("L5.3", j).lhs);
      }
      for (const auto& j : weighted_grid(true)) {
        if (j["p"] != p) continue;
        C7 = std::max(C7, check_lemma("T5.5-3", j).lhs);
      }
      std::uint64_t seed = 100;
      for (int l : {0, 1})
        for (int ext : {1, 2, 3})
          out.push_back({{"p", p}, {"k", 2}, {"l", l}, {"N", l + ext}, {"d", 32}, {"dim", 2},
                         {"norm", "l2"}, {"seed", seed++}, {"c3", c3}, {"C7", C7}});
    }
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown statement id: " + id);
  }
  return out;
}

}  // namespace rieszlab
