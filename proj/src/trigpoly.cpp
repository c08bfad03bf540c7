#include "rieszlab/trigpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>

#include "rieszlab/errors.hpp"
#include "rieszlab/summation.hpp"

namespace rieszlab {

namespace {

constexpr std::int64_t kFrequencyLimit = std::int64_t{1} << 62;

template <class C>
bool coeff_is_zero(const C& c) {
  if constexpr (std::is_same_v<C, DyadicComplex>) {
    return c.is_zero();
  } else {
    return c == std::complex<double>(0.0, 0.0);
  }
}

template <class C>
std::vector<std::pair<std::int64_t, C>> canonical(std::vector<std::pair<std::int64_t, C>> terms) {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<std::int64_t, C>> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second = out.back().second + t.second;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const auto& t) { return coeff_is_zero(t.second); });
  return out;
}

// Projects a float term list onto its conjugate-symmetric part so that the
// real flag holds bitwise.
TrigPoly::FloatTerms symmetrize(const TrigPoly::FloatTerms& terms) {
  std::unordered_map<std::int64_t, std::complex<double>> lookup;
  lookup.reserve(terms.size() * 2);
  for (const auto& [n, c] : terms) lookup.emplace(n, c);
  TrigPoly::FloatTerms out;
  out.reserve(terms.size() + 1);
  for (const auto& [n, c] : terms) {
    if (n > 0) {
      const auto it = lookup.find(-n);
      const std::complex<double> mirror = it == lookup.end() ? std::complex<double>() : it->second;
      const std::complex<double> avg = 0.5 * (c + std::conj(mirror));
      out.emplace_back(n, avg);
      out.emplace_back(-n, std::conj(avg));
    } else if (n == 0) {
      out.emplace_back(0, std::complex<double>(c.real(), 0.0));
    } else if (!lookup.contains(-n)) {
      const std::complex<double> avg = 0.5 * std::conj(c);
      out.emplace_back(-n, avg);
      out.emplace_back(n, std::conj(avg));
    }
  }
  return out;
}

void check_frequency_span(std::int64_t a, std::int64_t b) {
  std::int64_t s = 0;
  if (__builtin_add_overflow(a, b, &s) || s > kFrequencyLimit) {
    throw Error(ErrorKind::Overflow, "product degree exceeds 2^62");
  }
}

std::complex<double> unit_phase(std::int64_t n, double t) {
  const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
  const long double angle = std::fmod(static_cast<long double>(n) * static_cast<long double>(t), two_pi);
  const double a = static_cast<double>(angle);
  return {std::cos(a), std::sin(a)};
}

}  // namespace

// --------------------------------------------------------------------------

TrigPoly::TrigPoly(ExactTerms terms) : terms_(canonical(std::move(terms))) {
  real_ = conjugate_symmetric();
}

TrigPoly::TrigPoly(FloatTerms terms, bool real) : real_(real) {
  for (const auto& t : terms) {
    if (!std::isfinite(t.second.real()) || !std::isfinite(t.second.imag())) {
      throw Error(ErrorKind::Overflow, "non-finite coefficient");
    }
  }
  auto canon = canonical(std::move(terms));
  if (real) canon = canonical(symmetrize(canon));
  terms_ = std::move(canon);
}

TrigPoly TrigPoly::constant(const DyadicComplex& c) { return TrigPoly(ExactTerms{{0, c}}); }

TrigPoly TrigPoly::constant_float(std::complex<double> c) {
  return TrigPoly(FloatTerms{{0, c}}, c.imag() == 0.0);
}

TrigPoly TrigPoly::monomial(std::int64_t n, const DyadicComplex& c) {
  return TrigPoly(ExactTerms{{n, c}});
}

TrigPoly TrigPoly::cosine(std::int64_t n, const Dyadic& amplitude) {
  const Dyadic half = amplitude.ldexp(-1);
  if (n == 0) return constant(amplitude);
  return TrigPoly(ExactTerms{{-n, half}, {n, half}});
}

TrigPoly TrigPoly::sine(std::int64_t n, const Dyadic& amplitude) {
  // sin(nt) = (e^{int} - e^{-int}) / 2i = -i/2 e^{int} + i/2 e^{-int}
  const Dyadic half = amplitude.ldexp(-1);
  if (n == 0) return {};
  return TrigPoly(ExactTerms{{n, DyadicComplex(Dyadic(), -half)}, {-n, DyadicComplex(Dyadic(), half)}});
}

std::size_t TrigPoly::size() const {
  return std::visit([](const auto& t) { return t.size(); }, terms_);
}

std::int64_t TrigPoly::degree() const {
  return std::visit(
      [](const auto& t) -> std::int64_t {
        if (t.empty()) return 0;
        return std::max(std::abs(t.front().first), std::abs(t.back().first));
      },
      terms_);
}

const TrigPoly::ExactTerms& TrigPoly::exact_terms() const {
  if (!is_exact()) throw Error(ErrorKind::InvalidArgument, "polynomial is in float mode");
  return std::get<ExactTerms>(terms_);
}

const TrigPoly::FloatTerms& TrigPoly::float_terms() const {
  if (is_exact()) throw Error(ErrorKind::InvalidArgument, "polynomial is in exact mode");
  return std::get<FloatTerms>(terms_);
}

std::complex<double> TrigPoly::coeff(std::int64_t n) const {
  return std::visit(
      [n](const auto& terms) -> std::complex<double> {
        const auto it = std::lower_bound(terms.begin(), terms.end(), n,
                                         [](const auto& t, std::int64_t k) { return t.first < k; });
        if (it == terms.end() || it->first != n) return {};
        if constexpr (std::is_same_v<std::decay_t<decltype(terms)>, ExactTerms>) {
          return it->second.to_complex();
        } else {
          return it->second;
        }
      },
      terms_);
}

DyadicComplex TrigPoly::exact_coeff(std::int64_t n) const {
  const auto& terms = exact_terms();
  const auto it = std::lower_bound(terms.begin(), terms.end(), n,
                                   [](const auto& t, std::int64_t k) { return t.first < k; });
  if (it == terms.end() || it->first != n) return {};
  return it->second;
}

std::complex<double> TrigPoly::operator()(double t) const {
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(size());
  im.reserve(size());
  std::visit(
      [&](const auto& terms) {
        for (const auto& [n, c] : terms) {
          std::complex<double> cc;
          if constexpr (std::is_same_v<std::decay_t<decltype(terms)>, ExactTerms>) {
            cc = c.to_complex();
          } else {
            cc = c;
          }
          const auto z = cc * unit_phase(n, t);
          re.push_back(z.real());
          im.push_back(z.imag());
        }
      },
      terms_);
  return {pairwise_sum(re), real_ ? 0.0 : pairwise_sum(im)};
}

TrigPoly TrigPoly::to_float() const {
  if (!is_exact()) return *this;
  FloatTerms out;
  out.reserve(size());
  for (const auto& [n, c] : exact_terms()) out.emplace_back(n, c.to_complex());
  TrigPoly r(std::move(out), real_);
  r.promoted_ = promoted_;
  return r;
}

bool TrigPoly::conjugate_symmetric() const {
  return std::visit(
      [](const auto& terms) {
        const std::size_t s = terms.size();
        for (std::size_t i = 0; i < s; ++i) {
          const auto& a = terms[i];
          const auto& b = terms[s - 1 - i];
          if (a.first != -b.first) return false;
          if constexpr (std::is_same_v<std::decay_t<decltype(terms)>, ExactTerms>) {
            if (!(a.second == b.second.conj())) return false;
          } else {
            if (a.second != std::conj(b.second)) return false;
          }
        }
        return true;
      },
      terms_);
}

// --------------------------------------------------------------------------

namespace {

template <class Op>
TrigPoly combine(const TrigPoly& f, const TrigPoly& g, Op op) {
  if (f.is_exact() && g.is_exact()) {
    TrigPoly::ExactTerms out(f.exact_terms());
    for (const auto& [n, c] : g.exact_terms()) out.emplace_back(n, op(c));
    TrigPoly r(std::move(out));
    if (f.promoted() || g.promoted()) r.mark_promoted();
    return r;
  }
  const TrigPoly ff = f.to_float();
  const TrigPoly gf = g.to_float();
  TrigPoly::FloatTerms out(ff.float_terms());
  for (const auto& [n, c] : gf.float_terms()) out.emplace_back(n, op(c));
  TrigPoly r(std::move(out), f.is_real() && g.is_real());
  if (f.is_exact() != g.is_exact() || f.promoted() || g.promoted()) r.mark_promoted();
  return r;
}

}  // namespace

TrigPoly operator+(const TrigPoly& f, const TrigPoly& g) {
  return combine(f, g, [](const auto& c) { return c; });
}

TrigPoly operator-(const TrigPoly& f, const TrigPoly& g) {
  return combine(f, g, [](const auto& c) { return -c; });
}

TrigPoly operator-(const TrigPoly& f) { return TrigPoly() - f; }

TrigPoly scale(const TrigPoly& f, const DyadicComplex& c) {
  if (!f.is_exact()) return scale(f, c.to_complex());
  TrigPoly::ExactTerms out;
  out.reserve(f.size());
  for (const auto& [n, a] : f.exact_terms()) out.emplace_back(n, a * c);
  TrigPoly r(std::move(out));
  if (f.promoted()) r.mark_promoted();
  return r;
}

TrigPoly scale(const TrigPoly& f, std::complex<double> c) {
  const TrigPoly ff = f.to_float();
  TrigPoly::FloatTerms out;
  out.reserve(ff.size());
  for (const auto& [n, a] : ff.float_terms()) out.emplace_back(n, a * c);
  TrigPoly r(std::move(out), f.is_real() && c.imag() == 0.0);
  if (f.is_exact() || f.promoted()) r.mark_promoted();
  return r;
}

namespace {

void check_pairs(const TrigPoly& f, const TrigPoly& g, const ArithmeticBudget& budget) {
  const auto pairs = static_cast<std::uint64_t>(f.size()) * static_cast<std::uint64_t>(g.size());
  if (pairs > budget.max_pairs) {
    throw Error(ErrorKind::Budget, std::to_string(pairs) + " term pairs exceed the budget");
  }
  check_frequency_span(f.degree(), g.degree());
}

void check_terms(std::size_t count, const ArithmeticBudget& budget) {
  if (count > budget.max_terms) {
    throw Error(ErrorKind::Budget, std::to_string(count) + " product terms exceed the budget");
  }
}

TrigPoly multiply_exact(const TrigPoly& f, const TrigPoly& g, const ArithmeticBudget& budget) {
  const auto& a = f.exact_terms();
  const auto& b = g.exact_terms();
  std::unordered_map<std::int64_t, DyadicComplex> acc;
  acc.reserve(std::min<std::size_t>(a.size() * b.size(), budget.max_terms) + 1);
  for (const auto& [n, c] : a) {
    for (const auto& [k, d] : b) {
      auto [it, inserted] = acc.try_emplace(n + k);
      if (inserted) {
        it->second = c * d;
      } else {
        it->second += c * d;
      }
    }
    check_terms(acc.size(), budget);
  }
  TrigPoly::ExactTerms out;
  out.reserve(acc.size());
  for (auto& [n, c] : acc) out.emplace_back(n, std::move(c));
  return TrigPoly(std::move(out));
}

TrigPoly multiply_float(const TrigPoly& f, const TrigPoly& g, const ArithmeticBudget& budget) {
  const auto& a = f.float_terms();
  const auto& b = g.float_terms();
  const bool real = f.is_real() && g.is_real();
  const std::int64_t lo = a.front().first + b.front().first;
  const std::int64_t hi = a.back().first + b.back().first;
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto pairs = static_cast<std::uint64_t>(a.size()) * b.size();
  TrigPoly::FloatTerms out;
  if (span <= (std::uint64_t{1} << 24) && span <= 16 * pairs) {
    std::vector<std::complex<double>> dense(span);
    for (const auto& [n, c] : a) {
      for (const auto& [k, d] : b) dense[static_cast<std::size_t>(n + k - lo)] += c * d;
    }
    for (std::size_t i = 0; i < span; ++i) {
      if (dense[i] != std::complex<double>()) out.emplace_back(lo + static_cast<std::int64_t>(i), dense[i]);
    }
    check_terms(out.size(), budget);
  } else {
    std::unordered_map<std::int64_t, std::complex<double>> acc;
    acc.reserve(std::min<std::size_t>(pairs, budget.max_terms) + 1);
    for (const auto& [n, c] : a) {
      for (const auto& [k, d] : b) acc[n + k] += c * d;
      check_terms(acc.size(), budget);
    }
    out.reserve(acc.size());
    for (const auto& kv : acc) out.emplace_back(kv.first, kv.second);
  }
  return TrigPoly(std::move(out), real);
}

}  // namespace

TrigPoly multiply(const TrigPoly& f, const TrigPoly& g, const ArithmeticBudget& budget) {
  if (f.is_zero() || g.is_zero()) {
    return f.is_exact() && g.is_exact() ? TrigPoly() : TrigPoly(TrigPoly::FloatTerms{}, true);
  }
  check_pairs(f, g, budget);
  if (f.is_exact() && g.is_exact()) {
    TrigPoly r = multiply_exact(f, g, budget);
    if (f.promoted() || g.promoted()) r.mark_promoted();
    return r;
  }
  TrigPoly r = multiply_float(f.to_float(), g.to_float(), budget);
  if (f.is_exact() != g.is_exact() || f.promoted() || g.promoted()) r.mark_promoted();
  return r;
}

TrigPoly power(const TrigPoly& f, unsigned m, const ArithmeticBudget& budget) {
  TrigPoly result = f.is_exact() ? TrigPoly::constant(DyadicComplex(1))
                                 : TrigPoly::constant_float(1.0);
  TrigPoly base = f;
  while (m > 0) {
    if (m & 1U) result = multiply(result, base, budget);
    m >>= 1U;
    if (m > 0) base = multiply(base, base, budget);
  }
  return result;
}

TrigPoly derivative(const TrigPoly& f) {
  if (f.is_exact()) {
    TrigPoly::ExactTerms out;
    out.reserve(f.size());
    for (const auto& [n, c] : f.exact_terms()) out.emplace_back(n, c.times_i(n));
    TrigPoly r(std::move(out));
    if (f.promoted()) r.mark_promoted();
    return r;
  }
  TrigPoly::FloatTerms out;
  out.reserve(f.size());
  for (const auto& [n, c] : f.float_terms()) {
    out.emplace_back(n, c * std::complex<double>(0.0, static_cast<double>(n)));
  }
  TrigPoly r(std::move(out), f.is_real());
  if (f.promoted()) r.mark_promoted();
  return r;
}

TrigPoly convolve_fourier(const TrigPoly& f, const TrigPoly& g) {
  if (f.is_exact() && g.is_exact()) {
    TrigPoly::ExactTerms out;
    const auto& a = f.exact_terms();
    const auto& b = g.exact_terms();
    std::size_t j = 0;
    for (const auto& [n, c] : a) {
      while (j < b.size() && b[j].first < n) ++j;
      if (j < b.size() && b[j].first == n) out.emplace_back(n, c * b[j].second);
    }
    TrigPoly r(std::move(out));
    if (f.promoted() || g.promoted()) r.mark_promoted();
    return r;
  }
  const TrigPoly ff = f.to_float();
  const TrigPoly gf = g.to_float();
  TrigPoly::FloatTerms out;
  const auto& a = ff.float_terms();
  const auto& b = gf.float_terms();
  std::size_t j = 0;
  for (const auto& [n, c] : a) {
    while (j < b.size() && b[j].first < n) ++j;
    if (j < b.size() && b[j].first == n) out.emplace_back(n, c * b[j].second);
  }
  TrigPoly r(std::move(out), f.is_real() && g.is_real());
  if (f.is_exact() != g.is_exact() || f.promoted() || g.promoted()) r.mark_promoted();
  return r;
}

TrigPoly dilate(const TrigPoly& f, std::int64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "dilation by zero");
  std::int64_t top = 0;
  if (__builtin_mul_overflow(f.degree(), std::abs(n), &top) || top > kFrequencyLimit) {
    throw Error(ErrorKind::Overflow, "dilated degree exceeds 2^62");
  }
  TrigPoly r = std::visit(
      [&](const auto& terms) -> TrigPoly {
        auto out = terms;
        for (auto& t : out) t.first *= n;
        if constexpr (std::is_same_v<std::decay_t<decltype(terms)>, TrigPoly::ExactTerms>) {
          return TrigPoly(std::move(out));
        } else {
          return TrigPoly(std::move(out), f.is_real());
        }
      },
      f.is_exact() ? std::variant<TrigPoly::ExactTerms, TrigPoly::FloatTerms>(f.exact_terms())
                   : std::variant<TrigPoly::ExactTerms, TrigPoly::FloatTerms>(f.float_terms()));
  if (f.promoted()) r.mark_promoted();
  return r;
}

TrigPoly modulate(const TrigPoly& f, std::int64_t s) {
  check_frequency_span(f.degree(), std::abs(s));
  if (f.is_exact()) {
    auto out = f.exact_terms();
    for (auto& t : out) t.first += s;
    return TrigPoly(std::move(out));
  }
  auto out = f.float_terms();
  for (auto& t : out) t.first += s;
  return TrigPoly(std::move(out), f.is_real() && s == 0);
}

TrigPoly vpoussin_kernel(int d) {
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "kernel order must be >= 1");
  const bool pow2 = (d & (d - 1)) == 0;
  if (pow2) {
    const auto log2d = static_cast<std::int64_t>(std::countr_zero(static_cast<unsigned>(d)));
    TrigPoly::ExactTerms out;
    for (std::int64_t n = -(2 * d - 1); n <= 2 * d - 1; ++n) {
      const std::int64_t a = std::abs(n);
      if (a <= d) {
        out.emplace_back(n, DyadicComplex(1));
      } else {
        out.emplace_back(n, DyadicComplex(Dyadic(BigInt(2 * d - a), -log2d)));
      }
    }
    return TrigPoly(std::move(out));
  }
  TrigPoly::FloatTerms out;
  for (std::int64_t n = -(2 * d - 1); n <= 2 * d - 1; ++n) {
    const std::int64_t a = std::abs(n);
    const double c = a <= d ? 1.0 : static_cast<double>(2 * d - a) / static_cast<double>(d);
    out.emplace_back(n, c);
  }
  return TrigPoly(std::move(out), true);
}

std::complex<double> integral_of_product(const TrigPoly& f, const TrigPoly& g) {
  if (f.is_exact() && g.is_exact()) return exact_integral_of_product(f, g).to_complex();
  const TrigPoly ff = f.to_float();
  const TrigPoly gf = g.to_float();
  const auto& a = ff.float_terms();
  const auto& b = gf.float_terms();
  std::vector<double> re;
  std::vector<double> im;
  // a ascending, b descending so a_n meets b_{-n}
  std::size_t j = b.size();
  for (const auto& [n, c] : a) {
    while (j > 0 && b[j - 1].first > -n) --j;
    if (j > 0 && b[j - 1].first == -n) {
      const auto z = c * b[j - 1].second;
      re.push_back(z.real());
      im.push_back(z.imag());
    }
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

DyadicComplex exact_integral_of_product(const TrigPoly& f, const TrigPoly& g) {
  const auto& a = f.exact_terms();
  const auto& b = g.exact_terms();
  DyadicComplex sum;
  std::size_t j = b.size();
  for (const auto& [n, c] : a) {
    while (j > 0 && b[j - 1].first > -n) --j;
    if (j > 0 && b[j - 1].first == -n) sum += c * b[j - 1].second;
  }
  return sum;
}

double plancherel_sum(const TrigPoly& f) {
  std::vector<double> sq;
  sq.reserve(f.size());
  std::visit(
      [&](const auto& terms) {
        for (const auto& [n, c] : terms) {
          if constexpr (std::is_same_v<std::decay_t<decltype(terms)>, TrigPoly::ExactTerms>) {
            sq.push_back(c.norm().to_double());
          } else {
            sq.push_back(std::norm(c));
          }
        }
      },
      f.is_exact() ? std::variant<TrigPoly::ExactTerms, TrigPoly::FloatTerms>(f.exact_terms())
                   : std::variant<TrigPoly::ExactTerms, TrigPoly::FloatTerms>(f.float_terms()));
  return pairwise_sum(sq);
}

Dyadic exact_plancherel_sum(const TrigPoly& f) {
  Dyadic s;
  for (const auto& [n, c] : f.exact_terms()) s += c.norm();
  return s;
}

TrigPoly interpolate_samples(std::span<const double> samples, std::int64_t degree, double chop) {
  const std::size_t M = samples.size();
  if (static_cast<std::int64_t>(M) <= 2 * degree) {
    throw Error(ErrorKind::InvalidArgument, "too few samples for the requested degree");
  }
  std::vector<double> cos_table(M);
  std::vector<double> sin_table(M);
  const double two_pi = 2.0 * std::numbers::pi;
  for (std::size_t r = 0; r < M; ++r) {
    const double a = two_pi * static_cast<double>(r) / static_cast<double>(M);
    cos_table[r] = std::cos(a);
    sin_table[r] = std::sin(a);
  }
  TrigPoly::FloatTerms out;
  std::vector<double> re(M);
  std::vector<double> im(M);
  double mass = 0.0;
  std::vector<std::complex<double>> coeffs(static_cast<std::size_t>(degree) + 1);
  for (std::int64_t n = 0; n <= degree; ++n) {
    std::size_t r = 0;
    for (std::size_t j = 0; j < M; ++j) {
      re[j] = samples[j] * cos_table[r];
      im[j] = -samples[j] * sin_table[r];
      r += static_cast<std::size_t>(n);
      if (r >= M) r -= M;
    }
    const std::complex<double> c(pairwise_sum(re) / static_cast<double>(M),
                                 n == 0 ? 0.0 : pairwise_sum(im) / static_cast<double>(M));
    coeffs[static_cast<std::size_t>(n)] = c;
    mass += (n == 0 ? 1.0 : 2.0) * std::abs(c);
  }
  for (std::int64_t n = 0; n <= degree; ++n) {
    const auto c = coeffs[static_cast<std::size_t>(n)];
    if (std::abs(c) <= chop * mass) continue;
    out.emplace_back(n, c);
    if (n > 0) out.emplace_back(-n, std::conj(c));
  }
  return TrigPoly(std::move(out), true);
}

// --------------------------------------------------------------------------

double norm(const Eigen::Ref<const Eigen::VectorXd>& v, ENorm which) {
  switch (which) {
    case ENorm::L1: return v.lpNorm<1>();
    case ENorm::L2: return v.norm();
    case ENorm::Linf: return v.size() == 0 ? 0.0 : v.lpNorm<Eigen::Infinity>();
  }
  return 0.0;
}

const char* to_string(ENorm which) {
  switch (which) {
    case ENorm::L1: return "l1";
    case ENorm::L2: return "l2";
    case ENorm::Linf: return "linf";
  }
  return "?";
}

ENorm parse_enorm(const std::string& text) {
  if (text == "l1") return ENorm::L1;
  if (text == "l2") return ENorm::L2;
  if (text == "linf") return ENorm::Linf;
  throw Error(ErrorKind::InvalidArgument, "unknown norm '" + text + "'");
}

VecTrigPoly::VecTrigPoly(std::vector<TrigPoly> c, ENorm n) : coords(std::move(c)), e_norm(n) {
  if (coords.empty()) throw Error(ErrorKind::InvalidArgument, "vector polynomial needs dim >= 1");
  for (const auto& p : coords) {
    if (!p.is_real()) throw Error(ErrorKind::InvalidArgument, "coordinates must be real");
    if (p.mode() != coords.front().mode()) {
      throw Error(ErrorKind::InvalidArgument, "coordinates must share a coefficient mode");
    }
  }
}

std::int64_t VecTrigPoly::degree() const {
  std::int64_t d = 0;
  for (const auto& p : coords) d = std::max(d, p.degree());
  return d;
}

std::size_t VecTrigPoly::term_count() const {
  std::size_t s = 0;
  for (const auto& p : coords) s += p.size();
  return s;
}

Eigen::VectorXd VecTrigPoly::operator()(double t) const {
  Eigen::VectorXd v(static_cast<Eigen::Index>(coords.size()));
  for (std::size_t i = 0; i < coords.size(); ++i) v[static_cast<Eigen::Index>(i)] = coords[i](t).real();
  return v;
}

}  // namespace rieszlab
