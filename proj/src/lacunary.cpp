#include "rieszlab/lacunary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "rieszlab/errors.hpp"

namespace rieszlab {

namespace {

constexpr std::int64_t kFrequencyLimit = std::int64_t{1} << 62;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_add_overflow(a, b, &r) || r > kFrequencyLimit || r < -kFrequencyLimit) {
    throw Error(ErrorKind::Overflow, "frequency sum exceeds 2^62");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r) || r > kFrequencyLimit || r < -kFrequencyLimit) {
    throw Error(ErrorKind::Overflow, "frequency product exceeds 2^62");
  }
  return r;
}

// n_next / n_prev >= num/den  <=>  n_next * den >= num * n_prev
bool ratio_holds(std::int64_t prev, std::int64_t next, const Rational& r) {
  const __int128 lhs = static_cast<__int128>(next) * r.den;
  const __int128 rhs = static_cast<__int128>(r.num) * prev;
  return lhs >= rhs;
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
  if (d <= 0 || n <= 0) throw Error(ErrorKind::InvalidArgument, "rational must be positive");
  const auto g = std::gcd(num, den);
  num /= g;
  den /= g;
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(text), 1};
    return {std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1))};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::InvalidArgument, "malformed rational '" + text + "'");
  }
}

std::string Rational::to_string() const { return std::to_string(num) + "/" + std::to_string(den); }

LacunarySeq::LacunarySeq(std::vector<std::int64_t> modes, Rational ratio_floor)
    : modes_(std::move(modes)), ratio_floor_(ratio_floor) {
  if (modes_.empty()) throw Error(ErrorKind::InvalidArgument, "sequence must be nonempty");
  if (modes_.front() < 1) throw Error(ErrorKind::InvalidArgument, "modes must be >= 1");
  std::int64_t total = 0;
  for (std::size_t j = 0; j < modes_.size(); ++j) {
    total = checked_add(total, modes_[j]);
    if (j == 0) continue;
    if (modes_[j] <= modes_[j - 1]) {
      throw Error(ErrorKind::InvalidArgument, "modes must be strictly increasing");
    }
    if (!ratio_holds(modes_[j - 1], modes_[j], ratio_floor_)) {
      throw Error(ErrorKind::RatioViolation,
                  "n_" + std::to_string(j + 1) + "/n_" + std::to_string(j) + " = " +
                      std::to_string(modes_[j]) + "/" + std::to_string(modes_[j - 1]) +
                      " < " + ratio_floor_.to_string());
    }
  }
}

Rational LacunarySeq::min_ratio() const {
  if (modes_.size() < 2) return ratio_floor_;
  Rational best(modes_[1], modes_[0]);
  for (std::size_t j = 2; j < modes_.size(); ++j) {
    const Rational r(modes_[j], modes_[j - 1]);
    if (static_cast<__int128>(r.num) * best.den < static_cast<__int128>(best.num) * r.den) {
      best = r;
    }
  }
  return best;
}

std::int64_t LacunarySeq::prefix_sum(std::size_t N) const {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < N && j < modes_.size(); ++j) s += modes_[j];
  return s;
}

LacunarySeq LacunarySeq::prefix(std::size_t N) const {
  if (N == 0 || N > modes_.size()) {
    throw Error(ErrorKind::InvalidArgument, "prefix length out of range");
  }
  return {std::vector<std::int64_t>(modes_.begin(), modes_.begin() + static_cast<long>(N)),
          ratio_floor_};
}

LacunarySeq make_sequence(std::int64_t base, Rational ratio, std::size_t length,
                          const std::optional<std::vector<std::int64_t>>& custom) {
  if (length < 1) throw Error(ErrorKind::InvalidArgument, "length must be >= 1");
  if (ratio.num < ratio.den) throw Error(ErrorKind::InvalidArgument, "ratio must be >= 1");
  if (custom) {
    if (custom->size() != length) {
      throw Error(ErrorKind::InvalidArgument, "custom mode list length mismatch");
    }
    return {*custom, ratio};
  }
  if (base < 1) throw Error(ErrorKind::InvalidArgument, "base must be >= 1");
  const std::int64_t step = ratio.ceil();
  std::vector<std::int64_t> modes;
  modes.reserve(length);
  std::int64_t n = base;
  for (std::size_t j = 0; j < length; ++j) {
    if (j > 0) n = checked_mul(n, step);
    modes.push_back(n);
  }
  return {std::move(modes), ratio};
}

std::int64_t frequency_of(const LacunarySeq& seq, std::span<const int> eps) {
  if (eps.size() > seq.length()) throw Error(ErrorKind::InvalidArgument, "eps longer than sequence");
  std::int64_t s = 0;
  for (std::size_t j = 0; j < eps.size(); ++j) s = checked_add(s, checked_mul(eps[j], seq[j]));
  return s;
}

bool dissociation_check(const LacunarySeq& seq, int q, std::size_t N, std::uint64_t budget) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "q must be >= 1");
  if (N > seq.length()) throw Error(ErrorKind::InvalidArgument, "prefix longer than sequence");
  const auto radix = static_cast<std::uint64_t>(2 * q + 1);
  std::uint64_t count = 1;
  for (std::size_t j = 0; j < N; ++j) {
    if (count > budget / radix) {
      throw Error(ErrorKind::TooLarge, "(2q+1)^N exceeds the enumeration budget");
    }
    count *= radix;
  }
  // the sums are bounded by q * sum n_j, which the sequence already guards
  std::vector<std::int64_t> sums{0};
  sums.reserve(count);
  for (std::size_t j = 0; j < N; ++j) {
    const std::size_t prev = sums.size();
    for (int e = -q; e <= q; ++e) {
      if (e == 0) continue;
      const std::int64_t shift = static_cast<std::int64_t>(e) * seq[j];
      for (std::size_t i = 0; i < prev; ++i) sums.push_back(sums[i] + shift);
    }
  }
  std::sort(sums.begin(), sums.end());
  return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

namespace {

// n_{j+1} > 2q (n_1 + ... + n_j) for every j rules out any nonzero
// difference vector in {-2q..2q}^N summing to zero.
bool dominated(const LacunarySeq& seq, int q) {
  __int128 prefix = 0;
  for (std::size_t j = 0; j < seq.length(); ++j) {
    if (j > 0 && static_cast<__int128>(seq[j]) <= 2 * q * prefix) return false;
    prefix += seq[j];
  }
  return true;
}

bool search_digits(const LacunarySeq& seq, int q, std::int64_t remainder, std::size_t j,
                   const std::vector<__int128>& reach, EpsVector& eps) {
  if (j == 0) return remainder == 0;
  const std::size_t idx = j - 1;
  const std::int64_t n = seq[idx];
  // nearest digit first: the greedy choice
  const double guess = std::round(static_cast<double>(remainder) / static_cast<double>(n));
  const int centre = static_cast<int>(std::clamp(guess, static_cast<double>(-q), static_cast<double>(q)));
  std::vector<int> order{centre};
  for (int off = 1; off <= 2 * q; ++off) {
    if (centre + off <= q) order.push_back(centre + off);
    if (centre - off >= -q) order.push_back(centre - off);
  }
  for (int e : order) {
    const __int128 rest = static_cast<__int128>(remainder) - static_cast<__int128>(e) * n;
    const __int128 bound = idx == 0 ? 0 : reach[idx - 1];
    if (rest > bound || rest < -bound) continue;
    eps[idx] = e;
    if (search_digits(seq, q, static_cast<std::int64_t>(rest), idx, reach, eps)) return true;
  }
  eps[idx] = 0;
  return false;
}

}  // namespace

std::optional<EpsVector> lift_frequency(const LacunarySeq& seq, std::int64_t n, int q) {
  if (q < 1) throw Error(ErrorKind::InvalidArgument, "q must be >= 1");
  const std::size_t N = seq.length();
  if (!dominated(seq, q) && !dissociation_check(seq, q, N)) {
    throw Error(ErrorKind::NotDissociate, "sequence has colliding digit sums at q=" + std::to_string(q));
  }
  // reach[j] = q * (n_1 + ... + n_{j+1})
  std::vector<__int128> reach(N);
  __int128 acc = 0;
  for (std::size_t j = 0; j < N; ++j) {
    acc += seq[j];
    reach[j] = acc * q;
  }
  if (static_cast<__int128>(n) > reach[N - 1] || static_cast<__int128>(n) < -reach[N - 1]) {
    return std::nullopt;
  }
  EpsVector eps(N, 0);
  if (!search_digits(seq, q, n, N, reach, eps)) return std::nullopt;
  if (frequency_of(seq, eps) != n) {
    throw Error(ErrorKind::NotDissociate, "lifted digits fail reconstruction");
  }
  return eps;
}

}  // namespace rieszlab
