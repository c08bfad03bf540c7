#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace rieszlab {

/// Positive rational num/den, reduced.
struct Rational {
  std::int64_t num = 1;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n, std::int64_t d = 1);  // NOLINT(google-explicit-constructor)

  /// Parses "num/den" or a plain integer.
  static Rational parse(const std::string& text);
  std::string to_string() const;
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  /// Smallest integer >= num/den.
  std::int64_t ceil() const { return (num + den - 1) / den; }

  friend bool operator==(const Rational&, const Rational&) = default;
};

/// Strictly increasing positive modes n_1 < ... < n_L with a certified lower
/// bound on consecutive ratios, checked in exact integer arithmetic.
class LacunarySeq {
 public:
  LacunarySeq(std::vector<std::int64_t> modes, Rational ratio_floor);

  std::span<const std::int64_t> modes() const { return modes_; }
  std::int64_t operator[](std::size_t j) const { return modes_[j]; }
  /// n_j with the 1-based index used throughout the docs.
  std::int64_t mode(std::size_t j) const { return modes_.at(j - 1); }
  std::size_t length() const { return modes_.size(); }
  const Rational& ratio_floor() const { return ratio_floor_; }
  /// Exact minimum of n_{j+1}/n_j (ratio_floor() for a single mode).
  Rational min_ratio() const;
  /// n_1 + ... + n_N.
  std::int64_t prefix_sum(std::size_t N) const;
  LacunarySeq prefix(std::size_t N) const;

 private:
  std::vector<std::int64_t> modes_;
  Rational ratio_floor_;
};

/// Digits eps_1..eps_N with |eps_j| <= q; eps_j multiplies n_j.
using EpsVector = std::vector<int>;

/// Geometric default n_j = base * ceil(ratio)^(j-1), or a validated custom list.
LacunarySeq make_sequence(std::int64_t base, Rational ratio, std::size_t length,
                          const std::optional<std::vector<std::int64_t>>& custom = std::nullopt);

/// Default enumeration cap for dissociation_check: (2q+1)^N <= 2^24.
inline constexpr std::uint64_t kDissociationBudget = std::uint64_t{1} << 24;

/// True iff eps -> sum eps_j n_j is injective on {-q..q}^N, by exhaustive
/// enumeration of all sums and collision detection.
bool dissociation_check(const LacunarySeq& seq, int q, std::size_t N,
                        std::uint64_t budget = kDissociationBudget);

/// The unique eps in {-q..q}^N with sum eps_j n_j = n over the full sequence,
/// or nullopt. Throws NotDissociate when the sequence admits a collision.
std::optional<EpsVector> lift_frequency(const LacunarySeq& seq, std::int64_t n, int q);

/// sum eps_j n_j, overflow-checked.
std::int64_t frequency_of(const LacunarySeq& seq, std::span<const int> eps);

}  // namespace rieszlab
