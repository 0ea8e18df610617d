#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace copc {

/// Exact rational r = numerator/denominator with 0 < r < 1, kept in lowest terms.
class Proportion {
 public:
  Proportion(std::int64_t numerator, std::int64_t denominator);

  /// Parses "A/B". Decimal notation is rejected.
  static Proportion parse(std::string_view text);

  std::int64_t numerator() const { return num_; }
  std::int64_t denominator() const { return den_; }

  /// floor(r * n), exact.
  std::int64_t floor_times(std::int64_t n) const;
  bool times_is_integer(std::int64_t n) const;

  std::string to_string() const;

  friend bool operator==(const Proportion&, const Proportion&) = default;
  friend std::strong_ordering operator<=>(const Proportion& a, const Proportion& b);

 private:
  std::int64_t num_;
  std::int64_t den_;
};

/// Largest failure-admissible component order for a graph whose order before
/// any removal was n_original.
struct Threshold {
  int tau = 0;
  int n_original = 0;
  bool rn_is_integer = false;

  static Threshold of(const Proportion& r, int n_original);

  bool admits(int component_order) const { return component_order <= tau; }
};

}  // namespace copc
