#include "copc/proportion.hpp"

#include <charconv>
#include <numeric>
#include <stdexcept>

namespace copc {

Proportion::Proportion(std::int64_t numerator, std::int64_t denominator) {
  if (numerator <= 0 || denominator <= 0 || numerator >= denominator) {
    throw std::invalid_argument("proportion must satisfy 0 < a/b < 1, got " +
                                std::to_string(numerator) + "/" + std::to_string(denominator));
  }
  const std::int64_t g = std::gcd(numerator, denominator);
  num_ = numerator / g;
  den_ = denominator / g;
}

namespace {

std::int64_t parse_positive(std::string_view s, std::string_view whole) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("invalid rational '" + std::string(whole) + "', expected A/B");
  }
  return value;
}

}  // namespace

Proportion Proportion::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    throw std::invalid_argument("invalid rational '" + std::string(text) + "', expected A/B");
  }
  return Proportion(parse_positive(text.substr(0, slash), text),
                    parse_positive(text.substr(slash + 1), text));
}

std::int64_t Proportion::floor_times(std::int64_t n) const {
  if (n < 0) throw std::invalid_argument("negative order");
  const __int128 prod = static_cast<__int128>(num_) * n;
  return static_cast<std::int64_t>(prod / den_);
}

bool Proportion::times_is_integer(std::int64_t n) const {
  return (static_cast<__int128>(num_) * n) % den_ == 0;
}

std::string Proportion::to_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Proportion& a, const Proportion& b) {
  const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Threshold Threshold::of(const Proportion& r, int n_original) {
  if (n_original < 0) throw std::invalid_argument("negative order");
  Threshold t;
  t.tau = static_cast<int>(r.floor_times(n_original));
  t.n_original = n_original;
  t.rn_is_integer = r.times_is_integer(n_original);
  return t;
}

}  // namespace copc
