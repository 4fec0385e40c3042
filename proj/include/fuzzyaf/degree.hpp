#ifndef FUZZYAF_DEGREE_HPP
#define FUZZYAF_DEGREE_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fuzzyaf {

/// Exact rational belief degree in [0,1].
///
/// Degrees only ever flow through min, max and 1-x, so the set of
/// denominators never grows past what the inputs introduce. Everything the
/// solvers decide (tolerable vs. sufficient, inclusion, fixpoints) is an
/// exact comparison.
class Degree {
public:
  constexpr Degree() noexcept = default;

  /// Builds num/den. Throws std::invalid_argument if the value leaves [0,1].
  static Degree ratio(std::int64_t num, std::int64_t den) {
    if (den <= 0 || num < 0 || num > den) {
      throw std::invalid_argument("degree " + std::to_string(num) + "/" + std::to_string(den) +
                                  " is outside [0,1]");
    }
    return Degree(num, den);
  }

  static constexpr Degree zero() noexcept { return Degree(); }
  static constexpr Degree one() noexcept { return Degree(1, 1, Normalized{}); }
  static constexpr Degree half() noexcept { return Degree(1, 2, Normalized{}); }

  /// Parses "0.8", "1", "1.0", ".25" or "0.0625". At most four fractional
  /// digits are accepted so every decimal input is a multiple of 1/10000.
  static std::optional<Degree> parse_decimal(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::int64_t whole = 0;
    std::size_t i = 0;
    bool any_digit = false;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      whole = whole * 10 + (text[i] - '0');
      if (whole > 1) return std::nullopt;
      ++i;
      any_digit = true;
    }
    std::int64_t frac = 0;
    std::int64_t scale = 1;
    if (i < text.size() && text[i] == '.') {
      ++i;
      std::size_t digits = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        if (++digits > 4) return std::nullopt;
        frac = frac * 10 + (text[i] - '0');
        scale *= 10;
        ++i;
        any_digit = true;
      }
      if (digits == 0) return std::nullopt;
    }
    if (i != text.size() || !any_digit) return std::nullopt;
    const std::int64_t num = whole * scale + frac;
    if (num > scale) return std::nullopt;
    return Degree(num, scale);
  }

  static Degree from_decimal(std::string_view text) {
    if (auto d = parse_decimal(text)) return *d;
    throw std::invalid_argument("not a degree in [0,1] with at most 4 fractional digits: '" +
                                std::string(text) + "'");
  }

  constexpr std::int64_t numerator() const noexcept { return num_; }
  constexpr std::int64_t denominator() const noexcept { return den_; }
  constexpr bool is_zero() const noexcept { return num_ == 0; }
  constexpr bool is_one() const noexcept { return num_ == den_; }

  /// 1 - x
  constexpr Degree complement() const noexcept { return Degree(den_ - num_, den_, Normalized{}); }

  friend constexpr bool operator==(const Degree& a, const Degree& b) noexcept {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  /// Minimal decimal ("0.2", "1", "0.0625") when the denominator divides a
  /// power of ten, otherwise "p/q".
  std::string to_string() const {
    if (num_ == 0) return "0";
    if (num_ == den_) return "1";
    std::int64_t d = den_;
    int twos = 0;
    int fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return std::to_string(num_) + "/" + std::to_string(den_);
    const int digits = twos > fives ? twos : fives;
    std::int64_t scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    std::string frac = std::to_string(num_ * (scale / den_));
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return "0." + frac;
  }

  double to_double() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::size_t hash() const noexcept {
    return std::hash<std::int64_t>{}(num_) * 1000003u ^ std::hash<std::int64_t>{}(den_);
  }

private:
  struct Normalized {};
  constexpr Degree(std::int64_t num, std::int64_t den, Normalized) noexcept : num_(num), den_(den) {}
  Degree(std::int64_t num, std::int64_t den) {
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Goedel t-norm.
constexpr Degree tnorm(Degree x, Degree y) noexcept { return x < y ? x : y; }

constexpr Degree complement(Degree x) noexcept { return x.complement(); }

constexpr Degree max_degree(Degree x, Degree y) noexcept { return x < y ? y : x; }

}  // namespace fuzzyaf

template <>
struct std::hash<fuzzyaf::Degree> {
  std::size_t operator()(const fuzzyaf::Degree& d) const noexcept { return d.hash(); }
};

#endif  // FUZZYAF_DEGREE_HPP
