#include "ksec/bounds.hpp"

#include <bit>
#include <cmath>
#include <optional>

#include "ksec/error.hpp"

namespace ksec {

namespace {

// log2(q) if q is an integral power of two (including q = 1), else nothing.
std::optional<std::int64_t> exact_log2(const Rational& q) {
  if (q.num() <= 0) return std::nullopt;
  const auto num = static_cast<std::uint64_t>(q.num());
  const auto den = static_cast<std::uint64_t>(q.den());
  if (den == 1 && std::has_single_bit(num)) {
    return static_cast<std::int64_t>(std::countr_zero(num));
  }
  if (num == 1 && std::has_single_bit(den)) {
    return -static_cast<std::int64_t>(std::countr_zero(den));
  }
  return std::nullopt;
}

}  // namespace

long double LogBound::value() const {
  const long double l = std::log2(q.to_long_double());
  return factor.to_long_double() *
         (l * l + static_cast<long double>(a) * l + static_cast<long double>(b));
}

bool LogBound::holds(std::int64_t width) const {
  if (auto l = exact_log2(q)) {
    const Rational poly(*l * *l + a * *l + b);
    return Rational(width) <= factor * poly;
  }
  return static_cast<long double>(width) <= value();
}

long double bound_tree(int n, int k, int diam, int max_deg) {
  if (diam < 1) throw Error(ErrorCode::kBadParameters, "diam must be >= 1");
  return static_cast<long double>(k - 1) *
         (2.0L + 16.0L * n / static_cast<long double>(diam)) * max_deg;
}

bool within_bound_tree(std::int64_t width, int n, int k, int diam,
                       int max_deg) {
  if (diam < 1) throw Error(ErrorCode::kBadParameters, "diam must be >= 1");
  // width <= (k-1)(2 diam + 16 n) Delta / diam
  const __int128 lhs = static_cast<__int128>(width) * diam;
  const __int128 rhs = static_cast<__int128>(k - 1) *
                       (2 * static_cast<__int128>(diam) + 16 * static_cast<__int128>(n)) *
                       max_deg;
  return lhs <= rhs;
}

LogBound bound_tree_improved(int n, int k, int diam, int max_deg) {
  if (diam < 1) throw Error(ErrorCode::kBadParameters, "diam must be >= 1");
  return LogBound{Rational(n, diam), 9, 18,
                  Rational(static_cast<std::int64_t>(k - 1) * max_deg, 2)};
}

LogBound bound_td(int k, int t, int max_deg, const Rational& r) {
  return LogBound{r.inverse(), 11, 24,
                  Rational(static_cast<std::int64_t>(k - 1) * t * max_deg, 2)};
}

bool within_diam_cut_bound(std::int64_t width, const Rational& d, int max_deg,
                           int cuts) {
  // width <= cuts (2 + 16 den/num) Delta  <=>  width num <= cuts (2 num + 16 den) Delta
  const __int128 lhs = static_cast<__int128>(width) * d.num();
  const __int128 rhs = static_cast<__int128>(cuts) *
                       (2 * static_cast<__int128>(d.num()) +
                        16 * static_cast<__int128>(d.den())) *
                       max_deg;
  return lhs <= rhs;
}

long double diam_cut_bound(const Rational& d, int max_deg, int cuts) {
  return static_cast<long double>(cuts) *
         (2.0L + 16.0L / d.to_long_double()) * max_deg;
}

LogBound diam_cut_log_bound(const Rational& d, int max_deg) {
  return LogBound{d.inverse(), 9, 18, Rational(max_deg, 2)};
}

bool within_exact_cut_bound(std::int64_t width, const Rational& d,
                            int max_deg) {
  const __int128 lhs = static_cast<__int128>(width) * d.num();
  const __int128 rhs = 8 * static_cast<__int128>(d.den()) * max_deg;
  return lhs <= rhs;
}

LogBound exact_cut_log_bound(const Rational& d, int max_deg) {
  return LogBound{d.inverse(), 7, 6, Rational(max_deg, 2)};
}

LogBound r_cut_bound(const Rational& r, int t, int max_deg) {
  return LogBound{r.inverse(), 11, 24,
                  Rational(static_cast<std::int64_t>(t) * max_deg, 2)};
}

LogBound td_exact_cut_bound(const Rational& r, int t, int max_deg) {
  return LogBound{r.inverse(), 9, 8,
                  Rational(static_cast<std::int64_t>(t) * max_deg, 2)};
}

}  // namespace ksec
