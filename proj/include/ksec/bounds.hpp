#pragma once

#include <cstdint>

#include "ksec/rational.hpp"

namespace ksec {

/// A bound of the form factor * (L^2 + a L + b) with L = log2(q), q >= 1.
/// `holds` decides width <= bound exactly when q is a power of two (L is then
/// an integer). Otherwise L is transcendental, the bound is never an integer,
/// and long double evaluation decides it.
struct LogBound {
  Rational q;
  std::int64_t a = 0;
  std::int64_t b = 0;
  Rational factor;

  long double value() const;
  bool holds(std::int64_t width) const;
};

/// (k-1)(2 + 16 n / diam) Delta; diam >= 1.
long double bound_tree(int n, int k, int diam, int max_deg);
bool within_bound_tree(std::int64_t width, int n, int k, int diam, int max_deg);

/// 1/2 (k-1)(log2^2(n/diam) + 9 log2(n/diam) + 18) Delta; diam >= 1.
LogBound bound_tree_improved(int n, int k, int diam, int max_deg);

/// 1/2 (k-1) t Delta (log2^2(1/r) + 11 log2(1/r) + 24).
LogBound bound_td(int k, int t, int max_deg, const Rational& r);

/// Per-cut bounds. `d` is diam*, `r` the relative heaviest-path weight.
/// (2 + 16/d) Delta, times `cuts`.
bool within_diam_cut_bound(std::int64_t width, const Rational& d, int max_deg,
                           int cuts = 1);
long double diam_cut_bound(const Rational& d, int max_deg, int cuts = 1);
/// 1/2 (log2^2(1/d) + 9 log2(1/d) + 18) Delta.
LogBound diam_cut_log_bound(const Rational& d, int max_deg);
/// (8/d) Delta.
bool within_exact_cut_bound(std::int64_t width, const Rational& d, int max_deg);
/// 1/2 (log2^2(1/d) + 7 log2(1/d) + 6) Delta.
LogBound exact_cut_log_bound(const Rational& d, int max_deg);
/// (t/2)(log2^2(1/r) + 11 log2(1/r) + 24) Delta.
LogBound r_cut_bound(const Rational& r, int t, int max_deg);
/// (t/2)(log2^2(1/r) + 9 log2(1/r) + 8) Delta.
LogBound td_exact_cut_bound(const Rational& r, int t, int max_deg);

}  // namespace ksec
