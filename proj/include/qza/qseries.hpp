#pragma once

#include "qza/series.hpp"

namespace qza {

// [x] = (q^x - q^-x) / (q - q^-1), with q = v^D.
QRat q_int(const Frac& x, unsigned d);

// [x]_b = (q^(bx) - q^(-bx)) / (q^b - q^(-b)): the bracket taken in base q^b.
QRat q_int_base(const Frac& x, const Frac& b, unsigned d);

// [n]_b! for integer n >= 0.
QRat q_factorial_base(long n, const Frac& b, unsigned d);

// Gaussian binomial [n choose s] in base q^b, for 0 <= s <= n.
QRat q_binomial_base(long n, long s, const Frac& b, unsigned d);

// Finite product (c*t; p)_n = prod_{j=0}^{n-1} (1 - c p^j t) as a series in t.
TruncatedSeries pochhammer_finite(const QRat& c, const QRat& p, long n, const Frac& order,
                                  unsigned d);

// (c*t; p)_inf = sum_m (-1)^m p^(m(m-1)/2) c^m t^m / (p;p)_m.
TruncatedSeries pochhammer_inf(const QRat& c, const QRat& p, const Frac& order, unsigned d);

// 1 / (c*t; p)_inf = sum_m c^m t^m / (p;p)_m.
TruncatedSeries pochhammer_inf_inverse(const QRat& c, const QRat& p, const Frac& order,
                                       unsigned d);

enum class PowerSeriesRoute { exponential, product };

// The deformed binomial series
//   (1 - c*t)^(a/k)  with base q^(2k)
//     = exp( - sum_{n>=1} [a n] / (n [k n]) * c^n t^n )
//     = (q^(k-a) c t; q^(2k))_inf / (q^(k+a) c t; q^(2k))_inf,
// expanded through t^order.  Both routes give identical coefficients; the
// route switch exists so tests can cross-check them.
TruncatedSeries qk_power_series(const Frac& a, const Frac& k, const QRat& c, const Frac& order,
                                unsigned d,
                                PowerSeriesRoute route = PowerSeriesRoute::exponential);

} // namespace qza
