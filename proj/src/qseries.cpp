#include "qza/qseries.hpp"

#include <stdexcept>

namespace qza {

QRat q_int(const Frac& x, unsigned d) { return q_int_base(x, Frac{1, 1}, d); }

QRat q_int_base(const Frac& x, const Frac& b, unsigned d) {
    if (b.is_zero()) throw std::domain_error("q_int_base: zero base exponent");
    QRat num = QRat::q_power(b * x, d) - QRat::q_power(-(b * x), d);
    QRat den = QRat::q_power(b, d) - QRat::q_power(-b, d);
    return num / den;
}

QRat q_factorial_base(long n, const Frac& b, unsigned d) {
    if (n < 0) throw std::domain_error("q_factorial_base: negative argument");
    QRat r = QRat::integer(1, d);
    for (long m = 1; m <= n; ++m) r *= q_int_base(Frac{m, 1}, b, d);
    return r;
}

QRat q_binomial_base(long n, long s, const Frac& b, unsigned d) {
    if (s < 0 || s > n) throw std::domain_error("q_binomial_base: index out of range");
    // product form avoids large intermediate factorials
    QRat r = QRat::integer(1, d);
    for (long j = 1; j <= s; ++j)
        r *= q_int_base(Frac{n - s + j, 1}, b, d) / q_int_base(Frac{j, 1}, b, d);
    return r;
}

TruncatedSeries pochhammer_finite(const QRat& c, const QRat& p, long n, const Frac& order,
                                  unsigned d) {
    TruncatedSeries r = TruncatedSeries::constant(QRat::integer(1, d), order, d);
    QRat cp = c;
    for (long j = 0; j < n; ++j) {
        TruncatedSeries f = TruncatedSeries::constant(QRat::integer(1, d), order, d);
        f.add_term(Frac{1, 1}, -cp);
        r = r * f;
        cp *= p;
    }
    return r;
}

namespace {
long order_floor(const Frac& order) {
    Frac f = order.floor();
    return static_cast<long>(f.num);
}
} // namespace

TruncatedSeries pochhammer_inf(const QRat& c, const QRat& p, const Frac& order, unsigned d) {
    TruncatedSeries r(order, d);
    long hi = order_floor(order);
    QRat term = QRat::integer(1, d); // (-1)^m p^(m(m-1)/2) c^m / (p;p)_m at m
    r.add_term(Frac{0, 1}, term);
    QRat pm = QRat::integer(1, d); // p^m
    for (long m = 1; m <= hi; ++m) {
        // ratio from m-1 to m: -c * p^(m-1) / (1 - p^m)
        QRat one = QRat::integer(1, d);
        term *= -c * pm;
        pm *= p;
        term /= (one - pm);
        r.add_term(Frac{m, 1}, term);
    }
    return r;
}

TruncatedSeries pochhammer_inf_inverse(const QRat& c, const QRat& p, const Frac& order,
                                       unsigned d) {
    TruncatedSeries r(order, d);
    long hi = order_floor(order);
    QRat term = QRat::integer(1, d);
    r.add_term(Frac{0, 1}, term);
    QRat pm = QRat::integer(1, d);
    for (long m = 1; m <= hi; ++m) {
        QRat one = QRat::integer(1, d);
        term *= c;
        pm *= p;
        term /= (one - pm);
        r.add_term(Frac{m, 1}, term);
    }
    return r;
}

TruncatedSeries qk_power_series(const Frac& a, const Frac& k, const QRat& c, const Frac& order,
                                unsigned d, PowerSeriesRoute route) {
    if (k.is_zero()) throw std::domain_error("qk_power_series: level zero");
    if (route == PowerSeriesRoute::product) {
        QRat p = QRat::q_power(k + k, d);
        TruncatedSeries num = pochhammer_inf(QRat::q_power(k - a, d) * c, p, order, d);
        TruncatedSeries den_inv =
            pochhammer_inf_inverse(QRat::q_power(k + a, d) * c, p, order, d);
        return num * den_inv;
    }
    TruncatedSeries arg(order, d);
    long hi = order_floor(order);
    QRat cn = QRat::integer(1, d);
    for (long n = 1; n <= hi; ++n) {
        cn *= c;
        QRat coef = q_int(a * Frac{n, 1}, d) / (QRat::integer(n, d) * q_int(k * Frac{n, 1}, d));
        arg.add_term(Frac{n, 1}, -coef * cn);
    }
    return TruncatedSeries::exp(arg);
}

} // namespace qza
