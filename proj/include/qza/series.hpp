#pragma once

#include "qza/frac.hpp"
#include "qza/qrat.hpp"

#include <map>

namespace qza {

// Formal power series in one variable t with QRat coefficients and
// fractional exponents, supported on e >= 0 and known exactly for all
// exponents e <= order().  Products truncate to the smaller order, which is
// exact for series supported on non-negative exponents.
class TruncatedSeries {
public:
    TruncatedSeries(const Frac& order, unsigned d) : order_(order), d_(d ? d : 1) {}

    static TruncatedSeries constant(const QRat& c, const Frac& order, unsigned d);

    const Frac& order() const { return order_; }
    unsigned root_order() const { return d_; }
    const std::map<Frac, QRat>& terms() const { return terms_; }

    // Adds c * t^e.  Exponents beyond the truncation order are dropped;
    // negative exponents are rejected.
    void add_term(const Frac& e, const QRat& c);

    // Coefficient of t^e; asking past the truncation order is a bookkeeping
    // error and throws.
    QRat coeff(const Frac& e) const;

    bool is_zero() const { return terms_.empty(); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

    // Substitution t -> q^rho * t.
    TruncatedSeries scale_arg(const Frac& rho) const;

    // Multiplication by the monomial c * t^s (s >= 0); the known range
    // shifts up accordingly.
    TruncatedSeries mul_monomial(const Frac& s, const QRat& c) const;

    // exp of a series with zero constant term.
    static TruncatedSeries exp(const TruncatedSeries& s);

    std::string to_string(const char* var = "t") const;

private:
    std::map<Frac, QRat> terms_;
    Frac order_;
    unsigned d_;
};

} // namespace qza
