#include "qza/series.hpp"

#include <stdexcept>

namespace qza {

TruncatedSeries TruncatedSeries::constant(const QRat& c, const Frac& order, unsigned d) {
    TruncatedSeries s(order, d);
    s.add_term(Frac{0, 1}, c);
    return s;
}

void TruncatedSeries::add_term(const Frac& e, const QRat& c) {
    if (e < Frac{0, 1}) throw std::domain_error("TruncatedSeries: negative exponent");
    if (order_ < e || c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QRat TruncatedSeries::coeff(const Frac& e) const {
    if (order_ < e)
        throw std::out_of_range("TruncatedSeries: coefficient of t^" + e.to_string() +
                                " past truncation order " + order_.to_string());
    auto it = terms_.find(e);
    return it == terms_.end() ? QRat::integer(0, d_) : it->second;
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_), a.d_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_), a.d_);
    for (const auto& [e, c] : a.terms_) r.add_term(e, c);
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r(std::min(a.order_, b.order_), a.d_);
    for (const auto& [ea, ca] : a.terms_) {
        if (r.order_ < ea) break;
        for (const auto& [eb, cb] : b.terms_) {
            Frac e = ea + eb;
            if (r.order_ < e) break;
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.order_ == b.order_ && a.terms_ == b.terms_;
}

TruncatedSeries TruncatedSeries::scale_arg(const Frac& rho) const {
    TruncatedSeries r(order_, d_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * QRat::q_power(rho * e, d_));
    return r;
}

TruncatedSeries TruncatedSeries::mul_monomial(const Frac& s, const QRat& c) const {
    if (s < Frac{0, 1}) throw std::domain_error("TruncatedSeries: negative monomial shift");
    TruncatedSeries r(order_ + s, d_);
    for (const auto& [e, co] : terms_) r.add_term(e + s, co * c);
    return r;
}

TruncatedSeries TruncatedSeries::exp(const TruncatedSeries& s) {
    if (!s.terms_.empty() && s.terms_.begin()->first == Frac{0, 1})
        throw std::domain_error("TruncatedSeries: exp needs zero constant term");
    TruncatedSeries r = constant(QRat::integer(1, s.d_), s.order_, s.d_);
    if (s.terms_.empty()) return r;
    TruncatedSeries pow = constant(QRat::integer(1, s.d_), s.order_, s.d_);
    Frac min_e = s.terms_.begin()->first;
    Frac reach = min_e;
    for (long m = 1; !(s.order_ < reach); ++m, reach = reach + min_e) {
        pow = pow * s;
        if (pow.is_zero()) break;
        // divide by m incrementally: s^m / m! = (s^(m-1)/(m-1)!) * s / m
        TruncatedSeries scaled(pow.order_, pow.d_);
        QRat inv_m = QRat::rational(1, m, pow.d_);
        for (const auto& [e, c] : pow.terms_) scaled.add_term(e, c * inv_m);
        pow = scaled;
        for (const auto& [e, c] : pow.terms_) r.add_term(e, c);
    }
    return r;
}

std::string TruncatedSeries::to_string(const char* var) const {
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.to_string();
        if (!e.is_zero()) {
            s += "*";
            s += var;
            s += "^" + e.to_string();
        }
    }
    if (s.empty()) s = "0";
    s += " + O(" + std::string(var) + "^>" + order_.to_string() + ")";
    return s;
}

} // namespace qza
