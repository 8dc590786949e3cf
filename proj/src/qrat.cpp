#include "qza/qrat.hpp"

#include <stdexcept>

namespace qza {

QRat QRat::integer(long n, unsigned d) {
    QRat r;
    r.num_ = ZPoly(n);
    r.den_ = ZPoly(1);
    r.d_ = d ? d : 1;
    return r;
}

QRat QRat::rational(const Frac& f, unsigned d) { return rational(f.num, f.den, d); }

QRat QRat::rational(long num, long den, unsigned d) {
    if (den == 0) throw std::domain_error("QRat: zero denominator");
    QRat r;
    r.num_ = ZPoly(num);
    r.den_ = ZPoly(den);
    r.d_ = d ? d : 1;
    r.normalize();
    return r;
}

QRat QRat::v_power(long e, unsigned d) {
    QRat r;
    r.d_ = d ? d : 1;
    if (e >= 0) {
        r.num_ = ZPoly::monomial(static_cast<int>(e), 1);
        r.den_ = ZPoly(1);
    } else {
        r.num_ = ZPoly(1);
        r.den_ = ZPoly::monomial(static_cast<int>(-e), 1);
    }
    return r;
}

QRat QRat::q_power(const Frac& e, unsigned d) {
    Frac ve = e * Frac{static_cast<long long>(d), 1};
    if (!ve.is_integer())
        throw std::domain_error("QRat: q^(" + e.to_string() + ") needs a finer root order than " +
                                std::to_string(d));
    return v_power(static_cast<long>(ve.to_int()), d);
}

QRat QRat::from_parts(ZPoly num, ZPoly den, unsigned d) {
    if (den.is_zero()) throw std::domain_error("QRat: zero denominator");
    QRat r;
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    r.d_ = d ? d : 1;
    r.normalize();
    return r;
}

void QRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("QRat: zero denominator");
    if (num_.is_zero()) {
        den_ = ZPoly(1);
        return;
    }
    ZPoly g = ZPoly::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class c;
    mpz_gcd(c.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (c > 1) {
        num_ = num_.divexact(ZPoly(c));
        den_ = den_.divexact(ZPoly(c));
    }
    if (den_.lead() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

void QRat::unify(QRat& a, QRat& b) {
    if (a.d_ == b.d_) return;
    if (a.is_constant()) {
        a.d_ = b.d_;
        return;
    }
    if (b.is_constant()) {
        b.d_ = a.d_;
        return;
    }
    throw std::domain_error("QRat: mixed root orders " + std::to_string(a.d_) + " and " +
                            std::to_string(b.d_));
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("QRat: inverse of zero");
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.d_ = d_;
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QRat operator+(const QRat& a, const QRat& b) {
    QRat x = a, y = b;
    QRat::unify(x, y);
    QRat r;
    r.d_ = x.d_;
    r.num_ = x.num_ * y.den_ + y.num_ * x.den_;
    r.den_ = x.den_ * y.den_;
    r.normalize();
    return r;
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
    QRat x = a, y = b;
    QRat::unify(x, y);
    QRat r;
    r.d_ = x.d_;
    r.num_ = x.num_ * y.num_;
    r.den_ = x.den_ * y.den_;
    r.normalize();
    return r;
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inverse(); }

bool operator==(const QRat& a, const QRat& b) {
    if (a.is_zero() && b.is_zero()) return true;
    if (a.d_ != b.d_ && !a.is_constant() && !b.is_constant()) return false;
    return a.num_ == b.num_ && a.den_ == b.den_;
}

QRat QRat::rescale_root_order(unsigned d_new) const {
    if (d_new == d_) return *this;
    if (d_new == 0 || d_new % d_ != 0)
        throw std::domain_error("QRat: root order " + std::to_string(d_new) +
                                " is not a multiple of " + std::to_string(d_));
    unsigned m = d_new / d_;
    auto stretch = [m](const ZPoly& p) {
        ZPoly out;
        for (int i = 0; i <= p.degree(); ++i)
            if (p.coeff(i) != 0) out = out + ZPoly::monomial(static_cast<int>(i * m), p.coeff(i));
        return out;
    };
    QRat r;
    r.num_ = stretch(num_);
    r.den_ = stretch(den_);
    r.d_ = d_new;
    return r;
}

Frac QRat::eval_at_one() const {
    mpz_class n = num_.eval_one();
    mpz_class d = den_.eval_one();
    if (d == 0) throw std::domain_error("QRat: pole at v = 1");
    if (!n.fits_slong_p() || !d.fits_slong_p())
        throw std::overflow_error("QRat: value at v = 1 does not fit a machine rational");
    return Frac{n.get_si(), d.get_si()};
}

std::string QRat::to_string() const {
    if (is_zero()) return "0";
    std::string s = "(" + num_.to_string() + ")";
    if (!den_.is_one()) s += "/(" + den_.to_string() + ")";
    if (d_ != 1) s += " [q=v^" + std::to_string(d_) + "]";
    return s;
}

} // namespace qza
