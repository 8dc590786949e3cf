#include "qza/poly.hpp"

#include <stdexcept>

namespace qza {

ZPoly::ZPoly(long v) {
    if (v != 0) c_.push_back(mpz_class(v));
}

ZPoly::ZPoly(const mpz_class& v) {
    if (v != 0) c_.push_back(v);
}

ZPoly::ZPoly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

ZPoly ZPoly::monomial(int exp, const mpz_class& coef) {
    ZPoly p;
    if (coef == 0) return p;
    p.c_.assign(exp + 1, mpz_class(0));
    p.c_[exp] = coef;
    return p;
}

void ZPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const mpz_class& ZPoly::coeff(int i) const {
    static const mpz_class zero(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
    return c_[i];
}

const mpz_class& ZPoly::lead() const {
    if (c_.empty()) throw std::domain_error("ZPoly: leading coefficient of zero");
    return c_.back();
}

ZPoly ZPoly::operator-() const {
    ZPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] += a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) { return a + (-b); }

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    ZPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

ZPoly ZPoly::mul_scalar(const mpz_class& s) const {
    ZPoly r;
    if (s == 0 || is_zero()) return r;
    r.c_ = c_;
    for (auto& x : r.c_) x *= s;
    return r;
}

ZPoly ZPoly::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    ZPoly r;
    r.c_.assign(c_.size() + k, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

mpz_class ZPoly::content() const {
    mpz_class g(0);
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

ZPoly ZPoly::primitive_part() const {
    mpz_class g = content();
    if (g == 0 || g == 1) return *this;
    ZPoly r = *this;
    for (auto& x : r.c_) x /= g;
    return r;
}

ZPoly ZPoly::divexact(const ZPoly& d) const {
    if (d.is_zero()) throw std::domain_error("ZPoly: division by zero");
    if (is_zero()) return ZPoly();
    if (degree() < d.degree()) throw std::domain_error("ZPoly: inexact division");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> quo(degree() - d.degree() + 1, mpz_class(0));
    for (int i = degree(); i >= d.degree(); --i) {
        mpz_class& top = rem[i];
        if (top == 0) continue;
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), d.lead().get_mpz_t());
        if (r != 0) throw std::domain_error("ZPoly: inexact division");
        quo[i - d.degree()] = q;
        for (int j = 0; j <= d.degree(); ++j) rem[i - d.degree() + j] -= q * d.coeff(j);
    }
    for (const auto& x : rem)
        if (x != 0) throw std::domain_error("ZPoly: inexact division (remainder)");
    return ZPoly(std::move(quo));
}

namespace {
// Pseudo-remainder: lead(d)^(deg a - deg d + 1) * a mod d.
ZPoly pseudo_rem(ZPoly a, const ZPoly& d) {
    int k = a.degree() - d.degree() + 1;
    for (int step = 0; step < k; ++step) {
        if (a.is_zero() || a.degree() < d.degree()) {
            a = a.mul_scalar(d.lead());
            continue;
        }
        ZPoly t = ZPoly::monomial(a.degree() - d.degree(), a.lead());
        a = a.mul_scalar(d.lead()) - t * d;
    }
    return a;
}
} // namespace

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
    if (a.is_zero()) return b.is_zero() ? b : b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    mpz_class ca = a.content(), cb = b.content();
    mpz_class cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_rem(a, b).primitive_part();
        a = std::move(b);
        b = std::move(r);
    }
    ZPoly g = a.mul_scalar(cg);
    if (g.lead() < 0) g = -g;
    return g;
}

mpz_class ZPoly::eval_one() const {
    mpz_class s(0);
    for (const auto& x : c_) s += x;
    return s;
}

std::string ZPoly::to_string(const char* var) const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        const mpz_class& a = c_[i];
        if (a == 0) continue;
        mpz_class mag = abs(a);
        if (s.empty()) {
            if (a < 0) s += "-";
        } else {
            s += (a < 0) ? " - " : " + ";
        }
        bool unit = (mag == 1);
        if (i == 0) {
            s += mag.get_str();
        } else {
            if (!unit) s += mag.get_str() + "*";
            s += var;
            if (i != 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

} // namespace qza
