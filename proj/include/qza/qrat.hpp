#pragma once

#include "qza/frac.hpp"
#include "qza/poly.hpp"

#include <string>

namespace qza {

// Exact scalar: a rational function num/den in the formal variable v, where
// q = v^D for a fixed positive "root order" D.  Fractional powers of q with
// denominator dividing D are then honest monomials in v, so every coefficient
// arising in the constructions stays inside one commutative field.
//
// Canonical form: num and den are integer polynomials with gcd(num, den) = 1,
// the combined integer content of (num, den) is 1, and den has positive
// leading coefficient.  Equality is plain member comparison.
//
// Mixing rule: a value whose numerator and denominator are both constants
// (a plain rational number) adopts the root order of the other operand;
// otherwise the two root orders must agree.
class QRat {
public:
    QRat() : num_(), den_(1), d_(1) {}

    static QRat integer(long n, unsigned d = 1);
    static QRat rational(const Frac& f, unsigned d = 1);
    static QRat rational(long num, long den, unsigned d = 1);
    // v^e (e may be negative).
    static QRat v_power(long e, unsigned d);
    // q^e for fractional e: v^(e*D); throws if e*D is not an integer.
    static QRat q_power(const Frac& e, unsigned d);
    static QRat from_parts(ZPoly num, ZPoly den, unsigned d);

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    unsigned root_order() const { return d_; }
    const ZPoly& num() const { return num_; }
    const ZPoly& den() const { return den_; }

    QRat operator-() const;
    QRat inverse() const; // throws on zero

    friend QRat operator+(const QRat& a, const QRat& b);
    friend QRat operator-(const QRat& a, const QRat& b);
    friend QRat operator*(const QRat& a, const QRat& b);
    friend QRat operator/(const QRat& a, const QRat& b);
    QRat& operator+=(const QRat& o) { *this = *this + o; return *this; }
    QRat& operator-=(const QRat& o) { *this = *this - o; return *this; }
    QRat& operator*=(const QRat& o) { *this = *this * o; return *this; }
    QRat& operator/=(const QRat& o) { *this = *this / o; return *this; }

    friend bool operator==(const QRat& a, const QRat& b);
    friend bool operator!=(const QRat& a, const QRat& b) { return !(a == b); }

    // Re-express with a larger root order d' (a multiple of the current one):
    // substitutes v -> v^(d'/d).
    QRat rescale_root_order(unsigned d_new) const;

    // Value at v = 1 (the classical limit q -> 1); throws if den(1) = 0.
    Frac eval_at_one() const;

    std::string to_string() const;

private:
    void normalize();
    // Unify root orders of a and b (constants adopt; otherwise must match).
    static void unify(QRat& a, QRat& b);

    ZPoly num_, den_;
    unsigned d_;
};

} // namespace qza
