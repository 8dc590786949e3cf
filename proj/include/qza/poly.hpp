#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qza {

/// Dense univariate polynomial over Z with GMP coefficients.
/// Invariant: the leading (last) stored coefficient is nonzero; the zero
/// polynomial stores no coefficients and reports degree -1.
class ZPoly {
  public:
    ZPoly() = default;
    ZPoly(long v);
    explicit ZPoly(const mpz_class& v);
    explicit ZPoly(std::vector<mpz_class> coeffs);

    static ZPoly monomial(int exp, const mpz_class& coef = 1);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    const mpz_class& coeff(int i) const;
    const mpz_class& lead() const;

    ZPoly operator-() const;
    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c_ == b.c_; }

    ZPoly mul_scalar(const mpz_class& s) const;
    ZPoly shift(int k) const; ///< multiply by v^k, k >= 0

    /// gcd of all coefficients (non-negative; 0 for the zero polynomial).
    mpz_class content() const;
    ZPoly primitive_part() const;

    /// Exact division; throws std::domain_error when not exact over Z.
    ZPoly divexact(const ZPoly& d) const;

    /// Primitive polynomial gcd (primitive pseudo-remainder sequence).
    static ZPoly gcd(ZPoly a, ZPoly b);

    mpz_class eval_one() const; ///< value at v = 1

    std::string to_string(const char* var = "v") const;

  private:
    void trim();
    std::vector<mpz_class> c_;
};

} // namespace qza
