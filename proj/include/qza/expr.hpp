#pragma once

#include "qza/space.hpp"

#include <functional>
#include <memory>

namespace qza {

// One normal-ordered atom: exponentials of creation and annihilation halves
// of a boson combination, an optional lattice shift with its zero-mode
// z-power, an optional q-difference, and an argument rescaling z -> q^rho z.
// A group of members is normal-ordered jointly: all annihilation parts act
// first, then zero-mode powers (read off the label as it was when the group
// started), then the shifts, then all creation parts.  Each member tracks
// the z-exponent its own pieces produced, so q-differences and argument
// scalings apply to exactly that member's z-dependence.
struct GroupMember {
    std::vector<std::array<int, 2>> gens; // (family, index) of boson components
    std::vector<QRat> gen_weights;        // linear weights of those components
    std::function<QRat(long)> cre_coef;   // c(n) in exp(sum c(n) gamma(-n) z^n); null = absent
    std::function<QRat(long)> ann_coef;   // c(n) in exp(sum c(n) gamma(n) z^-n); null = absent
    std::vector<int> shift;               // lattice shift; empty = none
    std::vector<Frac> zcov;               // z^(zcov . label + zoff); empty = no z-power
    Frac zoff{0, 1};
    int qdiff = 0;                        // apply the q-difference operator this many times
    Frac argscale{0, 1};                  // evaluated at q^argscale z
};

struct Factor {
    enum class Kind {
        group,         // normal-ordered members (covers every boson exponential)
        lattice_shift, // e^shift
        z_power,       // z^(zcov . label + zoff)
        label_q_pow,   // q^(mult * (zcov . label) + zoff)
        parity_sign,   // (-1)^(zcov . label + zoff)
        fermion_series,// fcoef * kappa(z)
        monomial,      // mcoef * z^zshift
    } kind = Kind::group;

    std::vector<GroupMember> members; // group
    std::vector<int> shift;           // lattice_shift
    std::vector<Frac> zcov;           // z_power / label_q_pow / parity_sign
    Frac zoff{0, 1};
    Frac mult{1, 1};                  // label_q_pow
    QRat fcoef;                       // fermion_series
    Frac zshift{0, 1};                // monomial
    QRat mcoef;                       // monomial

    static Factor make_group(std::vector<GroupMember> m);
    static Factor exp_cre(std::vector<std::array<int, 2>> gens, std::vector<QRat> w,
                          std::function<QRat(long)> coef);
    static Factor exp_ann(std::vector<std::array<int, 2>> gens, std::vector<QRat> w,
                          std::function<QRat(long)> coef);
    static Factor make_shift(std::vector<int> v);
    static Factor make_z_power(std::vector<Frac> cov, Frac off = Frac{0, 1});
    static Factor make_label_q_pow(std::vector<Frac> cov, Frac mult, Frac off = Frac{0, 1});
    static Factor make_parity(std::vector<Frac> cov, Frac off = Frac{0, 1});
    static Factor make_fermion(QRat c);
    static Factor make_monomial(QRat c, Frac s);
};

// A field in one variable: sum of weighted branches, each branch a product
// of factors written left to right (applied right to left).
struct Branch {
    QRat coeff;
    std::vector<Factor> factors;
};

struct FieldExpr {
    std::vector<Branch> branches;
    FieldExpr() = default;
    explicit FieldExpr(Branch b) { branches.push_back(std::move(b)); }
    FieldExpr& scaled(const QRat& c);
    friend FieldExpr operator+(FieldExpr a, const FieldExpr& b);
};

// Scalar series in the ratio z_den^-1 z_num of two product variables,
// multiplying an operator product:
//   one_minus      : (1 - c * ratio)
//   one_minus_inv  : (1 - c * ratio)^-1
//   qk_power       : (1 - c * ratio)^(a/k) with base q^(2k)
//   linear         : (lead * z_den - tail * z_num), a first-degree polynomial
struct CrossScalar {
    enum class Kind { one_minus, one_minus_inv, qk_power, linear } kind;
    int num_var = 1; // index of the variable in the numerator of the ratio
    int den_var = 0;
    QRat c;
    QRat lead, tail; // linear
    Frac a{0, 1}, k{1, 1};
};

// A product of fields os_0(z_0) os_1(z_1) ... (leftmost applied last),
// multiplied by cross-variable scalar series and an overall scalar.
struct ProductExpr {
    QRat scalar;
    std::vector<CrossScalar> cross;
    std::vector<FieldExpr> fields; // index = variable
};

} // namespace qza
