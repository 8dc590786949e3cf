#include "qza/expr.hpp"

namespace qza {

Factor Factor::make_group(std::vector<GroupMember> m) {
    Factor f;
    f.kind = Kind::group;
    f.members = std::move(m);
    return f;
}

Factor Factor::exp_cre(std::vector<std::array<int, 2>> gens, std::vector<QRat> w,
                       std::function<QRat(long)> coef) {
    GroupMember m;
    m.gens = std::move(gens);
    m.gen_weights = std::move(w);
    m.cre_coef = std::move(coef);
    return make_group({std::move(m)});
}

Factor Factor::exp_ann(std::vector<std::array<int, 2>> gens, std::vector<QRat> w,
                       std::function<QRat(long)> coef) {
    GroupMember m;
    m.gens = std::move(gens);
    m.gen_weights = std::move(w);
    m.ann_coef = std::move(coef);
    return make_group({std::move(m)});
}

Factor Factor::make_shift(std::vector<int> v) {
    Factor f;
    f.kind = Kind::lattice_shift;
    f.shift = std::move(v);
    return f;
}

Factor Factor::make_z_power(std::vector<Frac> cov, Frac off) {
    Factor f;
    f.kind = Kind::z_power;
    f.zcov = std::move(cov);
    f.zoff = off;
    return f;
}

Factor Factor::make_label_q_pow(std::vector<Frac> cov, Frac mult, Frac off) {
    Factor f;
    f.kind = Kind::label_q_pow;
    f.zcov = std::move(cov);
    f.mult = mult;
    f.zoff = off;
    return f;
}

Factor Factor::make_parity(std::vector<Frac> cov, Frac off) {
    Factor f;
    f.kind = Kind::parity_sign;
    f.zcov = std::move(cov);
    f.zoff = off;
    return f;
}

Factor Factor::make_fermion(QRat c) {
    Factor f;
    f.kind = Kind::fermion_series;
    f.fcoef = std::move(c);
    return f;
}

Factor Factor::make_monomial(QRat c, Frac s) {
    Factor f;
    f.kind = Kind::monomial;
    f.mcoef = std::move(c);
    f.zshift = s;
    return f;
}

FieldExpr& FieldExpr::scaled(const QRat& c) {
    for (auto& b : branches) b.coeff *= c;
    return *this;
}

FieldExpr operator+(FieldExpr a, const FieldExpr& b) {
    for (const auto& br : b.branches) a.branches.push_back(br);
    return a;
}

} // namespace qza
