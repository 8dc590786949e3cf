#include "qza/rep.hpp"

#include "qza/qseries.hpp"

#include <algorithm>
#include <stdexcept>

namespace qza {

namespace {

Frac fr(long long n, long long d = 1) { return Frac{n, d}; }

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

void require(bool ok, const std::string& msg) {
    if (!ok) bad(msg);
}

std::vector<Frac> fvec(int dim) { return std::vector<Frac>(dim, fr(0)); }

std::vector<Frac> funit(int dim, int at, const Frac& val) {
    std::vector<Frac> v(dim, fr(0));
    v.at(at) = val;
    return v;
}

std::vector<int> iunit(int dim, int at, int val) {
    std::vector<int> v(dim, 0);
    v.at(at) = val;
    return v;
}

std::vector<std::vector<int>> ones_eps(int dim) {
    return std::vector<std::vector<int>>(dim, std::vector<int>(dim, 1));
}

bool odd_integer(const Frac& x) { return x.den == 1 && (x.num % 2 != 0); }

// -1 strictly below the diagonal wherever the pairing is an odd integer: the
// usual sign twist making lattice vertex operators for such pairs
// anticommute instead of commute.
void odd_pair_block(std::vector<std::vector<int>>& eps, int at,
                    const std::vector<std::vector<Frac>>& gram) {
    int n = static_cast<int>(gram.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j)
            if (odd_integer(gram[i][j])) eps[at + i][at + j] = -1;
}

std::vector<std::vector<Frac>> identity_gram(int dim, const Frac& diag) {
    std::vector<std::vector<Frac>> g(dim, fvec(dim));
    for (int i = 0; i < dim; ++i) g[i][i] = diag;
    return g;
}

// Norm-1 A-type gram: 1 on the diagonal, -1/2 on adjacent pairs.
std::vector<std::vector<Frac>> a_short_gram(int dim) {
    auto g = identity_gram(dim, fr(1));
    for (int i = 0; i + 1 < dim; ++i) g[i][i + 1] = g[i + 1][i] = fr(-1, 2);
    return g;
}

QRat qp(const Frac& e, unsigned d) { return QRat::q_power(e, d); }

} // namespace

const std::vector<std::string>& Representation::catalog() {
    static const std::vector<std::string> ids = {
        "fj",   "bl1",  "sl2-l2",      "sl2-l2-mixed", "wakimoto-sl2",
        "cl1",  "f4l1", "cl-neg-half", "g2l1",
    };
    return ids;
}

std::string Representation::variant(const std::string& key, const std::string& dflt,
                                    const std::vector<std::string>& allowed) const {
    auto it = cfg_.variants.find(key);
    std::string val = it == cfg_.variants.end() ? dflt : it->second;
    if (std::find(allowed.begin(), allowed.end(), val) == allowed.end())
        bad("variant " + key + " cannot be '" + val + "'");
    return val;
}

namespace {

void check_variant_keys(const RepConfig& cfg, std::initializer_list<const char*> keys) {
    for (const auto& [k, v] : cfg.variants) {
        bool known = false;
        for (const char* a : keys) known = known || k == a;
        if (!known) bad("construction " + cfg.id + " has no variant '" + k + "'");
    }
}

} // namespace

Representation Representation::build(const RepConfig& cfg) {
    Representation r;
    r.cfg_ = cfg;
    require(cfg.rank >= 1, "rank must be positive");
    const std::string& id = cfg.id;
    if (id == "fj")
        r.build_fj();
    else if (id == "bl1")
        r.build_bl1();
    else if (id == "sl2-l2")
        r.build_sl2l2(false);
    else if (id == "sl2-l2-mixed")
        r.build_sl2l2(true);
    else if (id == "wakimoto-sl2")
        r.build_wakimoto();
    else if (id == "cl1")
        r.build_cl1();
    else if (id == "f4l1")
        r.build_f4l1();
    else if (id == "cl-neg-half")
        r.build_cl_neg_half();
    else if (id == "g2l1")
        r.build_g2l1();
    else
        bad("unknown construction '" + id + "'");
    r.finish();
    return r;
}

void Representation::finish() {
    if (cfg_.mutations.cocycle_sign) space_.lattice.eps.clear();
    if (cfg_.mutations.bracket_coefficient && !space_.bosons.empty())
        space_.bosons[0].extra_q = fr(2);
    if (cfg_.mutations.mode_convention)
        for (auto& o : offset_)
            for (auto& f : o) f += fr(1);
    hwv_.lat.assign(space_.lattice.dim, 0);
}

Frac Representation::ladder_offset(int i, int sign) const {
    return offset_.at(i)[sign < 0 ? 0 : 1];
}

const FieldExpr& Representation::z_field(int i, int sign) const {
    return z_.at(i)[sign < 0 ? 0 : 1];
}

std::function<QRat(long)> Representation::e_cre_coef(int i, int sign) const {
    (void)i;
    const Frac k = level_;
    const unsigned d = space_.D;
    const int fs = cfg_.mutations.e_exp_q_power ? sign : -sign;
    const int s = sign;
    return [k, d, fs, s](long n) {
        Frac kn = k * fr(n);
        return QRat::integer(s, d) * qp(fr(fs) * kn / fr(2), d) / q_int(kn, d);
    };
}

std::function<QRat(long)> Representation::e_ann_coef(int i, int sign) const {
    (void)i;
    const Frac k = level_;
    const unsigned d = space_.D;
    const int fs = cfg_.mutations.e_exp_q_power ? sign : -sign;
    const int s = sign;
    return [k, d, fs, s](long n) {
        Frac kn = k * fr(n);
        return QRat::integer(-s, d) * qp(fr(fs) * kn / fr(2), d) / q_int(kn, d);
    };
}

Factor Representation::e_minus_factor(int i, int sign) const {
    return Factor::exp_cre({{0, i}}, {QRat::integer(1, space_.D)}, e_cre_coef(i, sign));
}

Factor Representation::e_plus_factor(int i, int sign) const {
    return Factor::exp_ann({{0, i}}, {QRat::integer(1, space_.D)}, e_ann_coef(i, sign));
}

FieldExpr Representation::x_field(int i, int sign) const {
    GroupMember dress;
    dress.gens = {{0, i}};
    dress.gen_weights = {QRat::integer(1, space_.D)};
    dress.cre_coef = e_cre_coef(i, sign);
    dress.ann_coef = e_ann_coef(i, sign);
    Factor e = Factor::make_group({dress});
    FieldExpr out;
    for (const Branch& zb : z_field(i, sign).branches) {
        Branch b;
        b.coeff = zb.coeff;
        b.factors.reserve(zb.factors.size() + 1);
        b.factors.push_back(e);
        b.factors.insert(b.factors.end(), zb.factors.begin(), zb.factors.end());
        out.branches.push_back(std::move(b));
    }
    return out;
}

State Representation::a_mode(int i, long n, const State& s) const {
    State out;
    for (const auto& [bv, c] : s) state_add(out, boson_apply(space_, 0, i, n, bv, c), QRat::integer(1, space_.D));
    return out;
}

Frac Representation::k_pair(int i, const BasisVector& bv) const {
    return label_pair(space_, alpha_.at(i), bv, fr(0));
}

// ---------------------------------------------------------------------------
// simply laced level 1: lattice vertex operators, no dressing beyond E
// ---------------------------------------------------------------------------

void Representation::build_fj() {
    check_variant_keys(cfg_, {});
    cd_ = &cartan_data(cfg_.type, cfg_.rank);
    require(cd_->simply_laced, "fj needs a simply laced type");
    require(cfg_.level == fr(1), "fj is a level 1 construction");
    require(cfg_.weight >= 0, "weight must be nonnegative");
    level_ = fr(1);
    int n = cd_->rank;
    space_.D = 2;
    space_.bosons = {BosonFamilySpec{cd_->gram, fr(1), false}};
    space_.lattice.dim = n;
    space_.lattice.gram = cd_->gram;
    std::vector<Frac> rep = fvec(n);
    if (cfg_.weight != 0) {
        int w = cfg_.weight - 1;
        bool ok = w < n && std::find(cd_->minuscule_nodes.begin(), cd_->minuscule_nodes.end(),
                                     w) != cd_->minuscule_nodes.end();
        require(ok, "weight must be 0 or name a minuscule node");
        rep = cd_->fund[w];
    }
    space_.lattice.cosets = {rep};
    space_.lattice.eps = ones_eps(n);
    odd_pair_block(space_.lattice.eps, 0, cd_->gram);
    space_.degree.k = fr(1);

    alpha_.resize(n);
    z_.resize(n);
    offset_.resize(n);
    for (int i = 0; i < n; ++i) {
        alpha_[i] = funit(n, i, fr(1));
        offset_[i] = {fr(1), fr(1)};
        for (int s : {-1, +1}) {
            GroupMember m;
            m.shift = iunit(n, i, s);
            m.zcov = funit(n, i, fr(s));
            Branch b;
            b.coeff = QRat::integer(1, space_.D);
            b.factors = {Factor::make_group({m})};
            z_[i][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
        }
    }
}

// ---------------------------------------------------------------------------
// type B level 1: orthogonal lattice plus one neutral fermion
// ---------------------------------------------------------------------------

void Representation::build_bl1() {
    check_variant_keys(cfg_, {});
    require(cfg_.type == LieType::B, "bl1 needs type B");
    int l = cfg_.rank;
    require(l >= 2, "bl1 needs rank >= 2");
    cd_ = &cartan_data(LieType::B, l);
    require(cfg_.level == fr(1), "bl1 is a level 1 construction");
    int w = cfg_.weight;
    require(w == 0 || w == 1 || w == l, "weight must be 0, 1, or the rank");
    level_ = fr(1);
    space_.D = 2;
    space_.bosons = {BosonFamilySpec{cd_->gram, fr(1), false}};
    space_.lattice.dim = l;
    space_.lattice.gram = identity_gram(l, fr(1));
    std::vector<Frac> rep = fvec(l);
    if (w == 1) rep[0] = fr(1);
    if (w == l) rep.assign(l, fr(1, 2));
    space_.lattice.cosets = {rep};
    // orthogonal basis: every transposition of basis vectors costs a sign.
    // The diagonal alternates from the short end so that each difference of
    // adjacent basis vectors squares to +1 while the last slot (the one the
    // fermionic node shifts) stays at +1.
    space_.lattice.eps = ones_eps(l);
    for (int i = 0; i < l; ++i) {
        for (int j = 0; j < i; ++j) space_.lattice.eps[i][j] = -1;
        if ((l - 1 - i) % 2 == 1) space_.lattice.eps[i][i] = -1;
    }
    space_.fermion.present = true;
    space_.fermion.p = fr(1);
    space_.fermion.half = (w != l);
    space_.fermion.tagdim = 1;
    if (w != l) {
        space_.sector.active = true;
        space_.sector.cov.assign(l, 1);
        space_.sector.parity = 0;
    }
    space_.degree.k = fr(1);

    alpha_.resize(l);
    z_.resize(l);
    offset_.resize(l);
    for (int i = 0; i < l; ++i) {
        std::vector<Frac> a = fvec(l);
        a[i] = fr(1);
        if (i + 1 < l) a[i + 1] = fr(-1);
        alpha_[i] = a;
        offset_[i] = i + 1 < l ? std::array<Frac, 2>{fr(1), fr(1)}
                               : std::array<Frac, 2>{fr(1, 2), fr(1, 2)};
        for (int s : {-1, +1}) {
            GroupMember m;
            m.shift.assign(l, 0);
            m.zcov = fvec(l);
            m.shift[i] = s;
            m.zcov[i] = fr(s);
            if (i + 1 < l) {
                m.shift[i + 1] = -s;
                m.zcov[i + 1] = fr(-s);
            }
            Branch b;
            b.coeff = QRat::integer(1, space_.D);
            b.factors = {Factor::make_group({m})};
            if (i + 1 == l)
                b.factors.push_back(Factor::make_fermion(QRat::integer(1, space_.D)));
            z_[i][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
        }
    }
}

// ---------------------------------------------------------------------------
// rank 1 level 2: one fermion against a doubled lattice
// ---------------------------------------------------------------------------

void Representation::build_sl2l2(bool mixed) {
    check_variant_keys(cfg_, {});
    require(cfg_.type == LieType::A && cfg_.rank == 1, "this construction is rank 1 type A");
    require(cfg_.level == fr(2), "this is a level 2 construction");
    require(cfg_.weight == 0, "weight must be 0");
    cd_ = &cartan_data(LieType::A, 1);
    level_ = fr(2);
    space_.D = 4;
    space_.bosons = {BosonFamilySpec{{{fr(2)}}, fr(2), false}};
    space_.lattice.dim = 1;
    space_.lattice.gram = {{fr(2)}};
    space_.lattice.cosets = {mixed ? std::vector<Frac>{fr(1, 2)} : std::vector<Frac>{fr(0)}};
    space_.lattice.eps = ones_eps(1);
    space_.fermion.present = true;
    space_.fermion.p = fr(2);
    space_.fermion.half = !mixed;
    space_.fermion.tagdim = mixed ? 2 : 1;
    space_.degree.k = fr(2);

    alpha_ = {{fr(1)}};
    z_.resize(1);
    offset_ = {{fr(0), fr(0)}};
    for (int s : {-1, +1}) {
        GroupMember m;
        m.shift = {s};
        m.zcov = {fr(s, 2)};
        m.zoff = fr(1, 2);
        Branch b;
        b.coeff = QRat::integer(1, space_.D);
        b.factors = {Factor::make_group({m}), Factor::make_fermion(QRat::integer(1, space_.D))};
        z_[0][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
    }
}

// ---------------------------------------------------------------------------
// rank 1, generic level: three boson families over a hyperbolic rank 2
// lattice, ladder part a difference of two dressed branches
// ---------------------------------------------------------------------------

void Representation::build_wakimoto() {
    check_variant_keys(cfg_, {"b_arg"});
    require(cfg_.type == LieType::A && cfg_.rank == 1, "this construction is rank 1 type A");
    require(cfg_.weight == 0, "weight must be 0");
    cd_ = &cartan_data(LieType::A, 1);
    Frac k = cfg_.level;
    require(!k.is_zero() && !(k == fr(-2)), "level must avoid 0 and -2");
    level_ = k;
    unsigned d = static_cast<unsigned>(2 * k.den);
    space_.D = d;
    space_.bosons = {BosonFamilySpec{{{fr(2)}}, k, false},
                     BosonFamilySpec{{{fr(-2)}}, k, false},
                     BosonFamilySpec{{{fr(2)}}, k + fr(2), false}};
    space_.lattice.dim = 2;
    space_.lattice.gram = {{fr(2), fr(0)}, {fr(0), fr(-2)}};
    space_.lattice.cosets = {fvec(2)};
    space_.lattice.eps = ones_eps(2);
    space_.degree.k = fr(1);

    Frac big = variant("b_arg", "half", {"half", "whole"}) == "half" ? (k + fr(2)) / fr(2)
                                                                     : k + fr(2);
    QRat qden1 = qp(fr(1), d) - qp(fr(-1), d);

    alpha_ = {{fr(1), fr(0)}};
    z_.resize(1);
    offset_ = {{fr(0), fr(0)}};
    for (int s : {-1, +1}) {
        GroupMember shift_part;
        shift_part.shift = {s, 0};
        shift_part.zcov = {fr(s), fr(0)};

        GroupMember u;
        u.gens = {{1, 0}};
        u.gen_weights = {QRat::integer(1, d)};
        u.cre_coef = [k, d, s](long m) {
            Frac km = k * fr(m);
            return QRat::integer(s, d) * qp(fr(-s) * km / fr(2), d) / q_int(km, d);
        };
        u.ann_coef = [k, d, s](long m) {
            Frac km = k * fr(m);
            return QRat::integer(-s, d) * qp(fr(-s) * km / fr(2), d) / q_int(km, d);
        };
        u.shift = {0, s};
        u.zcov = {fr(0), fr(s)};

        FieldExpr zf;
        for (int br : {+1, -1}) {
            auto half_int = [d](long m) { return q_int(fr(m), d) / q_int(fr(2 * m), d); };
            GroupMember bm;
            bm.gens = {{1, 0}};
            bm.gen_weights = {QRat::integer(1, d)};
            GroupMember wm;
            wm.gens = {{2, 0}};
            wm.gen_weights = {QRat::integer(1, d)};
            if (br > 0) {
                bm.ann_coef = [d, half_int](long m) { return (qp(fr(1), d) - qp(fr(-1), d)) * half_int(m); };
                bm.argscale = fr(-s) * big;
                wm.ann_coef = [d, s, half_int](long m) {
                    return QRat::integer(s, d) * (qp(fr(1), d) - qp(fr(-1), d)) * half_int(m);
                };
                wm.argscale = fr(-s) * k / fr(2);
            } else {
                bm.cre_coef = [d, half_int](long m) { return -(qp(fr(1), d) - qp(fr(-1), d)) * half_int(m); };
                bm.argscale = fr(s) * big;
                wm.cre_coef = [d, s, half_int](long m) {
                    return QRat::integer(-s, d) * (qp(fr(1), d) - qp(fr(-1), d)) * half_int(m);
                };
                wm.argscale = fr(s) * k / fr(2);
            }
            Branch b;
            b.coeff = QRat::integer(br, d) / qden1;
            b.factors = {Factor::make_group({shift_part}), Factor::make_group({u, bm, wm}),
                         Factor::make_label_q_pow({fr(0), fr(1)}, fr(-br))};
            zf.branches.push_back(std::move(b));
        }
        z_[0][s < 0 ? 0 : 1] = zf;
    }
}

// ---------------------------------------------------------------------------
// type C level 1: symplectic weight lattice times a norm 1 auxiliary lattice
// ---------------------------------------------------------------------------

void Representation::build_cl1() {
    check_variant_keys(cfg_, {"lattice_sign_rule"});
    require(cfg_.type == LieType::C, "cl1 needs type C");
    int l = cfg_.rank;
    require(l >= 2, "cl1 needs rank >= 2");
    cd_ = &cartan_data(LieType::C, l);
    require(cfg_.level == fr(1), "cl1 is a level 1 construction");
    require(cfg_.weight == 0, "weight must be 0");
    level_ = fr(1);
    int dim = 2 * l - 1;
    space_.D = 4;
    space_.bosons = {BosonFamilySpec{cd_->gram, fr(1), false},
                     BosonFamilySpec{a_short_gram(l - 1), fr(1), false}};
    space_.lattice.dim = dim;
    space_.lattice.gram.assign(dim, fvec(dim));
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < l; ++j) space_.lattice.gram[i][j] = cd_->gram[i][j];
    auto bg = a_short_gram(l - 1);
    for (int i = 0; i < l - 1; ++i)
        for (int j = 0; j < l - 1; ++j) space_.lattice.gram[l + i][l + j] = bg[i][j];
    space_.lattice.cosets = {fvec(dim)};
    space_.lattice.eps = ones_eps(dim);
    if (variant("lattice_sign_rule", "auto", {"auto", "trivial"}) == "auto")
        odd_pair_block(space_.lattice.eps, 0, cd_->gram);
    // auxiliary block: adjacent slots anticommute (their pairing is -1/2, so
    // the exchange needs the sign by hand); squares stay +1
    for (int a = 0; a < l - 1; ++a)
        for (int b = a + 1; b < l - 1; ++b)
            space_.lattice.eps[l + a][l + b] = (b == a + 1) ? -1 : 1;
    space_.degree.k = fr(1);

    alpha_.resize(l);
    z_.resize(l);
    offset_.resize(l);
    for (int i = 0; i < l; ++i) {
        alpha_[i] = funit(dim, i, fr(1));
        offset_[i] = {fr(1), fr(1)};
        for (int s : {-1, +1}) {
            GroupMember shift_part;
            shift_part.shift = iunit(dim, i, s);
            shift_part.zcov = funit(dim, i, fr(s));
            if (i + 1 == l) {
                Branch b;
                b.coeff = QRat::integer(1, space_.D);
                b.factors = {Factor::make_group({shift_part})};
                z_[i][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
                continue;
            }
            FieldExpr zf;
            for (int u : {+1, -1}) {
                GroupMember um;
                um.gens = {{1, i}};
                um.gen_weights = {QRat::integer(1, space_.D)};
                unsigned d = space_.D;
                um.cre_coef = [u, d](long n) { return QRat::integer(u, d) / q_int(fr(n), d); };
                um.ann_coef = [u, d](long n) { return QRat::integer(-u, d) / q_int(fr(n), d); };
                um.shift = iunit(dim, l + i, u);
                um.zcov = funit(dim, l + i, fr(u));
                um.argscale = fr(-u, 2);
                Branch b;
                b.coeff = QRat::integer(1, space_.D);
                b.factors = {Factor::make_group({um})};
                if (u < 0)
                    b.factors.push_back(Factor::make_parity(funit(dim, i, fr(2))));
                b.factors.push_back(Factor::make_group({shift_part}));
                zf.branches.push_back(std::move(b));
            }
            z_[i][s < 0 ? 0 : 1] = zf;
        }
    }
}

// ---------------------------------------------------------------------------
// F4 level 1: same pattern as type C, dressing only the two short nodes
// ---------------------------------------------------------------------------

void Representation::build_f4l1() {
    check_variant_keys(cfg_, {"lattice_sign_rule"});
    require(cfg_.type == LieType::F && cfg_.rank == 4, "f4l1 needs type F rank 4");
    cd_ = &cartan_data(LieType::F, 4);
    require(cfg_.level == fr(1), "f4l1 is a level 1 construction");
    require(cfg_.weight == 0, "weight must be 0");
    level_ = fr(1);
    int dim = 6;
    space_.D = 4;
    space_.bosons = {BosonFamilySpec{cd_->gram, fr(1), false},
                     BosonFamilySpec{a_short_gram(2), fr(1), false}};
    space_.lattice.dim = dim;
    space_.lattice.gram.assign(dim, fvec(dim));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) space_.lattice.gram[i][j] = cd_->gram[i][j];
    auto bg = a_short_gram(2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) space_.lattice.gram[4 + i][4 + j] = bg[i][j];
    space_.lattice.cosets = {fvec(dim)};
    space_.lattice.eps = ones_eps(dim);
    if (variant("lattice_sign_rule", "auto", {"auto", "trivial"}) == "auto")
        odd_pair_block(space_.lattice.eps, 0, cd_->gram);
    space_.degree.k = fr(1);

    alpha_.resize(4);
    z_.resize(4);
    offset_.resize(4);
    for (int i = 0; i < 4; ++i) {
        alpha_[i] = funit(dim, i, fr(1));
        offset_[i] = {fr(1), fr(1)};
        bool dressed = i < 2;
        for (int s : {-1, +1}) {
            GroupMember shift_part;
            shift_part.shift = iunit(dim, i, s);
            shift_part.zcov = funit(dim, i, fr(s));
            if (!dressed) {
                Branch b;
                b.coeff = QRat::integer(1, space_.D);
                b.factors = {Factor::make_group({shift_part})};
                z_[i][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
                continue;
            }
            FieldExpr zf;
            for (int u : {+1, -1}) {
                GroupMember um;
                um.gens = {{1, i}};
                um.gen_weights = {QRat::integer(1, space_.D)};
                unsigned d = space_.D;
                um.cre_coef = [u, d](long n) { return QRat::integer(u, d) / q_int(fr(n), d); };
                um.ann_coef = [u, d](long n) { return QRat::integer(-u, d) / q_int(fr(n), d); };
                um.shift = iunit(dim, 4 + i, u);
                um.zcov = funit(dim, 4 + i, fr(u));
                um.argscale = fr(-u, 2);
                Branch b;
                b.coeff = QRat::integer(1, space_.D);
                b.factors = {Factor::make_group({um})};
                if (u < 0)
                    b.factors.push_back(Factor::make_parity(funit(dim, i, fr(2))));
                b.factors.push_back(Factor::make_group({shift_part}));
                zf.branches.push_back(std::move(b));
            }
            z_[i][s < 0 ? 0 : 1] = zf;
        }
    }
}

// ---------------------------------------------------------------------------
// type C level -1/2: a classical boson family against a deformed one over a
// doubled orthogonal lattice, with q-difference operators in the ladder part
// ---------------------------------------------------------------------------

void Representation::build_cl_neg_half() {
    check_variant_keys(cfg_, {"zl_plus_args"});
    require(cfg_.type == LieType::C, "cl-neg-half needs type C");
    int l = cfg_.rank;
    require(l >= 2, "cl-neg-half needs rank >= 2");
    cd_ = &cartan_data(LieType::C, l);
    require(cfg_.level == fr(-1, 2), "this is a level -1/2 construction");
    require(cfg_.weight == 0, "weight must be 0");
    level_ = fr(-1, 2);
    int dim = 2 * l;
    space_.D = 4;
    space_.bosons = {BosonFamilySpec{cd_->gram, fr(-1, 2), false},
                     BosonFamilySpec{identity_gram(l, fr(1)), fr(1), true}};
    space_.lattice.dim = dim;
    space_.lattice.gram = identity_gram(dim, fr(1, 2));
    space_.lattice.cosets = {fvec(dim)};
    space_.lattice.eps = ones_eps(dim);
    space_.degree.kind = DegreeRule::Kind::printed_symplectic;
    space_.degree.split = l;
    space_.degree.aux.assign(l, fr(1));

    bool split_args = variant("zl_plus_args", "as_printed", {"as_printed", "split"}) == "split";
    unsigned d = space_.D;

    // classical vertex exponential in the auxiliary family
    auto umember = [&](int idx, int u) {
        GroupMember m;
        m.gens = {{1, idx}};
        m.gen_weights = {QRat::integer(1, d)};
        m.cre_coef = [u, d](long n) { return QRat::rational(u, n, d); };
        m.ann_coef = [u, d](long n) { return QRat::rational(-u, n, d); };
        m.shift = iunit(dim, l + idx, u);
        m.zcov = funit(dim, l + idx, fr(2 * u));
        return m;
    };

    alpha_.resize(l);
    z_.resize(l);
    offset_.resize(l);
    for (int i = 0; i + 1 < l; ++i) {
        std::vector<Frac> a = fvec(dim);
        a[i] = fr(1);
        a[i + 1] = fr(-1);
        alpha_[i] = a;
        offset_[i] = {fr(1), fr(1)};
        for (int s : {-1, +1}) {
            GroupMember shift_part;
            shift_part.shift.assign(dim, 0);
            shift_part.shift[i] = s;
            shift_part.shift[i + 1] = -s;
            shift_part.zcov = fvec(dim);
            shift_part.zcov[i] = fr(-2 * s);
            shift_part.zcov[i + 1] = fr(2 * s);
            GroupMember lower = umember(i, s);
            GroupMember upper = umember(i + 1, -s);
            (s > 0 ? lower : upper).qdiff = 1;
            Branch b;
            b.coeff = QRat::integer(1, d);
            b.factors = {Factor::make_group({lower}), Factor::make_group({upper}),
                         Factor::make_group({shift_part})};
            z_[i][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
        }
    }
    // long node: two-member jointly ordered products of the same exponential
    alpha_[l - 1] = funit(dim, l - 1, fr(2));
    offset_[l - 1] = {fr(1), fr(1)};
    QRat two_cos = qp(fr(1, 2), d) + qp(fr(-1, 2), d);
    for (int s : {-1, +1}) {
        GroupMember shift_part;
        shift_part.shift = iunit(dim, l - 1, 2 * s);
        shift_part.zcov = funit(dim, l - 1, fr(-4 * s));
        FieldExpr zf;
        if (s > 0) {
            GroupMember m1 = umember(l - 1, +1);
            GroupMember m2 = umember(l - 1, +1);
            m2.qdiff = 2;
            Branch b1;
            b1.coeff = QRat::integer(1, d) / two_cos;
            b1.factors = {Factor::make_group({m1, m2}), Factor::make_group({shift_part})};
            GroupMember n1 = umember(l - 1, +1);
            GroupMember n2 = umember(l - 1, +1);
            n1.qdiff = n2.qdiff = 1;
            n1.argscale = split_args ? fr(1, 2) : fr(-1, 2);
            n2.argscale = fr(-1, 2);
            Branch b2;
            b2.coeff = -(QRat::integer(1, d) / two_cos);
            b2.factors = {Factor::make_group({n1, n2}), Factor::make_group({shift_part})};
            zf.branches = {std::move(b1), std::move(b2)};
        } else {
            GroupMember m1 = umember(l - 1, -1);
            GroupMember m2 = umember(l - 1, -1);
            m1.argscale = fr(1, 2);
            m2.argscale = fr(-1, 2);
            Branch b;
            b.coeff = QRat::integer(1, d) / two_cos;
            b.factors = {Factor::make_group({m1, m2}), Factor::make_group({shift_part})};
            zf.branches = {std::move(b)};
        }
        z_[l - 1][s < 0 ? 0 : 1] = zf;
    }
}

// ---------------------------------------------------------------------------
// G2 level 1: one plain long node, one short node dressed the same way as
// the generic-level rank 1 construction
// ---------------------------------------------------------------------------

void Representation::build_g2l1() {
    check_variant_keys(cfg_, {});
    require(cfg_.type == LieType::G && cfg_.rank == 2, "g2l1 needs type G rank 2");
    cd_ = &cartan_data(LieType::G, 2);
    require(cfg_.level == fr(1), "g2l1 is a level 1 construction");
    require(cfg_.weight == 0, "weight must be 0");
    level_ = fr(1);
    int dim = 3;
    unsigned d = 6;
    space_.D = d;
    space_.bosons = {BosonFamilySpec{cd_->gram, fr(1), false},
                     BosonFamilySpec{{{fr(-2, 3)}}, fr(1), false},
                     BosonFamilySpec{{{fr(2, 3)}}, fr(5, 3), false}};
    space_.lattice.dim = dim;
    space_.lattice.gram = {{fr(2), fr(-1), fr(0)}, {fr(-1), fr(2, 3), fr(0)}, {fr(0), fr(0), fr(-2, 3)}};
    space_.lattice.cosets = {fvec(dim)};
    space_.lattice.eps = ones_eps(dim);
    space_.lattice.eps[0][1] = -1;
    space_.degree.k = fr(1);

    QRat qden1 = qp(fr(1), d) - qp(fr(-1), d);
    auto third_int = [d](long m) { return q_int(fr(m, 3), d) / q_int(fr(2 * m, 3), d); };

    alpha_ = {{fr(1), fr(0), fr(0)}, {fr(0), fr(1), fr(0)}};
    z_.resize(2);
    offset_.resize(2);
    offset_[0] = {fr(1), fr(1)};
    offset_[1] = {fr(0), fr(0)};

    for (int s : {-1, +1}) {
        GroupMember plain;
        plain.shift = iunit(dim, 0, s);
        plain.zcov = funit(dim, 0, fr(s));
        Branch b;
        b.coeff = QRat::integer(1, d);
        b.factors = {Factor::make_group({plain})};
        z_[0][s < 0 ? 0 : 1] = FieldExpr(std::move(b));
    }
    for (int s : {-1, +1}) {
        GroupMember shift_part;
        shift_part.shift = iunit(dim, 1, s);
        shift_part.zcov = funit(dim, 1, fr(s));

        GroupMember u;
        u.gens = {{1, 0}};
        u.gen_weights = {QRat::integer(1, d)};
        u.cre_coef = [d, s](long m) {
            return QRat::integer(s, d) * qp(fr(-s * m, 2), d) / q_int(fr(m), d);
        };
        u.ann_coef = [d, s](long m) {
            return QRat::integer(-s, d) * qp(fr(-s * m, 2), d) / q_int(fr(m), d);
        };
        u.shift = iunit(dim, 2, s);
        u.zcov = funit(dim, 2, fr(s));

        FieldExpr zf;
        for (int br : {+1, -1}) {
            GroupMember bm;
            bm.gens = {{1, 0}};
            bm.gen_weights = {QRat::integer(1, d)};
            GroupMember wm;
            wm.gens = {{2, 0}};
            wm.gen_weights = {QRat::integer(1, d)};
            if (br > 0) {
                bm.ann_coef = [d, third_int](long m) {
                    return (qp(fr(1), d) - qp(fr(-1), d)) * third_int(m);
                };
                bm.argscale = fr(-5 * s, 2);
                wm.ann_coef = [d, s, third_int](long m) {
                    return QRat::integer(s, d) * (qp(fr(1), d) - qp(fr(-1), d)) * third_int(m);
                };
                wm.argscale = fr(-3 * s, 2);
            } else {
                bm.cre_coef = [d, third_int](long m) {
                    return -(qp(fr(1), d) - qp(fr(-1), d)) * third_int(m);
                };
                bm.argscale = fr(5 * s, 2);
                wm.cre_coef = [d, s, third_int](long m) {
                    return QRat::integer(-s, d) * (qp(fr(1), d) - qp(fr(-1), d)) * third_int(m);
                };
                wm.argscale = fr(3 * s, 2);
            }
            Branch b;
            b.coeff = QRat::integer(br, d) / qden1;
            b.factors = {Factor::make_group({shift_part}), Factor::make_group({u, bm, wm}),
                         Factor::make_label_q_pow(funit(dim, 2, fr(1)), fr(-br, 2))};
            zf.branches.push_back(std::move(b));
        }
        z_[1][s < 0 ? 0 : 1] = zf;
    }
}

} // namespace qza
