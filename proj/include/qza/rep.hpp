#pragma once

#include "qza/algebra.hpp"
#include "qza/expr.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace qza {

// Switchable defects, one per structural ingredient.  The harness flips them
// to demonstrate that the relation checks actually constrain the
// constructions instead of passing vacuously.
struct MutationFlags {
    bool cocycle_sign = false;        // forget the lattice two-cocycle
    bool bracket_coefficient = false; // scale the first boson family's bracket by q^2
    bool e_exp_q_power = false;       // flip the level q-power in the dressing exponentials
    bool mode_convention = false;     // shift the component <-> mode dictionary by one
    bool any() const {
        return cocycle_sign || bracket_coefficient || e_exp_q_power || mode_convention;
    }
};

struct RepConfig {
    std::string id = "fj"; // construction name, see Representation::catalog()
    LieType type = LieType::A;
    int rank = 1;
    // Most constructions fix their level and reject anything else; the
    // adjustable-level one accepts any rational except its degenerate points.
    Frac level{1, 1};
    int weight = 0; // highest-weight selector; 0 = basic module
    std::map<std::string, std::string> variants;
    MutationFlags mutations;
};

// A highest-weight module together with the operator fields acting on it:
// Heisenberg modes a_i(n), group-like k_i read off the lattice label, and
// ladder fields x_i^{+-}(z) assembled as a pair of dressing exponentials
// around a lattice vertex part,
//   x_i(z) = E_-(z) E_+(z) Z_i(z).
class Representation {
public:
    static Representation build(const RepConfig& cfg);
    static const std::vector<std::string>& catalog();

    const RepConfig& config() const { return cfg_; }
    const SpaceSpec& space() const { return space_; }
    const CartanData& cartan() const { return *cd_; }
    Frac level() const { return level_; }
    int rank() const { return cd_->rank; }

    // q_i = q^{qden(i)}.
    Frac qden(int i) const { return cd_->d[i]; }

    // a_i(n) s, n != 0.
    State a_mode(int i, long n, const State& s) const;

    // k_i acts on a basis vector as q^{k_pair}; gamma acts as q^{level}.
    Frac k_pair(int i, const BasisVector& bv) const;

    // alpha_i in ambient lattice coordinates (pair through space().lattice.gram).
    std::vector<Frac> alpha(int i) const { return alpha_.at(i); }

    // sign is +1 or -1 throughout.
    FieldExpr x_field(int i, int sign) const;
    const FieldExpr& z_field(int i, int sign) const;
    Factor e_minus_factor(int i, int sign) const;
    Factor e_plus_factor(int i, int sign) const;

    // x_i^{sign}(n) is the coefficient of z^{-n - ladder_offset(i, sign)}.
    Frac ladder_offset(int i, int sign) const;

    const BasisVector& hwv() const { return hwv_; }

private:
    Representation() = default;

    void build_fj();
    void build_bl1();
    void build_sl2l2(bool mixed);
    void build_wakimoto();
    void build_cl1();
    void build_f4l1();
    void build_cl_neg_half();
    void build_g2l1();
    void finish();

    std::function<QRat(long)> e_cre_coef(int i, int sign) const;
    std::function<QRat(long)> e_ann_coef(int i, int sign) const;
    std::string variant(const std::string& key, const std::string& dflt,
                        const std::vector<std::string>& allowed) const;

    RepConfig cfg_;
    SpaceSpec space_;
    const CartanData* cd_ = nullptr;
    Frac level_{1, 1};
    std::vector<std::vector<Frac>> alpha_;
    std::vector<std::array<FieldExpr, 2>> z_;  // [node][sign < 0 ? 0 : 1]
    std::vector<std::array<Frac, 2>> offset_;
    BasisVector hwv_;
};

} // namespace qza
