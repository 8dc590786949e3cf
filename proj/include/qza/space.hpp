#pragma once

#include "qza/state.hpp"

#include <optional>

namespace qza {

// One family of Heisenberg generators g_i(n), n != 0, with
//   [g_i(m), g_j(n)] = beta(i,j,m) delta_{m,-n},
//   beta = [P_ij m][kmul m]/m  (deformed)   or   m P_ij  (classical).
struct BosonFamilySpec {
    std::vector<std::vector<Frac>> gram; // P_ij
    Frac kmul{1, 1};
    bool classical = false;
    Frac extra_q{0, 1}; // every bracket picks up a factor q^extra_q
    int count() const { return static_cast<int>(gram.size()); }
};

// Group algebra part: e^B for B in (coset representative) + integer span of
// the ambient basis, twisted by a bimultiplicative 2-cocycle given on basis
// pairs as a sign matrix.  The cocycle sees only the integer coordinates.
struct LatticeSpec {
    int dim = 0;
    std::vector<std::vector<Frac>> gram;    // ambient pairing
    std::vector<std::vector<Frac>> cosets;  // representatives in ambient coords
    std::vector<std::vector<int>> eps;      // sign matrix; empty = trivial
};

// Fermions kappa(m), m in s + Z with s = 0 or 1/2, satisfying
// {kappa(m), kappa(n)} = (q^(pm) + q^(-pm)) delta_{m,-n}.  For s = 0 the
// zero mode anticommutes with the wedge part and acts on a finite tag space
// (identity for tagdim 1, the swap for tagdim 2), squaring to 1.
struct FermionSpec {
    bool present = false;
    bool half = true; // s = 1/2
    Frac p{1, 1};
    int tagdim = 1;
};

// Restriction tying lattice parity to wedge size: keep only vectors with
// cov . lat + #fermions == parity (mod 2).
struct SectorRule {
    bool active = false;
    std::vector<int> cov;
    int parity = 0;
};

// Grading. Standard rule:
//   deg = -sum(boson modes) - sum(fermion weights)
//         - ((B|B) - (L|L)) / (2k),  B = coset rep + integer part, L = coset rep.
// kind printed_symplectic keeps the rule verbatim from the level -1/2
// realization: deg = -sum(modes) + (A|A) - (B|B - L), with A, B the two
// halves of the label and L a fixed vector (aux).
struct DegreeRule {
    enum class Kind { standard, printed_symplectic } kind = Kind::standard;
    Frac k{1, 1};
    std::vector<Frac> aux;
    int split = 0; // printed_symplectic: first `split` coordinates form A
};

struct SpaceSpec {
    unsigned D = 2;
    std::vector<BosonFamilySpec> bosons;
    LatticeSpec lattice;
    FermionSpec fermion;
    SectorRule sector;
    DegreeRule degree;
};

// [g_i(m), g_j(-m)] for m > 0.
QRat boson_bracket(const SpaceSpec& sp, int fam, int i, int j, long m);

// g_{fam,idx}(m) bv (m != 0), scaled by coeff.
State boson_apply(const SpaceSpec& sp, int fam, int idx, long m, const BasisVector& bv,
                  const QRat& coeff);

int cocycle_sign(const LatticeSpec& lat, const std::vector<int>& gamma,
                 const std::vector<long long>& b);

// e^gamma bv (integer vector), with the cocycle sign.
State lattice_shift_apply(const SpaceSpec& sp, const std::vector<int>& gamma,
                          const BasisVector& bv, const QRat& coeff);

// (cov | coset rep + integer part) + off
Frac label_pair(const SpaceSpec& sp, const std::vector<Frac>& cov, const BasisVector& bv,
                const Frac& off);

// kappa(m) bv, mode doubled (m2 = 2m).
State fermion_apply(const SpaceSpec& sp, long long m2, const BasisVector& bv,
                    const QRat& coeff);

bool sector_ok(const SpaceSpec& sp, const BasisVector& bv);

Frac degree_of(const SpaceSpec& sp, const BasisVector& bv);

// All basis vectors of the given degree (a non-positive Frac), honoring the
// sector rule and enumerating every coset and tag.  For indefinite lattice
// pairings the integer coordinates are searched in the box |x_i| <= cap.
std::vector<BasisVector> basis_at_degree(const SpaceSpec& sp, const Frac& deg, int cap = 6);

long graded_dim(const SpaceSpec& sp, const Frac& deg, int cap = 6);

} // namespace qza
