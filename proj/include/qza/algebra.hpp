#pragma once

#include "qza/frac.hpp"

#include <string>
#include <vector>

namespace qza {

enum class LieType { A, B, C, D, E, F, G };

LieType lie_type_from_char(char c);
char lie_type_char(LieType t);

// Root-system data for a finite Cartan type, normalized so the highest root
// has squared length 2.  Simple roots are indexed 0-based; vectors expressed
// in simple-root coordinates unless noted.
struct CartanData {
    LieType type;
    int rank = 0;
    std::vector<std::vector<Frac>> gram; // (alpha_i | alpha_j)
    std::vector<Frac> d;                 // d_i = (alpha_i|alpha_i)/2
    std::vector<std::vector<int>> cartan; // A[i][j] = (alpha_i|alpha_j)/d_i
    // fund[j] = fundamental weight lambda_j in simple-root coordinates:
    // (lambda_j | alpha_i) = d_i * delta_ij
    std::vector<std::vector<Frac>> fund;
    std::vector<int> marks;     // highest root = sum marks[i] * alpha_i
    bool simply_laced = false;
    std::vector<int> minuscule_nodes; // 0-based; empty unless simply laced

    // Gram pairing of two vectors given in simple-root coordinates.
    Frac pair_roots(const std::vector<Frac>& x, const std::vector<Frac>& y) const;
    Frac pair_root_simple(const std::vector<Frac>& x, int i) const;
    Frac weight_norm(int j) const; // (lambda_j | lambda_j)
    int serre_exponent(int i, int j) const { return 1 - cartan[i][j]; }
    std::string name() const;
};

const CartanData& cartan_data(LieType t, int rank);

// Solves M x = rhs over the rationals; throws if M is singular.
std::vector<Frac> solve_frac_system(std::vector<std::vector<Frac>> m, std::vector<Frac> rhs);

} // namespace qza
