#pragma once

#include "qza/frac.hpp"
#include "qza/qrat.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace qza {

// One basis monomial of a representation space:
//   bosons : multiset of (family, index, mode) with mode > 0, meaning the
//            creation generator g_{family,index}(-mode); kept sorted ascending
//   lat    : integer coordinates in the ambient lattice basis
//   coset  : which coset representative the lattice part sits on
//   ferm2  : doubled fermion weights (kappa(-mu) <-> 2*mu), strictly
//            decreasing, all positive
//   tag    : index into the finite zero-mode tag space
struct BasisVector {
    std::vector<std::array<int, 3>> bosons;
    std::vector<long long> lat;
    std::vector<long long> ferm2;
    int coset = 0;
    int tag = 0;

    auto operator<=>(const BasisVector&) const = default;
    bool operator==(const BasisVector&) const = default;

    std::string to_string() const;
};

using State = std::map<BasisVector, QRat>;

void state_add(State& into, const BasisVector& bv, const QRat& c);
void state_add(State& into, const State& other, const QRat& scale);
State state_scaled(const State& s, const QRat& c);
bool state_is_zero(const State& s);
bool state_equal(const State& a, const State& b);
std::string state_to_string(const State& s, size_t max_terms = 6);

} // namespace qza
