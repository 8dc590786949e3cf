#pragma once

#include <map>
#include <vector>

#include "qza/expr.hpp"
#include "qza/space.hpp"

namespace qza {

// Inclusive exponent window per formal variable.  An evaluation keeps every
// term whose final exponent tuple lies inside all windows, and the extraction
// is exact for those tuples: truncation never discards a contribution that
// could land back inside the window.
struct EvalWindow {
    Frac lo{0};
    Frac hi{0};
};

// exponent tuple (one entry per variable) -> resulting vector
using ExtractMap = std::map<std::vector<Frac>, State>;

ExtractMap evaluate_product(const SpaceSpec& sp, const ProductExpr& pe, const BasisVector& u,
                            const std::vector<EvalWindow>& win);

// single-variable convenience: exponent -> resulting vector
std::map<Frac, State> evaluate_field(const SpaceSpec& sp, const FieldExpr& fe, const BasisVector& u,
                                     const EvalWindow& win);

} // namespace qza
