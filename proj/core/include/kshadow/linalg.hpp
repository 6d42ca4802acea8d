#pragma once

#include <vector>

#include "kshadow/laurent.hpp"

namespace kshadow {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/// Fraction-free (Bareiss) determinant; every division is exact in Z[Lambda].
LaurentPoly determinant(LaurentMatrix m);
/// Rank over the fraction field of Z[Lambda], by fraction-free elimination.
int fraction_field_rank(LaurentMatrix m);

}  // namespace kshadow
