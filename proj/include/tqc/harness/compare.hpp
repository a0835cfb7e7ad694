#pragma once

#include "tqc/category/fincat.hpp"

namespace tqc {

/// Full subcategory on the first object of each isomorphism class.
FinCat skeleton(const FinCat& c);

/// Whether C and D are equivalent, decided by comparing skeleta.
bool equivalent_categories(const FinCat& c, const FinCat& d);

}  // namespace tqc
