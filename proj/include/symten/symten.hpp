#pragma once

// Umbrella header: exact symmetric tensors over free algebras, their
// abelianization, and matrix invariants.

#include "symten/abelian.hpp"
#include "symten/errors.hpp"
#include "symten/exact_matrix.hpp"
#include "symten/exponent_map.hpp"
#include "symten/genmat.hpp"
#include "symten/limits.hpp"
#include "symten/monomial.hpp"
#include "symten/multipoly.hpp"
#include "symten/rational.hpp"
#include "symten/sym_element.hpp"
#include "symten/symmfunc.hpp"
#include "symten/tensor.hpp"
#include "symten/word.hpp"
