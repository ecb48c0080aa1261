#pragma once

// Exact invariants of (1,1)-knots in lens spaces: cyclic presentations of
// strongly-cyclic branched coverings, n-cyclic polynomials, the Alexander
// polynomial via Fox calculus and reduced Reidemeister torsion, and the
// homology of the coverings, all in exact integer arithmetic.

#include "lensknot/alexander.hpp"
#include "lensknot/bigint.hpp"
#include "lensknot/catalog.hpp"
#include "lensknot/covering.hpp"
#include "lensknot/cyclic.hpp"
#include "lensknot/cyclotomic.hpp"
#include "lensknot/error.hpp"
#include "lensknot/fox.hpp"
#include "lensknot/intmatrix.hpp"
#include "lensknot/knot.hpp"
#include "lensknot/laurent.hpp"
#include "lensknot/rational.hpp"
#include "lensknot/resultant.hpp"
#include "lensknot/smith.hpp"
#include "lensknot/word.hpp"
