#pragma once

#include "goe/exact_algebra/cyclotomic.hpp"
#include "goe/exact_algebra/factor.hpp"
#include "goe/exact_algebra/io.hpp"
#include "goe/exact_algebra/lattice.hpp"
#include "goe/exact_algebra/matrix.hpp"
#include "goe/exact_algebra/number.hpp"
#include "goe/exact_algebra/polynomial.hpp"
#include "goe/exact_algebra/sturm.hpp"
#include "goe/exact_algebra/unit_circle.hpp"
