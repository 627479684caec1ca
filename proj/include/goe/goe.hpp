#pragma once

#include "goe/errors.hpp"
#include "goe/exact_algebra.hpp"
#include "goe/homoclinic.hpp"
#include "goe/symbolic.hpp"
#include "goe/toral.hpp"
