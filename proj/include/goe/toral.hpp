#pragma once

#include "goe/toral/affine_map.hpp"
#include "goe/toral/classification.hpp"
#include "goe/toral/endomorphism.hpp"
#include "goe/toral/io.hpp"
