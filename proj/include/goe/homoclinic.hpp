#pragma once

#include "goe/homoclinic/io.hpp"
#include "goe/homoclinic/points.hpp"
#include "goe/homoclinic/real.hpp"
#include "goe/homoclinic/roots.hpp"
#include "goe/homoclinic/splitting.hpp"
