#pragma once

#include "goe/symbolic/automata.hpp"
#include "goe/symbolic/census.hpp"
#include "goe/symbolic/code.hpp"
#include "goe/symbolic/deciders.hpp"
#include "goe/symbolic/even_shift.hpp"
#include "goe/symbolic/io.hpp"
#include "goe/symbolic/presentation.hpp"
