#pragma once

// Umbrella header for the whole library.

#include "complementarity.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "gauss_int.hpp"
#include "gca_set.hpp"
#include "golay_numbers.hpp"
#include "io.hpp"
#include "planner.hpp"
#include "recipe.hpp"
#include "seeds.hpp"
#include "tensor.hpp"
