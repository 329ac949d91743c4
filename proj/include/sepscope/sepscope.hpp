// sepscope.hpp
// Umbrella header.

#pragma once

#include "sepscope/convex_maps.hpp"
#include "sepscope/density_matrix.hpp"
#include "sepscope/entropy.hpp"
#include "sepscope/errors.hpp"
#include "sepscope/fano.hpp"
#include "sepscope/json_io.hpp"
#include "sepscope/matrix_ops.hpp"
#include "sepscope/measures.hpp"
#include "sepscope/polytope.hpp"
#include "sepscope/separability.hpp"
#include "sepscope/set_divergence.hpp"
#include "sepscope/simplex_lsq.hpp"
#include "sepscope/states.hpp"
#include "sepscope/su_generators.hpp"
#include "sepscope/tolerances.hpp"
