#pragma once

#include "gammakit/algebra.hpp"
#include "gammakit/analytic.hpp"
#include "gammakit/bipoly.hpp"
#include "gammakit/bvp.hpp"
#include "gammakit/errors.hpp"
#include "gammakit/io.hpp"
#include "gammakit/random.hpp"
#include "gammakit/theorems.hpp"
