#pragma once

#include "bfmle/bound.hpp"
#include "bfmle/cubic.hpp"
#include "bfmle/errors.hpp"
#include "bfmle/geometry.hpp"
#include "bfmle/likelihood.hpp"
#include "bfmle/montecarlo.hpp"
#include "bfmle/rng.hpp"
#include "bfmle/specialfn.hpp"
#include "bfmle/stats.hpp"
