#pragma once

#include "parfima/convergence.hpp"
#include "parfima/covariance.hpp"
#include "parfima/errors.hpp"
#include "parfima/fractional.hpp"
#include "parfima/gamma.hpp"
#include "parfima/params.hpp"
#include "parfima/periodic.hpp"
#include "parfima/simulation.hpp"
