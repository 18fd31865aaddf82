#pragma once

#include "lovol/catalog.hpp"
#include "lovol/chart.hpp"
#include "lovol/coefficients.hpp"
#include "lovol/curvature.hpp"
#include "lovol/errors.hpp"
#include "lovol/invariants.hpp"
#include "lovol/quadrature.hpp"
#include "lovol/spectral.hpp"
#include "lovol/volumes.hpp"
