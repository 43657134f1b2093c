#pragma once

// Umbrella header: exact arithmetic, arbitrary-precision numerics, and the
// verified identity catalog for central-binomial-coefficient series.

#include "cbseries/acceleration.hpp"
#include "cbseries/bigfloat.hpp"
#include "cbseries/catalog.hpp"
#include "cbseries/closed_forms.hpp"
#include "cbseries/combinatorics.hpp"
#include "cbseries/constants.hpp"
#include "cbseries/errors.hpp"
#include "cbseries/quadrature.hpp"
#include "cbseries/rational.hpp"
#include "cbseries/recurrence.hpp"
#include "cbseries/report.hpp"
#include "cbseries/series_term.hpp"
#include "cbseries/verify.hpp"
