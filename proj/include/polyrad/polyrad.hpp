#pragma once

#include "polyrad/analysis.hpp"
#include "polyrad/calculus.hpp"
#include "polyrad/config.hpp"
#include "polyrad/constants.hpp"
#include "polyrad/errors.hpp"
#include "polyrad/field.hpp"
#include "polyrad/fundamental.hpp"
#include "polyrad/greens.hpp"
#include "polyrad/grid.hpp"
#include "polyrad/hypotheses.hpp"
#include "polyrad/iteration.hpp"
#include "polyrad/nonlinearity.hpp"
#include "polyrad/report.hpp"
#include "polyrad/runner.hpp"
