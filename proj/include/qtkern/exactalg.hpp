#pragma once

#include "qtkern/exactalg/errors.hpp"
#include "qtkern/exactalg/symbol.hpp"
#include "qtkern/exactalg/scalar.hpp"
#include "qtkern/exactalg/poly.hpp"
#include "qtkern/exactalg/gcd.hpp"
#include "qtkern/exactalg/ratfunc.hpp"
#include "qtkern/exactalg/text.hpp"
#include "qtkern/exactalg/series.hpp"
#include "qtkern/exactalg/qseries.hpp"
