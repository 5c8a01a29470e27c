#pragma once

#include "qtkern/macdonald/symfunc.hpp"
#include "qtkern/macdonald/transition.hpp"
#include "qtkern/macdonald/context.hpp"
#include "qtkern/macdonald/tableau_formula.hpp"
#include "qtkern/macdonald/cauchy.hpp"
#include "qtkern/macdonald/checks.hpp"
