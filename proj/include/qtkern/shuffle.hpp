#pragma once

#include "qtkern/shuffle/omega.hpp"
#include "qtkern/shuffle/sampling.hpp"
#include "qtkern/shuffle/algebra.hpp"
#include "qtkern/shuffle/kernel.hpp"
#include "qtkern/shuffle/specialize.hpp"
#include "qtkern/shuffle/lemmas.hpp"
