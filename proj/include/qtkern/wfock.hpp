#pragma once

#include "qtkern/wfock/modes.hpp"
#include "qtkern/wfock/structure.hpp"
#include "qtkern/wfock/vertex.hpp"
#include "qtkern/wfock/level.hpp"
#include "qtkern/wfock/verify.hpp"
#include "qtkern/wfock/relations.hpp"
#include "qtkern/wfock/correlator.hpp"
