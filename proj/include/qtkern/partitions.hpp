#pragma once

#include "qtkern/partitions/partition.hpp"
#include "qtkern/partitions/tableau.hpp"
