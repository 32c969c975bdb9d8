#pragma once

#include "error.hpp"
#include "core.hpp"
#include "statistics.hpp"
#include "normal.hpp"
#include "rng.hpp"
#include "randgen.hpp"
#include "parallel.hpp"
#include "csv.hpp"
#include "calibration.hpp"
#include "reference_tables.hpp"
#include "harness.hpp"
