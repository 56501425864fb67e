#pragma once

// Umbrella header: the whole library in dependency order.

#include "nfdeg/version.hpp"
#include "nfdeg/errors.hpp"
#include "nfdeg/exact.hpp"
#include "nfdeg/rng.hpp"
#include "nfdeg/linalg.hpp"
#include "nfdeg/symplectic.hpp"
#include "nfdeg/pencil.hpp"
#include "nfdeg/cohomology.hpp"
#include "nfdeg/normal_function.hpp"
#include "nfdeg/degree.hpp"
#include "nfdeg/json_io.hpp"
#include "nfdeg/suite.hpp"
