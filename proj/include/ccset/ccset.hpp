#pragma once

// Umbrella header: exact construction and exhaustive verification of
// perfect arrays, complete complementary codes, and symmetrical
// zero-correlation-zone code sets.

#include "core.hpp"
#include "correlate.hpp"
#include "verify.hpp"
#include "construct.hpp"
#include "io.hpp"
#include "fixtures.hpp"
