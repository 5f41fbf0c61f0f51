#pragma once

// Umbrella header for the LMVT solver library.

#include "lmvt/errors.hpp"      // IWYU pragma: export
#include "lmvt/exact_dp.hpp"    // IWYU pragma: export
#include "lmvt/fptas.hpp"       // IWYU pragma: export
#include "lmvt/instance.hpp"    // IWYU pragma: export
#include "lmvt/oracle.hpp"      // IWYU pragma: export
#include "lmvt/rational.hpp"    // IWYU pragma: export
#include "lmvt/reductions.hpp"  // IWYU pragma: export
