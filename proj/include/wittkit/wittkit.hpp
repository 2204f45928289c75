#pragma once

/// Umbrella header.

#include "bigint.hpp"
#include "complex.hpp"
#include "endo.hpp"
#include "errors.hpp"
#include "eval.hpp"
#include "expr.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "poly.hpp"
#include "random.hpp"
#include "ring.hpp"
#include "selftest.hpp"
#include "smith.hpp"
#include "witt.hpp"
