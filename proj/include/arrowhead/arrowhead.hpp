// arrowhead.hpp — umbrella header for the whole library.
#pragma once

#include "cayley.hpp"
#include "export.hpp"
#include "formulas.hpp"
#include "metrics.hpp"
#include "omega.hpp"
#include "verify.hpp"
