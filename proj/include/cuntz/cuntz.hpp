#pragma once

// Exact symbolic computation in the dense *-subalgebra of the Cuntz
// algebra O_n, organized around the groupoid picture: words and
// eventually periodic sequences, groupoid elements and cylinder sets,
// indicator-combination arithmetic, bimodule spectra, cocycles, and the
// Volterra subalgebra.

#include "cuntz/algebra.hpp"
#include "cuntz/cocycles.hpp"
#include "cuntz/groupoid.hpp"
#include "cuntz/parser.hpp"
#include "cuntz/rational.hpp"
#include "cuntz/spectral.hpp"
#include "cuntz/volterra.hpp"
#include "cuntz/words.hpp"
