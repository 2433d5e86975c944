#pragma once

// Umbrella header for the whole library.

#include "hesskit/acceptance.hpp"
#include "hesskit/checks.hpp"
#include "hesskit/error.hpp"
#include "hesskit/families.hpp"
#include "hesskit/fp.hpp"
#include "hesskit/fp_univariate.hpp"
#include "hesskit/hessian.hpp"
#include "hesskit/identity.hpp"
#include "hesskit/matrix.hpp"
#include "hesskit/poly.hpp"
#include "hesskit/poly_io.hpp"
#include "hesskit/rational.hpp"
#include "hesskit/resultant.hpp"
#include "hesskit/rng.hpp"
#include "hesskit/sampling.hpp"
#include "hesskit/serialize.hpp"
#include "hesskit/varset.hpp"
#include "hesskit/version.hpp"
