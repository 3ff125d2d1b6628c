#pragma once

// Umbrella header: exact symbolic engine for special-polynomial families,
// the Hopf-Cole transform, and residual verification of the associated
// linear heat-type and nonlinear Burgers-type equations.

#include "hopfcole/rational.hpp"
#include "hopfcole/multipoly.hpp"
#include "hopfcole/ratfunc.hpp"
#include "hopfcole/families.hpp"
#include "hopfcole/linop.hpp"
#include "hopfcole/pde.hpp"
#include "hopfcole/numeric.hpp"
#include "hopfcole/json_io.hpp"
#include "hopfcole/verify.hpp"
#include "hopfcole/suites.hpp"
