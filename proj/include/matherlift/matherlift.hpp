#pragma once

// umbrella header

#include "matherlift/rational.hpp"
#include "matherlift/matrix.hpp"
#include "matherlift/multipoly.hpp"
#include "matherlift/ideal.hpp"
#include "matherlift/groebner.hpp"
#include "matherlift/saturation.hpp"
#include "matherlift/hilbert.hpp"
#include "matherlift/power_series.hpp"
#include "matherlift/grassmann.hpp"
#include "matherlift/polar.hpp"
#include "matherlift/chernring.hpp"
#include "matherlift/ihcone.hpp"
#include "matherlift/lift.hpp"
#include "matherlift/builtin.hpp"
#include "matherlift/verdier.hpp"
