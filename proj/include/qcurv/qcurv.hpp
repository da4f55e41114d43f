#pragma once

// Umbrella header.

#include "algebra/int_poly.hpp"
#include "algebra/laurent.hpp"
#include "algebra/quadext.hpp"
#include "algebra/rational.hpp"
#include "algebra/root_isolation.hpp"
#include "asymptotics.hpp"
#include "bifurcation.hpp"
#include "catalog.hpp"
#include "geometry.hpp"
#include "io/json.hpp"
#include "io/report.hpp"
