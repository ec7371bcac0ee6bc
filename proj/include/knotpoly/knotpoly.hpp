#pragma once

#include "knotpoly/apolygon.hpp"
#include "knotpoly/bipoly.hpp"
#include "knotpoly/error.hpp"
#include "knotpoly/glue_sampler.hpp"
#include "knotpoly/laurent.hpp"
#include "knotpoly/repglue.hpp"
#include "knotpoly/satellite.hpp"
#include "knotpoly/slope.hpp"
#include "knotpoly/torus_knot.hpp"
