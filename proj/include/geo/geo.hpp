#pragma once

#include "geo/core.hpp"
#include "geo/euclid.hpp"
#include "geo/inversive.hpp"
#include "geo/klein.hpp"
#include "geo/moebius.hpp"
#include "geo/poincare.hpp"
#include "geo/spherical.hpp"
