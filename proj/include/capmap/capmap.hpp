#pragma once

#include "capmap/appell.hpp"
#include "capmap/capacity.hpp"
#include "capmap/closed_form.hpp"
#include "capmap/gamma.hpp"
#include "capmap/grid.hpp"
#include "capmap/halfdisk.hpp"
#include "capmap/laurent.hpp"
#include "capmap/quadrature.hpp"
#include "capmap/sc_exterior.hpp"
#include "capmap/triangle.hpp"
#include "capmap/types.hpp"
