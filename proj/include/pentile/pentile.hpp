#pragma once

#include "pentile/angle.hpp"
#include "pentile/avc.hpp"
#include "pentile/builder.hpp"
#include "pentile/export.hpp"
#include "pentile/halfedge.hpp"
#include "pentile/pentagon.hpp"
#include "pentile/rational.hpp"
#include "pentile/realize.hpp"
#include "pentile/sphtrig.hpp"
#include "pentile/vec3.hpp"
