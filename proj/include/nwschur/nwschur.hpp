#pragma once

#include "nwschur/character.hpp"
#include "nwschur/diagram.hpp"
#include "nwschur/diagram_io.hpp"
#include "nwschur/errors.hpp"
#include "nwschur/fixed_point_sum.hpp"
#include "nwschur/laurent.hpp"
#include "nwschur/oracle.hpp"
#include "nwschur/permutation.hpp"
#include "nwschur/reports.hpp"
#include "nwschur/schur.hpp"
#include "nwschur/tabloid.hpp"
