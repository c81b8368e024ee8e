#pragma once

#include "lrjacobi/nat.hpp"
#include "lrjacobi/jstate.hpp"
#include "lrjacobi/reduce.hpp"
#include "lrjacobi/jacobi.hpp"
