#pragma once

#include "cic/audit.hpp"
#include "cic/cnf.hpp"
#include "cic/color_set.hpp"
#include "cic/coloring.hpp"
#include "cic/cyclic_interval.hpp"
#include "cic/error.hpp"
#include "cic/families.hpp"
#include "cic/graph.hpp"
#include "cic/io.hpp"
#include "cic/solver.hpp"
