#pragma once

// Umbrella header.

#include "olc/core.hpp"
#include "olc/dispatch.hpp"
#include "olc/easy_solvers.hpp"
#include "olc/gadget_jj1.hpp"
#include "olc/gadget_rainbow.hpp"
#include "olc/json_io.hpp"
#include "olc/kernel.hpp"
#include "olc/ljj4.hpp"
#include "olc/oracle.hpp"
#include "olc/patterns.hpp"
#include "olc/single_edge.hpp"
