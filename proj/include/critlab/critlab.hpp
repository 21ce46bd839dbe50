#pragma once

#include "bounds.hpp"
#include "coloring.hpp"
#include "degree_stats.hpp"
#include "discharging.hpp"
#include "enumerate.hpp"
#include "exact_real.hpp"
#include "fan.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "kempe.hpp"
#include "lemmas.hpp"
#include "prune.hpp"
#include "solver.hpp"
