#pragma once

#include "hopspan/analysis.hpp"
#include "hopspan/core.hpp"
#include "hopspan/dumbbell.hpp"
#include "hopspan/experiment.hpp"
#include "hopspan/io.hpp"
#include "hopspan/line_spanner.hpp"
#include "hopspan/random.hpp"
#include "hopspan/tree_decomposition.hpp"
#include "hopspan/tree_metric.hpp"
#include "hopspan/tree_spanner.hpp"
#include "hopspan/wspd.hpp"
