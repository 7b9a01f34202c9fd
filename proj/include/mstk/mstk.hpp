#pragma once

/// Umbrella header for the metric space toolkit.

#include "mstk/descriptor.hpp"
#include "mstk/errors.hpp"
#include "mstk/function_space.hpp"
#include "mstk/graph.hpp"
#include "mstk/metric_core.hpp"
#include "mstk/padic.hpp"
#include "mstk/rational.hpp"
#include "mstk/rng.hpp"
#include "mstk/sampling.hpp"
#include "mstk/series.hpp"
#include "mstk/sphere.hpp"
#include "mstk/svg.hpp"
#include "mstk/vector_space.hpp"
