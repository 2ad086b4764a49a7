#pragma once

// Umbrella header: the whole library.

#include "tempoviz/causal_paths.hpp"
#include "tempoviz/errors.hpp"
#include "tempoviz/eval.hpp"
#include "tempoviz/geometry.hpp"
#include "tempoviz/higher_order.hpp"
#include "tempoviz/io.hpp"
#include "tempoviz/layout.hpp"
#include "tempoviz/metrics.hpp"
#include "tempoviz/path_collection.hpp"
#include "tempoviz/rng.hpp"
#include "tempoviz/svg.hpp"
#include "tempoviz/synthetic.hpp"
#include "tempoviz/temporal_graph.hpp"
