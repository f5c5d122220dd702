#pragma once

#include "sepkit/bench.hpp"
#include "sepkit/edge_separator.hpp"
#include "sepkit/errors.hpp"
#include "sepkit/flow.hpp"
#include "sepkit/framework.hpp"
#include "sepkit/generate.hpp"
#include "sepkit/graph.hpp"
#include "sepkit/important_cuts.hpp"
#include "sepkit/io.hpp"
#include "sepkit/labeling.hpp"
#include "sepkit/metric_labeling.hpp"
#include "sepkit/oracles.hpp"
#include "sepkit/rational.hpp"
#include "sepkit/tree_decomposition.hpp"
#include "sepkit/typical_sequences.hpp"
