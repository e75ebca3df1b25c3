#pragma once

// Umbrella header for the double-Hall-property toolkit.

#include "dhp/bipartite_graph.hpp"
#include "dhp/bits.hpp"
#include "dhp/colored_multigraph.hpp"
#include "dhp/cover_cycle.hpp"
#include "dhp/cycle_family.hpp"
#include "dhp/dhp_check.hpp"
#include "dhp/dot_export.hpp"
#include "dhp/errors.hpp"
#include "dhp/extremal.hpp"
#include "dhp/graph.hpp"
#include "dhp/instance_io.hpp"
#include "dhp/matching.hpp"
#include "dhp/orientation.hpp"
#include "dhp/parity_factor.hpp"
#include "dhp/path_partition.hpp"
#include "dhp/rainbow_cycle.hpp"
#include "dhp/rainbow_path.hpp"
#include "dhp/rng.hpp"
#include "dhp/sampling.hpp"
#include "dhp/search.hpp"
#include "dhp/thinning.hpp"
#include "dhp/two_factor.hpp"
#include "dhp/validate.hpp"
