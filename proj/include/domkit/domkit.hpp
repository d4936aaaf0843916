#pragma once

#include "domkit/bipartite.hpp"
#include "domkit/bitset.hpp"
#include "domkit/bounds.hpp"
#include "domkit/families.hpp"
#include "domkit/graph.hpp"
#include "domkit/io.hpp"
#include "domkit/prng.hpp"
#include "domkit/rational.hpp"
#include "domkit/solvers.hpp"
#include "domkit/transform.hpp"
