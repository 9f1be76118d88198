#pragma once

#include "gdiff/canonical.hpp"
#include "gdiff/census.hpp"
#include "gdiff/codec.hpp"
#include "gdiff/families.hpp"
#include "gdiff/graph.hpp"
#include "gdiff/propositions.hpp"
#include "gdiff/r_graph.hpp"
#include "gdiff/search.hpp"
#include "gdiff/solvers.hpp"
#include "gdiff/vertex_set.hpp"
