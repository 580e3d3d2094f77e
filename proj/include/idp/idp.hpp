#ifndef IDP_IDP_HPP
#define IDP_IDP_HPP

// Umbrella header for the whole workbench.

#include "idp/artifact.hpp"
#include "idp/bitset.hpp"
#include "idp/classify.hpp"
#include "idp/corpus.hpp"
#include "idp/graph.hpp"
#include "idp/independent_set.hpp"
#include "idp/induced.hpp"
#include "idp/instance.hpp"
#include "idp/io.hpp"
#include "idp/pattern.hpp"
#include "idp/reduce_cycle.hpp"
#include "idp/reduce_is.hpp"
#include "idp/reduce_sat.hpp"
#include "idp/rng.hpp"
#include "idp/sat.hpp"
#include "idp/solve.hpp"
#include "idp/solve_poly.hpp"
#include "idp/suites.hpp"

#endif
