#pragma once

// Umbrella header: the whole alliance-polynomial library.

#include "allipoly/alliance.hpp"
#include "allipoly/bigint.hpp"
#include "allipoly/canonical.hpp"
#include "allipoly/census.hpp"
#include "allipoly/closed_forms.hpp"
#include "allipoly/compare.hpp"
#include "allipoly/errors.hpp"
#include "allipoly/families.hpp"
#include "allipoly/fixtures.hpp"
#include "allipoly/graph.hpp"
#include "allipoly/graph_io.hpp"
#include "allipoly/invariants.hpp"
#include "allipoly/ops.hpp"
#include "allipoly/polynomial.hpp"
