#ifndef MULTICOH_MULTICOH_HPP
#define MULTICOH_MULTICOH_HPP

// Exact sheaf cohomology of decomposable bundles on products of
// projective spaces: dimension tables, regularity, aCM and splitting
// criteria, Koszul-complex identities, and the expression DSL.

#include "multicoh/bigint.hpp"
#include "multicoh/cohomology.hpp"
#include "multicoh/criteria.hpp"
#include "multicoh/interval.hpp"
#include "multicoh/koszul.hpp"
#include "multicoh/parse.hpp"
#include "multicoh/print.hpp"
#include "multicoh/sheaf.hpp"
#include "multicoh/space.hpp"
#include "multicoh/support.hpp"

#endif  // MULTICOH_MULTICOH_HPP
