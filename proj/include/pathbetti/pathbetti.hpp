#pragma once

// Umbrella header: graded Betti numbers of powers of path ideals of
// paths, computed three independent ways (closed form, recurrence,
// generating function) and cross-checked against simplicial homology.

#include "bigint.hpp"
#include "monomial.hpp"
#include "ideal.hpp"
#include "path_family.hpp"
#include "betti_table.hpp"
#include "closed_form.hpp"
#include "recursion.hpp"
#include "series.hpp"
#include "genfunc.hpp"
#include "oracle.hpp"
#include "hilbert.hpp"
#include "io.hpp"
