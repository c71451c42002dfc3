#pragma once

#include "bfile.hpp"
#include "errors.hpp"
#include "fast_count.hpp"
#include "numbers.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "quasipoly.hpp"
#include "random_model.hpp"
#include "ri_core.hpp"
#include "row_cache.hpp"
#include "semigroup.hpp"
