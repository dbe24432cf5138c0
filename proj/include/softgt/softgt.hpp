#pragma once

#include "softgt/errors.hpp"
#include "softgt/point_set.hpp"
#include "softgt/soft_core.hpp"
#include "softgt/gt_space.hpp"
#include "softgt/sgt_space.hpp"
#include "softgt/cover_search.hpp"
#include "softgt/cover_engine.hpp"
#include "softgt/witness_families.hpp"
#include "softgt/random_instances.hpp"
#include "softgt/laws.hpp"
