#pragma once

#include "shapeavoid/partition.hpp"
#include "shapeavoid/permutation.hpp"
#include "shapeavoid/rsk.hpp"
#include "shapeavoid/greene.hpp"
#include "shapeavoid/witness.hpp"
#include "shapeavoid/enumeration.hpp"
#include "shapeavoid/count_cache.hpp"
#include "shapeavoid/verify.hpp"
