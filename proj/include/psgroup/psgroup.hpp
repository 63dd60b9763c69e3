#ifndef PSGROUP_PSGROUP_HPP
#define PSGROUP_PSGROUP_HPP

#include "braid.hpp"
#include "category.hpp"
#include "cocycle.hpp"
#include "errors.hpp"
#include "laurent.hpp"
#include "lk.hpp"
#include "permutation.hpp"
#include "psn.hpp"

#endif  // PSGROUP_PSGROUP_HPP
