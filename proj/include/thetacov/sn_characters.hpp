#pragma once

#include "thetacov/partitions.hpp"

namespace thetacov {

// Irreducible character of S(|lambda|) indexed by lambda, evaluated on the
// class of cycle type mu. Murnaghan-Nakayama on beta numbers, memoized per
// call. Requires |lambda| = |mu|.
long long sn_character(const Partition& lambda, const Partition& mu);

Integer sn_dimension(const Partition& lambda);

} // namespace thetacov
