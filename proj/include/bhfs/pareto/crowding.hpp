#pragma once

#include <bhfs/core/objectives.hpp>

#include <span>
#include <vector>

namespace bhfs {

/// NSGA-II crowding distance. Points holding the minimum or maximum of either objective get
/// +infinity; every other point gets the sum over objectives of the normalised gap between
/// its neighbours in that objective's order.
std::vector<double> crowding_distance(std::span<const ObjectiveVector> front);

}  // namespace bhfs
