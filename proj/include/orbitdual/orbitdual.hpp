#ifndef ORBITDUAL_ORBITDUAL_HPP
#define ORBITDUAL_ORBITDUAL_HPP

#include "orbitdual/data.hpp"
#include "orbitdual/duality.hpp"
#include "orbitdual/error.hpp"
#include "orbitdual/orbits.hpp"
#include "orbitdual/packets.hpp"
#include "orbitdual/partitions.hpp"
#include "orbitdual/poset.hpp"
#include "orbitdual/rootdata.hpp"

#endif  // ORBITDUAL_ORBITDUAL_HPP
