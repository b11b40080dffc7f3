#ifndef ROSTLAT_ROSTLAT_HPP
#define ROSTLAT_ROSTLAT_HPP

// Umbrella header: exact-arithmetic root-system lattices, centers of the
// simply connected groups as cocharacter maps, Tits-index subgroup
// decompositions, and the formal cup-product reduction of the restricted
// invariant.

#include "rostlat/center.hpp"
#include "rostlat/commands.hpp"
#include "rostlat/cup.hpp"
#include "rostlat/errors.hpp"
#include "rostlat/matrix.hpp"
#include "rostlat/numeric.hpp"
#include "rostlat/render.hpp"
#include "rostlat/report.hpp"
#include "rostlat/root_system.hpp"
#include "rostlat/rost.hpp"
#include "rostlat/smith.hpp"
#include "rostlat/tits.hpp"
#include "rostlat/verify.hpp"

#endif
