#pragma once

// Umbrella header: the whole library is header-only, so including this pulls
// in everything from the permutation engine up to the constructions and the
// reporting layer.

#include "arcstab/action.hpp"
#include "arcstab/bigint.hpp"
#include "arcstab/blocks.hpp"
#include "arcstab/bounds.hpp"
#include "arcstab/catalog.hpp"
#include "arcstab/constructions/covers.hpp"
#include "arcstab/constructions/degree6.hpp"
#include "arcstab/constructions/two_block.hpp"
#include "arcstab/constructions/wreath.hpp"
#include "arcstab/error.hpp"
#include "arcstab/f2.hpp"
#include "arcstab/graph.hpp"
#include "arcstab/graph_aut.hpp"
#include "arcstab/io.hpp"
#include "arcstab/perm.hpp"
#include "arcstab/perm_group.hpp"
#include "arcstab/perm_iso.hpp"
#include "arcstab/px.hpp"
#include "arcstab/report.hpp"
