#ifndef RCOVER_RCOVER_HPP
#define RCOVER_RCOVER_HPP

#include "rcover/atoms.hpp"
#include "rcover/blocks.hpp"
#include "rcover/dot.hpp"
#include "rcover/families.hpp"
#include "rcover/graph.hpp"
#include "rcover/groups.hpp"
#include "rcover/iso.hpp"
#include "rcover/quotient.hpp"
#include "rcover/reduction.hpp"
#include "rcover/sidecar.hpp"
#include "rcover/text_format.hpp"

#endif  // RCOVER_RCOVER_HPP
