#pragma once

#include "thermo/numkernel.hpp"
#include "thermo/spectral.hpp"
#include "thermo/plasma_sheet.hpp"
#include "thermo/slab.hpp"
#include "thermo/verify.hpp"
