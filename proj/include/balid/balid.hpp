#pragma once

#include "balid/bfile.hpp"
#include "balid/catalog.hpp"
#include "balid/egf.hpp"
#include "balid/error.hpp"
#include "balid/gf.hpp"
#include "balid/identity.hpp"
#include "balid/poly.hpp"
#include "balid/quadext.hpp"
#include "balid/rational.hpp"
#include "balid/report.hpp"
#include "balid/sequences.hpp"
