#pragma once

#include "classize/density.hpp"
#include "classize/errors.hpp"
#include "classize/forced.hpp"
#include "classize/formula.hpp"
#include "classize/model.hpp"
#include "classize/nodes.hpp"
#include "classize/parse.hpp"
#include "classize/periodic_set.hpp"
#include "classize/rational.hpp"
#include "classize/remainder.hpp"
#include "classize/schemas.hpp"
#include "classize/size.hpp"
