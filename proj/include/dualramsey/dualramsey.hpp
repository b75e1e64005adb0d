#pragma once

#include "dualramsey/arrow.hpp"
#include "dualramsey/chain.hpp"
#include "dualramsey/error.hpp"
#include "dualramsey/fdrt.hpp"
#include "dualramsey/glue.hpp"
#include "dualramsey/graph.hpp"
#include "dualramsey/hom_enum.hpp"
#include "dualramsey/objects.hpp"
#include "dualramsey/srq.hpp"
