#ifndef KPG_KPG_HPP
#define KPG_KPG_HPP

#include "kpg/degree.hpp"
#include "kpg/error.hpp"
#include "kpg/kgraph.hpp"
#include "kpg/repgraph.hpp"
#include "kpg/walk.hpp"
#include "kpg/scalar.hpp"
#include "kpg/algebra.hpp"
#include "kpg/module.hpp"
#include "kpg/fundamental.hpp"
#include "kpg/json_io.hpp"
#include "kpg/expr.hpp"

#endif
