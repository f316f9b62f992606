#pragma once

#include "error.hpp"
#include "linalg.hpp"
#include "rational.hpp"
#include "group.hpp"
#include "modular.hpp"
#include "double.hpp"
#include "inclusions.hpp"
#include "temperley_lieb.hpp"
#include "statistics.hpp"
#include "relations.hpp"
#include "wedge.hpp"
#include "zf.hpp"
#include "spin_chain.hpp"
