#pragma once

#include "rospave/constructions.hpp"
#include "rospave/errors.hpp"
#include "rospave/fragmentation.hpp"
#include "rospave/free_sets.hpp"
#include "rospave/index_set.hpp"
#include "rospave/io.hpp"
#include "rospave/matrix.hpp"
#include "rospave/oracle.hpp"
#include "rospave/paving.hpp"
#include "rospave/rational.hpp"
