#pragma once

#include "symsum/integers.hpp"
#include "symsum/ring.hpp"
#include "symsum/group.hpp"
#include "symsum/sums.hpp"
#include "symsum/nicety.hpp"
#include "symsum/evaluate.hpp"
#include "symsum/polyparse.hpp"
