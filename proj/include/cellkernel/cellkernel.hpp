#pragma once

#include "cellkernel/combinatorics.hpp"
#include "cellkernel/diagram.hpp"
#include "cellkernel/error.hpp"
#include "cellkernel/group_algebra.hpp"
#include "cellkernel/linalg.hpp"
#include "cellkernel/ring.hpp"
#include "cellkernel/tensor.hpp"
#include "cellkernel/theorems.hpp"
