#pragma once

#include "invforge/errors.hpp"
#include "invforge/graphs.hpp"
#include "invforge/group.hpp"
#include "invforge/io.hpp"
#include "invforge/linalg.hpp"
#include "invforge/multi_index.hpp"
#include "invforge/partition.hpp"
#include "invforge/psi.hpp"
#include "invforge/repth.hpp"
#include "invforge/scalar.hpp"
#include "invforge/sparse_poly.hpp"
#include "invforge/umbral.hpp"
#include "invforge/verify.hpp"
