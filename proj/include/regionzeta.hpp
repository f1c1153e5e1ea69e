#pragma once

#include "regionzeta/arrangement.hpp"
#include "regionzeta/chambers.hpp"
#include "regionzeta/dpk.hpp"
#include "regionzeta/errors.hpp"
#include "regionzeta/factorization.hpp"
#include "regionzeta/isom.hpp"
#include "regionzeta/linalg.hpp"
#include "regionzeta/lp.hpp"
#include "regionzeta/poly.hpp"
#include "regionzeta/roots.hpp"
#include "regionzeta/scalar.hpp"
