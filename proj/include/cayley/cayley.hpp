#pragma once

#include "cayley/exactla.hpp"
#include "cayley/hull.hpp"
#include "cayley/polytope.hpp"
#include "cayley/complexes.hpp"
#include "cayley/facering.hpp"
#include "cayley/verify.hpp"
#include "cayley/io.hpp"
#include "cayley/suite.hpp"
