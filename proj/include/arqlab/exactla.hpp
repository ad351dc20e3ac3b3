#pragma once

#include "arqlab/exactla/field.hpp"
#include "arqlab/exactla/matrix.hpp"
#include "arqlab/exactla/modp.hpp"
#include "arqlab/exactla/poly.hpp"
#include "arqlab/exactla/rational.hpp"
#include "arqlab/exactla/subspace.hpp"
