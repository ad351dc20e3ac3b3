#pragma once

#include "arqlab/algcore/algebra.hpp"
#include "arqlab/algcore/bound_quiver.hpp"
#include "arqlab/algcore/ideal.hpp"
#include "arqlab/algcore/invariants.hpp"
#include "arqlab/algcore/presentation.hpp"
#include "arqlab/algcore/quiver.hpp"
#include "arqlab/algcore/text_format.hpp"
