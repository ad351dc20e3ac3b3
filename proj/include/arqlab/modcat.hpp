#pragma once

#include "arqlab/modcat/decompose.hpp"
#include "arqlab/modcat/hom.hpp"
#include "arqlab/modcat/module.hpp"
#include "arqlab/modcat/series.hpp"
