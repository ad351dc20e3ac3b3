#pragma once

#include "arqlab/analysis/ideals.hpp"
#include "arqlab/analysis/nakayama.hpp"
#include "arqlab/analysis/short_cycles.hpp"
#include "arqlab/analysis/slices.hpp"
#include "arqlab/analysis/pipeline.hpp"
#include "arqlab/analysis/report.hpp"
