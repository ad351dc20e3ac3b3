#pragma once

#include "arqlab/artheory/translate.hpp"
#include "arqlab/artheory/ar_sequence.hpp"
#include "arqlab/artheory/dynkin.hpp"
#include "arqlab/artheory/knit.hpp"
#include "arqlab/artheory/export.hpp"
