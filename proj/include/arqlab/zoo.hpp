#pragma once

#include "arqlab/zoo/brauer.hpp"
#include "arqlab/zoo/nakayama.hpp"
#include "arqlab/zoo/reflection.hpp"
#include "arqlab/zoo/trivial_extension.hpp"
