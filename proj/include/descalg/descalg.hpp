#pragma once

#include "descalg/coxeter.hpp"
#include "descalg/covering.hpp"
#include "descalg/descent_algebra.hpp"
#include "descalg/errors.hpp"
#include "descalg/generator_set.hpp"
#include "descalg/graph.hpp"
#include "descalg/monodromy.hpp"
#include "descalg/recoil_classes.hpp"
#include "descalg/verify.hpp"
