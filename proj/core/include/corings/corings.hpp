#pragma once

#include "corings/algebra.hpp"
#include "corings/bimodule.hpp"
#include "corings/construct.hpp"
#include "corings/coring.hpp"
#include "corings/corings_morphism.hpp"
#include "corings/error.hpp"
#include "corings/ext_category.hpp"
#include "corings/field.hpp"
#include "corings/linalg.hpp"
#include "corings/matrix.hpp"
#include "corings/monoidal.hpp"
#include "corings/verdict.hpp"
