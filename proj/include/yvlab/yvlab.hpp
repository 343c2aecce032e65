#pragma once

#include "bigint.hpp"
#include "coeff_theory.hpp"
#include "errors.hpp"
#include "kronecker.hpp"
#include "modular.hpp"
#include "painleve.hpp"
#include "polycore.hpp"
#include "schur_det.hpp"
#include "serialize.hpp"
#include "verify.hpp"
#include "yv_engine.hpp"
