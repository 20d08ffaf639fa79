#pragma once

#include "affine_cores/error.hpp"
#include "affine_cores/partition.hpp"
#include "affine_cores/abacus.hpp"
#include "affine_cores/coxeter.hpp"
#include "affine_cores/projection.hpp"
#include "affine_cores/alcove.hpp"
#include "affine_cores/bruhat.hpp"
#include "affine_cores/type_a.hpp"
#include "affine_cores/svg.hpp"
#include "affine_cores/json_io.hpp"
#include "affine_cores/verify.hpp"
