#pragma once

#include "teichlab/angles.hpp"
#include "teichlab/block_model.hpp"
#include "teichlab/errors.hpp"
#include "teichlab/geodesics.hpp"
#include "teichlab/hyp_core.hpp"
#include "teichlab/sigma.hpp"
#include "teichlab/triangles.hpp"
