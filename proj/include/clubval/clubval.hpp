#pragma once

#include <clubval/bundled_data.hpp>
#include <clubval/dataset.hpp>
#include <clubval/errors.hpp>
#include <clubval/regression.hpp>
#include <clubval/render.hpp>
#include <clubval/selection.hpp>
#include <clubval/special_functions.hpp>
#include <clubval/valuation.hpp>
