#pragma once

#include "spinhoro/errors.hpp"
#include "spinhoro/complex_minkowski.hpp"
#include "spinhoro/spinor_flags.hpp"
#include "spinhoro/horospheres.hpp"
#include "spinhoro/lambda_lengths.hpp"
#include "spinhoro/polygons_grassmannians.hpp"
#include "spinhoro/report.hpp"
#include "spinhoro/svg.hpp"
